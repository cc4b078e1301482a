#pragma once

#include "facelab/combinatorics.hpp"
#include "facelab/error.hpp"
#include "facelab/exact_geometry.hpp"
#include "facelab/face_hypergraph.hpp"
#include "facelab/generators.hpp"
#include "facelab/polytope.hpp"
#include "facelab/ridge_path.hpp"
#include "facelab/section.hpp"
#include "facelab/vertex_set.hpp"
