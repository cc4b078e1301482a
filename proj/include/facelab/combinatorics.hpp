#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace facelab {

/// Visits every k-subset of {0..n-1} in lexicographic order. `visit` receives
/// the sorted index vector and returns false to stop early. Returns false iff
/// stopped early.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace facelab
