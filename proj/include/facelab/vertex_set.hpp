#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "facelab/error.hpp"

namespace facelab {

/// A subset of the vertex indices {0, ..., universe-1} of one polytope.
///
/// Ordering is lexicographic on the sorted index list, which is the
/// canonical face order used for ids everywhere.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(std::size_t universe, std::span<const std::size_t> members) {
        VertexSet s(universe);
        for (auto v : members) s.insert(v);
        return s;
    }
    static VertexSet of(std::size_t universe, std::initializer_list<std::size_t> members) {
        return of(universe, std::span<const std::size_t>(members.begin(), members.size()));
    }
    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    std::size_t universe() const { return universe_; }

    void insert(std::size_t v) {
        require(v < universe_, "vertex index " + std::to_string(v) + " out of range");
        words_[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    void erase(std::size_t v) {
        if (v < universe_) words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
    bool contains(std::size_t v) const {
        return v < universe_ && (words_[v / 64] >> (v % 64) & 1U) != 0;
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) {
        a.check_universe(b);
        for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] &= b.words_[i];
        return a;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) {
        a.check_universe(b);
        for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] |= b.words_[i];
        return a;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        a.check_universe(b);
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            const auto diff = a.words_[i] ^ b.words_[i];
            if (!diff) continue;
            // The lowest differing index decides, unless the side lacking it
            // has no further elements (then it is a proper prefix).
            const auto bit = static_cast<std::size_t>(std::countr_zero(diff));
            const bool a_has = (a.words_[i] >> bit & 1U) != 0;
            const VertexSet& other = a_has ? b : a;
            const bool other_continues = other.any_above(i * 64 + bit);
            const bool a_less = a_has ? other_continues : !other_continues;
            return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const {
        std::size_t h = universe_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    bool any_above(std::size_t pos) const {
        std::size_t word = pos / 64;
        const std::size_t bit = pos % 64;
        const std::uint64_t high = bit == 63 ? 0 : words_[word] & (~std::uint64_t{0} << (bit + 1));
        if (high) return true;
        for (++word; word < words_.size(); ++word)
            if (words_[word]) return true;
        return false;
    }

    void check_universe(const VertexSet& o) const {
        if (o.universe_ != universe_) throw PreconditionError("vertex sets over different polytopes");
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Canonical text id of a face: sorted vertex indices joined by '-'.
/// The empty face is rendered as "empty".
inline std::string face_id_string(const VertexSet& s) {
    if (s.empty()) return "empty";
    std::string out;
    for (auto v : s.indices()) {
        if (!out.empty()) out += '-';
        out += std::to_string(v);
    }
    return out;
}

inline VertexSet parse_face_id(std::string_view text, std::size_t universe) {
    VertexSet s(universe);
    if (text == "empty") return s;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto dash = text.find('-', start);
        const auto token = text.substr(start, dash == std::string_view::npos ? std::string_view::npos : dash - start);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos)
            throw ParseError("malformed face id '" + std::string(text) + "'");
        const auto v = std::stoul(std::string(token));
        if (v >= universe) throw ParseError("face id '" + std::string(text) + "' names a vertex out of range");
        s.insert(v);
        if (dash == std::string_view::npos) break;
        start = dash + 1;
    }
    return s;
}

} // namespace facelab

template <>
struct std::hash<facelab::VertexSet> {
    std::size_t operator()(const facelab::VertexSet& s) const noexcept { return s.hash(); }
};
