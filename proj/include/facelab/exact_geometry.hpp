#pragma once

/**
 * @file exact_geometry.hpp
 * @brief Exact rational scalars, points and hyperplanes.
 *
 * Scalars are GMP rationals. Every arithmetic result is kept in canonical
 * form (positive denominator, coprime terms), so equality is structural.
 * Nothing in this header touches floating point.
 */

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "facelab/error.hpp"

namespace facelab {

using Integer = mpz_class;

/// Exact rational number, always in canonical form (positive denominator,
/// coprime terms), so structural equality is numeric equality.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T v) : q_(static_cast<long>(v)) {}
    template <std::unsigned_integral T>
    Rational(T v) : q_(static_cast<unsigned long>(v)) {}
    Rational(const Integer& v) : q_(v) {}

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw PreconditionError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    template <std::integral A, std::integral B>
    Rational(A num, B den) : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

    Integer get_num() const { return q_.get_num(); }
    Integer get_den() const { return q_.get_den(); }
    const mpq_class& get_mpq() const { return q_; }
    std::string get_str() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.q_ == 0) throw PreconditionError("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(Rational a) {
        a.q_ = -a.q_;
        return a;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend int sgn(const Rational& r) { return ::sgn(r.q_); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_.get_str(); }

private:
    mpq_class q_;
};

/// Parses "p/q" or "p" (optional leading sign). The result is canonical.
inline Rational parse_rational(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'");

    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    if (text.front() == '-') n = -n;
    return Rational(n, d);
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline int sign(const Rational& r) { return sgn(r); }

/// A point (or direction) in Q^d.
class QVector {
public:
    QVector() = default;
    explicit QVector(std::size_t dim) : coords_(dim) {}
    explicit QVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    QVector(std::initializer_list<Rational> coords) : coords_(coords) {}

    static QVector from_ints(std::initializer_list<long> values) {
        QVector v(values.size());
        std::size_t i = 0;
        for (long x : values) v.coords_[i++] = x;
        return v;
    }

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
    }

    QVector& operator+=(const QVector& o) {
        check_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    QVector& operator-=(const QVector& o) {
        check_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    QVector& operator*=(const Rational& s) {
        for (auto& x : coords_) x *= s;
        return *this;
    }
    QVector& operator/=(const Rational& s) {
        require(s != 0, "division of a vector by zero");
        for (auto& x : coords_) x /= s;
        return *this;
    }

    friend QVector operator+(QVector a, const QVector& b) { return a += b; }
    friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
    friend QVector operator*(QVector a, const Rational& s) { return a *= s; }
    friend QVector operator*(const Rational& s, QVector a) { return a *= s; }
    friend QVector operator/(QVector a, const Rational& s) { return a /= s; }
    friend QVector operator-(QVector a) {
        for (auto& x : a.coords_) x = -x;
        return a;
    }

    friend bool operator==(const QVector& a, const QVector& b) { return a.coords_ == b.coords_; }

    friend Rational dot(const QVector& a, const QVector& b) {
        a.check_dim(b);
        Rational s = 0;
        for (std::size_t i = 0; i < a.coords_.size(); ++i) s += a.coords_[i] * b.coords_[i];
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const QVector& v) {
        os << '(';
        for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v.coords_[i];
        return os << ')';
    }

private:
    void check_dim(const QVector& o) const {
        if (o.dim() != dim())
            throw PreconditionError("dimension mismatch: " + std::to_string(dim()) + " vs " + std::to_string(o.dim()));
    }

    std::vector<Rational> coords_;
};

/// H = { x : normal . x = offset }.
class Hyperplane {
public:
    Hyperplane(QVector normal, Rational offset) : normal_(std::move(normal)), offset_(std::move(offset)) {
        require(!normal_.is_zero(), "hyperplane normal must be nonzero");
    }

    const QVector& normal() const { return normal_; }
    const Rational& offset() const { return offset_; }
    std::size_t dim() const { return normal_.dim(); }

    /// Signed residual normal . p - offset.
    Rational evaluate(const QVector& p) const {
        require(p.dim() == dim(), "dimension mismatch between point and hyperplane");
        return dot(normal_, p) - offset_;
    }

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

private:
    QVector normal_;
    Rational offset_;
};

inline int side(const Hyperplane& h, const QVector& p) { return sign(h.evaluate(p)); }

// ---------------------------------------------------------------------------
// Linear algebra
// ---------------------------------------------------------------------------

using RationalMatrix = std::vector<std::vector<Rational>>;

namespace detail {

inline Integer lcm_of_denominators(const std::vector<Rational>& row) {
    Integer l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_mpq().get_den_mpz_t());
    return l;
}

} // namespace detail

/// Rank by fraction-free (Bareiss) elimination. Rows are scaled to integers first.
inline int matrix_rank(const RationalMatrix& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<Integer>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        require(row.size() == cols, "ragged matrix");
        const Integer scale = detail::lcm_of_denominators(row);
        std::vector<Integer> r(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            Rational scaled = row[j] * scale;
            r[j] = scaled.get_num();
        }
        m.push_back(std::move(r));
    }

    const std::size_t n = m.size();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer v = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

/// Basis of { x : rows . x = 0 } via reduced row echelon form over Q.
inline std::vector<QVector> nullspace(RationalMatrix rows, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Rational inv = 1 / rows[r][col];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Rational f = rows[i][col];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }

    std::vector<QVector> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse of a square matrix by Gauss-Jordan elimination over Q.
inline RationalMatrix inverse(const RationalMatrix& a) {
    const std::size_t n = a.size();
    RationalMatrix m(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        require(a[i].size() == n, "inverse needs a square matrix");
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) throw PreconditionError("matrix is singular");
        std::swap(m[p], m[col]);
        const Rational inv = 1 / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    RationalMatrix out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
    return out;
}

/// Scales a nonzero rational vector to the unique primitive integer vector
/// with the same direction.
inline QVector primitive_direction(const QVector& v) {
    require(!v.is_zero(), "zero vector has no direction");
    const Integer scale = detail::lcm_of_denominators(v.coords());
    Integer g = 0;
    std::vector<Integer> ints(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        Rational s = v[i] * scale;
        ints[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    QVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(Integer(ints[i] / g));
    return out;
}

// ---------------------------------------------------------------------------
// Point-set primitives
// ---------------------------------------------------------------------------

/// Dimension of the affine hull; -1 for an empty list.
inline int affine_rank(std::span<const QVector> points) {
    if (points.empty()) return -1;
    RationalMatrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back((points[i] - points[0]).coords());
    return matrix_rank(diffs);
}

inline QVector barycenter(std::span<const QVector> points) {
    require(!points.empty(), "barycenter of an empty point list");
    QVector sum(points.front().dim());
    for (const auto& p : points) sum += p;
    return sum / Rational(static_cast<long>(points.size()));
}

/// The point of [p, q] on h. The segment must cross h strictly.
inline QVector segment_hyperplane_intersection(const QVector& p, const QVector& q, const Hyperplane& h) {
    const Rational sp = h.evaluate(p);
    const Rational sq = h.evaluate(q);
    if (sign(sp) * sign(sq) != -1) throw PreconditionError("segment does not strictly cross the hyperplane");
    const Rational t = sp / (sp - sq);
    return p + (q - p) * t;
}

/// Exact membership test: does some lambda >= 0 with sum 1 give sum lambda_i q_i = p?
/// Phase-one simplex over Q with Bland's rule (terminates, no cycling).
inline bool point_in_hull(std::span<const QVector> points, const QVector& p) {
    require(!points.empty(), "point_in_hull needs at least one point");
    const std::size_t d = p.dim();
    for (const auto& q : points) require(q.dim() == d, "dimension mismatch in point_in_hull");

    const std::size_t n = points.size();
    const std::size_t m = d + 1;
    const std::size_t rhs = n + m;
    RationalMatrix t(m, std::vector<Rational>(n + m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = i < d ? points[j][i] : Rational(1);
        t[i][rhs] = i < d ? p[i] : Rational(1);
        if (t[i][rhs] < 0)
            for (std::size_t j = 0; j <= rhs; ++j) t[i][j] = -t[i][j];
        t[i][n + i] = 1;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced costs of the phase-one objective (sum of artificials).
    std::vector<Rational> cost(n + m + 1);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) cost[rhs] -= t[i][rhs];

    for (;;) {
        std::size_t enter = rhs;
        for (std::size_t j = 0; j < n + m; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == rhs) break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = std::move(ratio);
            }
        }
        if (leave == m) throw InternalError("phase-one simplex is unbounded");

        const Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j <= rhs; ++j) t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j <= rhs; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return cost[rhs] == 0;
}

} // namespace facelab
