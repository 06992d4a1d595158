#pragma once

// Boundary combinatorics of the moduli space of stable n-pointed rational
// curves: boundary divisors, F-curves and their intersection pairing.

#include "cblocks/exact.hpp"
#include "cblocks/pointset.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cblocks {

/// D_{A,A^c}, keyed by the side that does not contain the point n.
class BoundaryDivisor {
public:
    /// Canonicalizes: either side of the partition may be passed.
    BoundaryDivisor(int n, PointSet side);

    int n() const { return n_; }
    PointSet side() const { return side_; }
    PointSet complement() const { return full_set(n_) & ~side_; }
    /// "1,2"
    std::string key() const { return format_points(side_); }

    auto operator<=>(const BoundaryDivisor&) const = default;

private:
    int n_;
    PointSet side_;
};

/// F-curve (vital curve): a partition of {1..n} into four non-empty blocks,
/// ordered by smallest element.
class FCurve {
public:
    FCurve(int n, std::array<PointSet, 4> parts);

    int n() const { return n_; }
    const std::array<PointSet, 4>& parts() const { return parts_; }
    PointSet part(int k) const { return parts_[k]; }
    /// "1|2|3|4,5"
    std::string key() const;

    auto operator<=>(const FCurve&) const = default;

private:
    int n_;
    std::array<PointSet, 4> parts_;
};

/// Exact-rational combination of boundary divisors on M_{0,n}.
class DivisorClass {
public:
    explicit DivisorClass(int n) : n_(n) {}

    int n() const { return n_; }
    /// Absent divisors have coefficient zero.
    Rational coefficient(const BoundaryDivisor& d) const;
    void add(const BoundaryDivisor& d, const Rational& c);
    const std::map<BoundaryDivisor, Rational>& coefficients() const { return coeffs_; }

    DivisorClass& operator+=(const DivisorClass& other);
    DivisorClass& operator*=(const Rational& s);

private:
    int n_;
    std::map<BoundaryDivisor, Rational> coeffs_;
};

/// All 2^{n-1} - n - 1 boundary divisors, ordered by side size then
/// lexicographically by members.
std::vector<BoundaryDivisor> boundary_divisors(int n);

/// All S(n,4) F-curves, ordered lexicographically by block-assignment string.
std::vector<FCurve> f_curves(int n);

/// D . F in {-1, 0, 1}.
int pair(const BoundaryDivisor& d, const FCurve& f);

Rational pair_class(const DivisorClass& c, const FCurve& f);

/// Rank of Pic(M_{0,n}): 2^{n-1} - C(n,2) - 1.
long long pic_rank(int n);

/// The symmetric classes D_2, ..., D_{floor(n/2)}.
std::vector<DivisorClass> symmetrize_basis(int n);

/// Parses "1|2|3|4,5".
FCurve parse_fcurve(int n, std::string_view text);
/// Parses "4,5" (either side).
BoundaryDivisor parse_divisor(int n, std::string_view text);

/// Applies a permutation of the marked points (point i+1 goes to
/// perm[i]+1) to a point set.
PointSet permute_points(PointSet s, const std::vector<int>& perm);

}  // namespace cblocks
