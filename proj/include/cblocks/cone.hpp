#pragma once

// Exact rational polyhedral cones, built on the double description method.

#include "cblocks/chern.hpp"
#include "cblocks/linalg.hpp"

#include <vector>

namespace cblocks {

/// Rays in R^ambient_dim (for conformal blocks: degree vectors over F-curves).
struct RayMatrix {
    std::size_t ambient_dim = 0;
    std::vector<RVector> rays;
};

/// (degree_on_fcurve(t, f)) over f_curves(n), in canonical order.
RVector degree_vector(const WeightTuple& t);

/// Generators of { x : A x >= 0 } as returned by the double description method.
struct ConeGenerators {
    std::vector<std::vector<Integer>> rays;       // pointed part, primitive
    std::vector<std::vector<Integer>> lineality;  // basis of the lineality space
};

/// Double description on integer constraint rows in R^dim, processed in the
/// order given.
ConeGenerators double_description(const std::vector<std::vector<Integer>>& constraints, std::size_t dim);

namespace detail {
/// Integer rows plus an int64 mirror, used when every entry is small.
struct IntRows {
    std::vector<std::vector<Integer>> big;
    std::vector<std::vector<long long>> small;
    void push_back(std::vector<Integer> row);
    /// Sign of <row i of a, row j of b>.
    friend int dot_sign(const IntRows& a, std::size_t i, const IntRows& b, std::size_t j);
};
}  // namespace detail

/// A cone spanned by finitely many rays, in H-representation relative to the
/// linear span of the rays. Build once, query many times.
class Cone {
public:
    explicit Cone(const RayMatrix& m);

    std::size_t ambient_dim() const { return ambient_dim_; }
    /// Dimension of the linear span of the rays.
    std::size_t dimension() const { return basis_.rank(); }
    /// Number of facet inequalities (relative to the span).
    std::size_t facet_count() const { return facets_.big.size(); }

    bool contains(const RVector& v) const;
    /// Minimal generating set: one primitive ray per extremal face, plus a
    /// +/- pair per lineality direction; sorted lexicographically.
    std::vector<RVector> extremal_rays() const;

private:
    std::vector<Integer> coordinates(const RVector& v) const;  // in the span basis, scaled to integers
    std::vector<std::size_t> extremal_among(const std::vector<std::size_t>& candidates,
                                            const detail::IntRows& facets) const;

    std::size_t ambient_dim_;
    std::vector<RVector> rays_;  // non-zero input rays, primitive, sorted
    Echelon basis_;              // RREF of the rays
    detail::IntRows coords_;     // rays_ in the span basis
    detail::IntRows facets_;
    std::vector<std::size_t> working_;  // a subset of rays_ that already spans the cone
};

/// A minimal generating set of the cone spanned by the rays, each primitive
/// integer; empty for the zero cone.
std::vector<RVector> extremal_rays(const RayMatrix& m);

/// Whether v is a non-negative combination of the rays (exact).
bool cone_contains(const RayMatrix& m, const RVector& v);

/// Generators of { x : <h, x> >= 0 for all h }, lineality included as +/-
/// pairs; primitive and sorted.
std::vector<RVector> dual_cone_generators(const std::vector<RVector>& halfspaces);

/// Lexicographic order on rational vectors.
bool lex_less(const RVector& a, const RVector& b);

}  // namespace cblocks
