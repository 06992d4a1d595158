#pragma once

// Degrees and first Chern classes of conformal-block bundles on M_{0,n}.

#include "cblocks/blocks.hpp"
#include "cblocks/moduli.hpp"

#include <array>
#include <span>
#include <vector>

namespace cblocks {

/// A factorization summand of the restriction to one boundary divisor, in the
/// affine coordinates where the points n-2, n-1, n sit at 0, 1, infinity and
/// points 1..n-3 are the free coordinates.
///
///   type 1: points of S collide with n-2     type 2: ... with n-1
///   type 3: points of S collide with n       type 4: points of S collide
///
/// `subset` is drawn from {1..n-3}; type 4 needs at least two points.
struct ResidueSpec {
    int divisor_type;
    PointSet subset;
    Weight mu;
    WeightTuple tuple;
};

/// Scalar by which the KZ residue acts on the mu-summand.
Rational kz_residue_scalar(const ResidueSpec& r);

/// The boundary divisor a (type, subset) pair describes.
BoundaryDivisor residue_divisor(int n, int divisor_type, PointSet subset);

/// Trace of the residue along that divisor:
/// sum_mu scalar(mu) r(side + mu) r(other side + mu^*).
Rational kz_residue_trace(const WeightTuple& t, int divisor_type, PointSet subset);

/// -sum_B Tr(Res_B) [B] for the coordinate choice above; a (non-canonical)
/// representative of c1.
DivisorClass kz_c1_representative(const WeightTuple& t);

/// Degree of V on M_{0,4}.
Rational degree_4pt(const WeightTuple& t);

/// Degree of V restricted to the F-curve f.
Rational degree_on_fcurve(const WeightTuple& t, const FCurve& f);

/// Canonical boundary representative of c1(V); one coefficient per unordered
/// partition {A, A^c}.
DivisorClass c1_class(const WeightTuple& t);

/// Coefficients of [D_2], ..., [D_{floor(n/2)}] in sum_{sigma in S_n} sigma^* c1(V).
std::vector<Rational> symmetrized_c1(const WeightTuple& t);

/// sl2 degree on M_{0,4} in closed form; `lambda` sorted ascending with even sum.
Rational sl2_closed_form_4pt(int ell, std::array<int, 4> lambda);

/// sl2 degree on f at the critical level sum(lambda)/2 - 1.
Rational critical_degree_on_fcurve(std::span<const int> lambda, const FCurve& f);

/// Degree on f of the level-1 sl_m bundle with weights varpi_{i_1}, ...,
/// varpi_{i_n} (varpi_0 = 0).
long long slm_level1_degree_on_fcurve(int m, std::span<const int> indices, const FCurve& f);

/// Whether the weighted-curve contraction with weights lambda_i / (ell + 1)
/// collapses f. Requires ell below the critical level.
bool hassett_contracted(std::span<const int> lambda, int ell, const FCurve& f);

}  // namespace cblocks
