#pragma once

// Enumerations shared by the CLI, the verification suites and the cone
// experiments.

#include "cblocks/cone.hpp"

#include <functional>
#include <vector>

namespace cblocks {

/// Non-decreasing sequences of length n with entries in [lo, hi].
std::vector<std::vector<int>> sorted_tuples(int n, int lo, int hi);

/// Image index of every F-curve under the point permutation perm
/// (point i+1 goes to perm[i]+1).
std::vector<int> fcurve_permutation(int n, const std::vector<int>& perm);

/// The level-1 sl2 tuples with entries in {0,1} and even sum >= 4, ordered by
/// the size of the support, then lexicographically by support.
std::vector<WeightTuple> level1_basis_tuples(int n);

struct BasisReport {
    int n = 0;
    std::vector<WeightTuple> tuples;
    std::vector<RVector> degree_vectors;
    std::size_t rank = 0;
    long long expected = 0;
    bool ok() const { return static_cast<long long>(rank) == expected; }
};

BasisReport basis_report(int n);

/// Generators of the cone { x in N^1 : x . F >= 0 for every F-curve },
/// written as degree vectors over f_curves(n).
std::vector<RVector> nef_cone_generators(int n);

/// Distinct primitive degree vectors of the sl2 bundles on M_{0,n} at levels
/// 1..max_level (all weights <= level), closed under permuting the points;
/// sorted lexicographically. Zero vectors are dropped.
std::vector<RVector> sl2_cone_rays(int n, int max_level);

struct ConeExperiment {
    int n = 0;
    int max_level = 0;
    std::size_t candidate_rays = 0;
    std::size_t extremal_rays = 0;
    std::size_t dimension = 0;
    std::size_t nef_generators = 0;       // filled when the nef comparison ran
    std::size_t nef_generators_inside = 0;
    std::vector<RVector> rays;            // the extremal rays
};

/// Builds the sl2 cone; if compare_nef, also checks each nef-cone generator
/// for membership.
ConeExperiment sl2_cone_experiment(int n, int max_level, bool compare_nef);

}  // namespace cblocks
