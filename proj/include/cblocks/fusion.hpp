#pragma once

// Tensor-product multiplicities and level-ell fusion coefficients.

#include "cblocks/liealg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace cblocks {

/// Multiplicity of V_c in V_a (x) V_b (Klimyk/Racah-Speiser).
long long tensor_multiplicity(const SimpleAlgebra& alg, const Weight& a, const Weight& b,
                              const Weight& c);

/// Full decomposition of V_a (x) V_b.
std::map<Weight, long long> tensor_product(const SimpleAlgebra& alg, const Weight& a,
                                           const Weight& b);

/// Level-ell fusion data for one algebra. The weights of P_ell are indexed in
/// the order of level_weights(); most of the library works on these indices.
/// Thread-safe: the product cache is guarded by a mutex.
class FusionContext {
public:
    FusionContext(SimpleAlgebra alg, int ell);

    const SimpleAlgebra& algebra() const { return alg_; }
    int level() const { return ell_; }

    const std::vector<Weight>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    /// Index of w in P_ell; throws InputError if w is not of level <= ell.
    int index_of(const Weight& w) const;
    int dual_index(int i) const { return dual_[i]; }
    const Rational& casimir_at(int i) const { return casimir_[i]; }
    /// 2 (ell + h^vee)
    int kz_denominator() const { return 2 * (ell_ + alg_.dual_coxeter()); }

    /// Fusion coefficient N_{ij}^k (multiplicity of k in i x_ell j).
    long long fusion_coefficient(int i, int j, int k) const;
    /// r_{(a,b,c)}: rank of the 3-point block, i.e. N_{ab}^{c*}.
    long long three_point_rank(int a, int b, int c) const;
    long long three_point_rank(const Weight& a, const Weight& b, const Weight& c) const;

private:
    const std::vector<long long>& product(int i, int j) const;

    SimpleAlgebra alg_;
    int ell_;
    std::vector<Weight> weights_;
    std::map<Weight, int> index_;
    std::vector<int> dual_;
    std::vector<Rational> casimir_;

    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<std::vector<long long>>> products_;
};

/// Standard sl2 fusion rule: 1 iff a+b+c is even, the triangle inequality
/// holds and a+b+c <= 2 ell.
int sl2_three_point_rank(int ell, int a, int b, int c);

/// The non-zero level-1 weights, from the classical table.
std::vector<Weight> level1_weights_table(const SimpleAlgebra& alg);

}  // namespace cblocks
