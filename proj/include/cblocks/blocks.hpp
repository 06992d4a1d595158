#pragma once

// Ranks of conformal blocks on the n-pointed rational curve, computed from
// 3-point fusion coefficients by factorization and propagation of vacua.

#include "cblocks/fusion.hpp"
#include "cblocks/pointset.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace cblocks {

/// Memoized rank engine for one (algebra, level). Obtain shared instances via
/// BlockContext::get(); all methods are thread-safe.
///
/// A "multiset" argument is a list of P_ell indices in any order; it is
/// canonicalized internally (sorted, zero weights removed).
class BlockContext {
public:
    BlockContext(SimpleAlgebra alg, int ell);

    /// Shared per-(algebra, level) instance.
    static std::shared_ptr<const BlockContext> get(const SimpleAlgebra& alg, int ell);

    const FusionContext& fusion() const { return fusion_; }
    const SimpleAlgebra& algebra() const { return fusion_.algebra(); }
    int level() const { return fusion_.level(); }

    /// r of the tuple given by these weight indices.
    Integer rank(std::vector<int> multiset) const;

    /// v[mu] = r(multiset + {mu}) for every mu in P_ell.
    std::shared_ptr<const std::vector<Integer>> attachment_vector(std::vector<int> multiset) const;

    /// Cache slot for derived quantities keyed by an opaque integer key
    /// (used by the degree computations).
    std::optional<Rational> cached_degree(const std::vector<int>& key) const;
    void store_degree(const std::vector<int>& key, const Rational& value) const;

    /// Number of memo entries kept before a cache is flushed; read from
    /// CBLOCKS_MEMO_CAP, default 4,000,000.
    static std::size_t memo_cap();

private:
    std::vector<int> canonical(std::vector<int> multiset) const;

    FusionContext fusion_;
    int zero_index_ = 0;

    mutable std::mutex mutex_;
    mutable std::map<std::vector<int>, std::shared_ptr<const std::vector<Integer>>> vectors_;
    mutable std::map<std::vector<int>, Rational> degrees_;
};

/// An ordered tuple of level-ell weights labelling a bundle on M_{0,n}.
class WeightTuple {
public:
    WeightTuple(SimpleAlgebra alg, int ell, std::vector<Weight> weights);

    /// sl2 shorthand: each entry is the single Dynkin label.
    static WeightTuple sl2(int ell, const std::vector<int>& labels);

    const SimpleAlgebra& algebra() const { return ctx_->algebra(); }
    int level() const { return ctx_->level(); }
    std::size_t size() const { return weights_.size(); }
    const std::vector<Weight>& weights() const { return weights_; }
    const Weight& operator[](std::size_t i) const { return weights_[i]; }
    /// Indices into P_ell.
    const std::vector<int>& indices() const { return indices_; }
    const BlockContext& context() const { return *ctx_; }

    /// Indices of the weights at the marked points of `s`.
    std::vector<int> indices_of(PointSet s) const;
    /// The tuple with entry i moved to position perm[i] (0-based).
    WeightTuple permuted(std::span<const int> perm) const;
    WeightTuple duals() const;
    std::string to_string() const;

private:
    std::shared_ptr<const BlockContext> ctx_;
    std::vector<Weight> weights_;
    std::vector<int> indices_;
};

/// r of the tuple.
Integer rank(const WeightTuple& t);

/// r of the |A|+1 tuple (lambda_a)_{a in A} extended by mu.
Integer attachment_rank(const WeightTuple& t, PointSet subset, const Weight& mu);

}  // namespace cblocks
