#include "cblocks/fusion.hpp"

#include <algorithm>

namespace cblocks {

namespace {

Labels shifted_sum(const Labels& a, const Labels& nu)
{
    Labels x(a);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] += nu[i] + 1;
    return x;
}

// Moves x (rho-shifted) into the interior of the fundamental alcove of level
// k = ell + h^vee. Returns the sign of the affine Weyl element, 0 on a wall.
int reflect_to_alcove(const SimpleAlgebra& alg, Labels& x, int k)
{
    const int r = alg.rank();
    const auto& a = alg.comarks();
    const auto& theta = alg.theta();
    int sign = 1;
    while (true) {
        int i = 0;
        while (i < r && x[i] >= 0)
            ++i;
        if (i < r) {
            const int c = x[i];
            const auto& alpha = alg.simple_root(i);
            for (int j = 0; j < r; ++j)
                x[j] -= c * alpha[j];
            sign = -sign;
            continue;
        }
        int lev = 0;
        for (int j = 0; j < r; ++j)
            lev += a[j] * x[j];
        if (lev > k) {
            const int c = lev - k;
            for (int j = 0; j < r; ++j)
                x[j] -= c * theta[j];
            sign = -sign;
            continue;
        }
        if (lev == k)
            return 0;
        for (int v : x)
            if (v == 0)
                return 0;
        return sign;
    }
}

}  // namespace

std::map<Weight, long long> tensor_product(const SimpleAlgebra& alg, const Weight& a,
                                           const Weight& b)
{
    alg.check(a);
    alg.check(b);
    const bool swap = weyl_dimension(alg, a) < weyl_dimension(alg, b);
    const Weight& big = swap ? b : a;
    const Weight& small = swap ? a : b;
    std::map<Weight, long long> out;
    for (const auto& [nu, m] : weight_multiplicities(alg, small)) {
        Labels x = shifted_sum(big.labels(), nu);
        const int s = reflect_to_dominant(alg, x);
        if (s == 0)
            continue;
        for (auto& v : x)
            v -= 1;
        out[Weight(std::move(x))] += s * m;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

long long tensor_multiplicity(const SimpleAlgebra& alg, const Weight& a, const Weight& b,
                              const Weight& c)
{
    alg.check(c);
    auto prod = tensor_product(alg, a, b);
    auto it = prod.find(c);
    return it == prod.end() ? 0 : it->second;
}

// ---------------------------------------------------------------------------

FusionContext::FusionContext(SimpleAlgebra alg, int ell) : alg_(std::move(alg)), ell_(ell)
{
    if (ell < 0)
        throw InputError("level must be non-negative");
    weights_ = level_weights(alg_, ell_);
    for (std::size_t i = 0; i < weights_.size(); ++i)
        index_.emplace(weights_[i], static_cast<int>(i));
    for (const auto& w : weights_) {
        dual_.push_back(index_.at(dual_weight(alg_, w)));
        casimir_.push_back(casimir(alg_, w));
    }
}

int FusionContext::index_of(const Weight& w) const
{
    alg_.check(w);
    auto it = index_.find(w);
    if (it == index_.end())
        throw InputError("weight " + w.to_string() + " has level " +
                         std::to_string(cblocks::level(alg_, w)) + " > " + std::to_string(ell_));
    return it->second;
}

const std::vector<long long>& FusionContext::product(int i, int j) const
{
    if (i > j)
        std::swap(i, j);
    std::lock_guard lock(mutex_);
    auto& slot = products_[{i, j}];
    if (slot)
        return *slot;

    const Weight& wi = weights_[i];
    const Weight& wj = weights_[j];
    const bool iter_i = weyl_dimension(alg_, wi) < weyl_dimension(alg_, wj);
    const Weight& big = iter_i ? wj : wi;
    const Weight& small = iter_i ? wi : wj;
    const int k = ell_ + alg_.dual_coxeter();

    auto v = std::make_unique<std::vector<long long>>(weights_.size(), 0);
    for (const auto& [nu, m] : weight_multiplicities(alg_, small)) {
        Labels x = shifted_sum(big.labels(), nu);
        const int s = reflect_to_alcove(alg_, x, k);
        if (s == 0)
            continue;
        for (auto& c : x)
            c -= 1;
        (*v)[index_.at(Weight(std::move(x)))] += s * m;
    }
    for (long long c : *v)
        if (c < 0)
            throw InvariantError("negative fusion coefficient in " + alg_.name());
    slot = std::move(v);
    return *slot;
}

long long FusionContext::fusion_coefficient(int i, int j, int k) const
{
    return product(i, j)[k];
}

long long FusionContext::three_point_rank(int a, int b, int c) const
{
    // Symmetric in all arguments; query the pair with the smallest indices.
    int t[3] = {a, b, c};
    std::sort(t, t + 3);
    return product(t[0], t[1])[dual_[t[2]]];
}

long long FusionContext::three_point_rank(const Weight& a, const Weight& b, const Weight& c) const
{
    return three_point_rank(index_of(a), index_of(b), index_of(c));
}

int sl2_three_point_rank(int ell, int a, int b, int c)
{
    if (ell < 0 || a < 0 || b < 0 || c < 0 || a > ell || b > ell || c > ell)
        throw InputError("sl2 weights must lie in [0, ell]");
    const int s = a + b + c;
    if (s % 2 != 0 || s > 2 * ell)
        return 0;
    const int m = std::max({a, b, c});
    return 2 * m <= s ? 1 : 0;
}

std::vector<Weight> level1_weights_table(const SimpleAlgebra& alg)
{
    const std::size_t r = alg.rank();
    auto fund = [&](std::size_t i) { return Weight::fundamental(r, i); };
    std::vector<Weight> out;
    switch (alg.family()) {
    case Family::A:
    case Family::C:
        for (std::size_t i = 1; i <= r; ++i)
            out.push_back(fund(i));
        break;
    case Family::B: out = {fund(1), fund(r)}; break;
    case Family::D: out = {fund(1), fund(r - 1), fund(r)}; break;
    case Family::E:
        if (r == 6)
            out = {fund(1), fund(6)};
        else if (r == 7)
            out = {fund(7)};
        break;
    case Family::F: out = {fund(4)}; break;
    case Family::G: out = {fund(1)}; break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cblocks
