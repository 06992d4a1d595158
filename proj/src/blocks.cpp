#include "cblocks/blocks.hpp"

#include <algorithm>
#include <cstdlib>

namespace cblocks {

BlockContext::BlockContext(SimpleAlgebra alg, int ell) : fusion_(std::move(alg), ell)
{
    zero_index_ = fusion_.index_of(Weight::zero(fusion_.algebra().rank()));
}

std::shared_ptr<const BlockContext> BlockContext::get(const SimpleAlgebra& alg, int ell)
{
    static std::mutex registry_mutex;
    static std::map<std::pair<std::string, int>, std::shared_ptr<const BlockContext>> registry;
    std::lock_guard lock(registry_mutex);
    auto& slot = registry[{alg.name(), ell}];
    if (!slot)
        slot = std::make_shared<const BlockContext>(alg, ell);
    return slot;
}

std::size_t BlockContext::memo_cap()
{
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("CBLOCKS_MEMO_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0)
                return static_cast<std::size_t>(v);
        }
        return std::size_t{4'000'000};
    }();
    return cap;
}

std::vector<int> BlockContext::canonical(std::vector<int> multiset) const
{
    std::erase(multiset, zero_index_);
    std::sort(multiset.begin(), multiset.end());
    return multiset;
}

std::shared_ptr<const std::vector<Integer>>
BlockContext::attachment_vector(std::vector<int> multiset) const
{
    auto key = canonical(std::move(multiset));
    {
        std::lock_guard lock(mutex_);
        auto it = vectors_.find(key);
        if (it != vectors_.end())
            return it->second;
    }

    const int P = static_cast<int>(fusion_.size());
    auto v = std::make_shared<std::vector<Integer>>(P, 0);
    if (key.empty()) {
        (*v)[zero_index_] = 1;
    } else {
        // r(B + {x} + {nu}) = sum_kappa r(B + {kappa}) r(x, nu, kappa^*)
        const int x = key.back();
        auto rest = key;
        rest.pop_back();
        auto prev = attachment_vector(std::move(rest));
        for (int kappa = 0; kappa < P; ++kappa) {
            const Integer& pk = (*prev)[kappa];
            if (pk == 0)
                continue;
            const int kd = fusion_.dual_index(kappa);
            for (int nu = 0; nu < P; ++nu) {
                const long long n = fusion_.three_point_rank(x, nu, kd);
                if (n != 0)
                    (*v)[nu] += pk * static_cast<long>(n);
            }
        }
    }

    std::lock_guard lock(mutex_);
    if (vectors_.size() >= memo_cap())
        vectors_.clear();
    auto [it, inserted] = vectors_.emplace(std::move(key), std::move(v));
    return it->second;
}

Integer BlockContext::rank(std::vector<int> multiset) const
{
    auto key = canonical(std::move(multiset));
    switch (key.size()) {
    case 0: return 1;
    case 1: return 0;
    case 2: return fusion_.dual_index(key[0]) == key[1] ? 1 : 0;
    case 3: return static_cast<long>(fusion_.three_point_rank(key[0], key[1], key[2]));
    default: break;
    }
    // Split off the last two weights:
    // r = sum_mu r(lambda_1..lambda_{n-2}, mu) r(lambda_{n-1}, lambda_n, mu^*)
    const int x = key[key.size() - 2];
    const int y = key.back();
    key.resize(key.size() - 2);
    auto head = attachment_vector(std::move(key));
    Integer total = 0;
    const int P = static_cast<int>(fusion_.size());
    for (int mu = 0; mu < P; ++mu) {
        if ((*head)[mu] == 0)
            continue;
        const long long n = fusion_.three_point_rank(x, y, fusion_.dual_index(mu));
        if (n != 0)
            total += (*head)[mu] * static_cast<long>(n);
    }
    return total;
}

std::optional<Rational> BlockContext::cached_degree(const std::vector<int>& key) const
{
    std::lock_guard lock(mutex_);
    auto it = degrees_.find(key);
    if (it == degrees_.end())
        return std::nullopt;
    return it->second;
}

void BlockContext::store_degree(const std::vector<int>& key, const Rational& value) const
{
    std::lock_guard lock(mutex_);
    if (degrees_.size() >= memo_cap())
        degrees_.clear();
    degrees_.emplace(key, value);
}

// ---------------------------------------------------------------------------

WeightTuple::WeightTuple(SimpleAlgebra alg, int ell, std::vector<Weight> weights)
    : ctx_(BlockContext::get(alg, ell)), weights_(std::move(weights))
{
    if (weights_.size() > static_cast<std::size_t>(kMaxPoints))
        throw InputError("too many marked points");
    indices_.reserve(weights_.size());
    for (const auto& w : weights_)
        indices_.push_back(ctx_->fusion().index_of(w));
}

WeightTuple WeightTuple::sl2(int ell, const std::vector<int>& labels)
{
    std::vector<Weight> ws;
    for (int l : labels)
        ws.emplace_back(Labels{l});
    return WeightTuple(SimpleAlgebra(Family::A, 1), ell, std::move(ws));
}

std::vector<int> WeightTuple::indices_of(PointSet s) const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < indices_.size(); ++i)
        if ((s >> i) & 1u)
            out.push_back(indices_[i]);
    return out;
}

WeightTuple WeightTuple::permuted(std::span<const int> perm) const
{
    if (perm.size() != weights_.size())
        throw InputError("permutation size mismatch");
    std::vector<Weight> ws(weights_.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        ws.at(perm[i]) = weights_[i];
    return WeightTuple(algebra(), level(), std::move(ws));
}

WeightTuple WeightTuple::duals() const
{
    std::vector<Weight> ws;
    for (const auto& w : weights_)
        ws.push_back(dual_weight(algebra(), w));
    return WeightTuple(algebra(), level(), std::move(ws));
}

std::string WeightTuple::to_string() const
{
    std::string s = algebra().name() + " level " + std::to_string(level()) + " (";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i)
            s += "; ";
        s += weights_[i].to_string();
    }
    return s + ")";
}

Integer rank(const WeightTuple& t)
{
    return t.context().rank(t.indices());
}

Integer attachment_rank(const WeightTuple& t, PointSet subset, const Weight& mu)
{
    if (subset & ~full_set(static_cast<int>(t.size())))
        throw InputError("subset refers to points outside 1..n");
    auto idx = t.indices_of(subset);
    idx.push_back(t.context().fusion().index_of(mu));
    return t.context().rank(std::move(idx));
}

}  // namespace cblocks
