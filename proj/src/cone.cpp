#include "cblocks/cone.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

namespace cblocks {

namespace {

using IVector = std::vector<Integer>;

Integer idot(const IVector& a, const IVector& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

void make_primitive(IVector& v)
{
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// a * x - b * y, made primitive
IVector combine(const Integer& a, const IVector& x, const Integer& b, const IVector& y)
{
    IVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = a * x[i] - b * y[i];
    make_primitive(out);
    return out;
}

IVector to_integer(const RVector& v)
{
    RVector p = primitive(v);
    IVector out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = p[i].get_num();
    return out;
}

RVector to_rational(const IVector& v)
{
    RVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rational(v[i]);
    return out;
}

class Bits {
public:
    explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
    void resize(std::size_t n) { w_.resize((n + 63) / 64, 0); }
    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void set_first(std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i)
            set(i);
    }
    std::size_t popcount() const
    {
        std::size_t c = 0;
        for (auto x : w_)
            c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    /// *this = a & b; returns the popcount.
    std::size_t assign_and(const Bits& a, const Bits& b)
    {
        w_.resize(a.w_.size());
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            w_[i] = a.w_[i] & b.w_[i];
            c += static_cast<std::size_t>(std::popcount(w_[i]));
        }
        return c;
    }
    bool subset_of(const Bits& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }
    /// Sets the first n bits and clears the rest.
    void fill(std::size_t n)
    {
        std::fill(w_.begin(), w_.end(), 0);
        for (std::size_t i = 0; i < n / 64; ++i)
            w_[i] = ~std::uint64_t{0};
        if (n % 64)
            w_[n / 64] = (std::uint64_t{1} << (n % 64)) - 1;
    }
    /// *this &= o; returns the popcount.
    std::size_t and_with(const Bits& o)
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            w_[i] &= o.w_[i];
            c += static_cast<std::size_t>(std::popcount(w_[i]));
        }
        return c;
    }
    /// Calls f(i) for every set bit i < limit.
    template <class F>
    void for_each(std::size_t limit, F&& f) const
    {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                const std::size_t i = k * 64 + static_cast<std::size_t>(std::countr_zero(x));
                if (i >= limit)
                    return;
                f(i);
                x &= x - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> w_;
};

struct DDRay {
    IVector v;
    Bits tight;
};

std::vector<RVector> sorted_unique(std::vector<RVector> v)
{
    std::sort(v.begin(), v.end(), lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

bool lex_less(const RVector& a, const RVector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

RVector degree_vector(const WeightTuple& t)
{
    if (t.size() < 4)
        throw InputError("degree vectors need n >= 4");
    const auto curves = f_curves(static_cast<int>(t.size()));
    RVector out;
    out.reserve(curves.size());
    for (const auto& f : curves)
        out.push_back(degree_on_fcurve(t, f));
    return out;
}

namespace {

/// Incremental double description: generators of { x : <a, x> >= 0 } for the
/// constraints added so far.
class DoubleDescription {
public:
    explicit DoubleDescription(std::size_t dim) : dim_(dim)
    {
        for (std::size_t i = 0; i < dim; ++i) {
            IVector e(dim, Integer(0));
            e[i] = 1;
            lin_.push_back(std::move(e));
        }
    }

    void add(const IVector& a)
    {
        if (a.size() != dim_)
            throw InputError("constraint has the wrong dimension");
        const std::size_t c = added_++;
        if (c >= capacity_) {
            capacity_ = std::max<std::size_t>(64, 2 * capacity_);
            for (auto& r : rays_)
                r.tight.resize(capacity_);
        }
        auto pivot = std::find_if(lin_.begin(), lin_.end(), [&](const IVector& l) { return idot(a, l) != 0; });
        if (pivot != lin_.end())
            shrink_lineality(a, c, pivot);
        else
            cut(a, c);
    }

    ConeGenerators generators() const
    {
        ConeGenerators g;
        for (const auto& r : rays_)
            g.rays.push_back(r.v);
        for (auto l : lin_) {
            make_primitive(l);
            g.lineality.push_back(std::move(l));
        }
        return g;
    }

private:
    // The constraint is not constant on the lineality space: one lineality
    // direction becomes a ray, the rest is projected into the hyperplane.
    void shrink_lineality(const IVector& a, std::size_t c, std::vector<IVector>::iterator pivot)
    {
        IVector l0 = *pivot;
        lin_.erase(pivot);
        Integer s = idot(a, l0);
        if (s < 0) {
            for (auto& x : l0)
                x = -x;
            s = -s;
        }
        for (auto& l : lin_) {
            const Integer t = idot(a, l);
            if (t != 0)
                l = combine(s, l, t, l0);
        }
        for (auto& r : rays_) {
            const Integer t = idot(a, r.v);
            if (t != 0)
                r.v = combine(s, r.v, t, l0);
            r.tight.set(c);
        }
        DDRay fresh{std::move(l0), Bits(capacity_)};
        fresh.tight.set_first(c);
        rays_.push_back(std::move(fresh));
    }

    void cut(const IVector& a, std::size_t c)
    {
        std::vector<Integer> val(rays_.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            val[i] = idot(a, rays_[i].v);
            const int sg = sgn(val[i]);
            if (sg > 0)
                pos.push_back(i);
            else if (sg < 0)
                neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays_.size(); ++i)
                if (val[i] == 0)
                    rays_[i].tight.set(c);
            return;
        }
        const std::size_t eff_dim = dim_ - lin_.size();
        std::vector<DDRay> next;
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            if (val[i] < 0)
                continue;
            next.push_back(rays_[i]);
            if (val[i] == 0)
                next.back().tight.set(c);
        }
        Bits z(capacity_);
        std::array<std::size_t, 8> recent;
        recent.fill(static_cast<std::size_t>(-1));
        std::size_t next_slot = 0;
        for (std::size_t p : pos)
            for (std::size_t q : neg) {
                const std::size_t common = z.assign_and(rays_[p].tight, rays_[q].tight);
                if (eff_dim >= 2 && common + 2 < eff_dim)
                    continue;
                // Adjacent iff no third ray is tight on everything p and q
                // share. Witnesses cluster, so try recent ones first.
                auto is_witness = [&](std::size_t r) { return r != p && r != q && z.subset_of(rays_[r].tight); };
                bool adjacent = true;
                for (std::size_t w : recent)
                    if (w < rays_.size() && is_witness(w)) {
                        adjacent = false;
                        break;
                    }
                for (std::size_t r = 0; r < rays_.size() && adjacent; ++r)
                    if (is_witness(r)) {
                        adjacent = false;
                        recent[next_slot++ % recent.size()] = r;
                    }
                if (!adjacent)
                    continue;
                DDRay fresh{combine(val[p], rays_[q].v, val[q], rays_[p].v), z};
                fresh.tight.set(c);
                next.push_back(std::move(fresh));
            }
        rays_ = std::move(next);
    }

    std::size_t dim_;
    std::size_t added_ = 0;
    std::size_t capacity_ = 0;
    std::vector<IVector> lin_;
    std::vector<DDRay> rays_;
};

}  // namespace

ConeGenerators double_description(const std::vector<IVector>& constraints, std::size_t dim)
{
    DoubleDescription dd(dim);
    for (const auto& a : constraints)
        dd.add(a);
    return dd.generators();
}

// ---------------------------------------------------------------------------

namespace detail {

void IntRows::push_back(std::vector<Integer> row)
{
    constexpr long long limit = 1LL << 40;
    const bool fits = (big.empty() || !small.empty()) && std::all_of(row.begin(), row.end(), [](const Integer& x) {
        return x.fits_slong_p() && x.get_si() < limit && x.get_si() > -limit;
    });
    if (fits) {
        std::vector<long long> s(row.size());
        for (std::size_t i = 0; i < row.size(); ++i)
            s[i] = row[i].get_si();
        small.push_back(std::move(s));
    } else {
        small.clear();
    }
    big.push_back(std::move(row));
}

int dot_sign(const IntRows& a, std::size_t i, const IntRows& b, std::size_t j)
{
    if (!a.small.empty() && !b.small.empty()) {
        const auto& x = a.small[i];
        const auto& y = b.small[j];
        __int128 s = 0;
        for (std::size_t k = 0; k < x.size(); ++k)
            s += static_cast<__int128>(x[k]) * y[k];
        return (s > 0) - (s < 0);
    }
    return sgn(idot(a.big[i], b.big[j]));
}

}  // namespace detail

namespace {

detail::IntRows to_facets(ConeGenerators dual)
{
    std::vector<IVector> f = std::move(dual.rays);
    for (const auto& l : dual.lineality) {
        f.push_back(l);
        IVector neg = l;
        for (auto& x : neg)
            x = -x;
        f.push_back(std::move(neg));
    }
    std::sort(f.begin(), f.end());
    detail::IntRows out;
    for (auto& row : f)
        out.push_back(std::move(row));
    return out;
}

RMatrix lineality_basis(const detail::IntRows& facets, std::size_t k)
{
    RMatrix rows;
    for (const auto& f : facets.big)
        rows.push_back(to_rational(f));
    return null_space(rows, k);
}

}  // namespace

Cone::Cone(const RayMatrix& m) : ambient_dim_(m.ambient_dim)
{
    std::vector<RVector> rays;
    for (const auto& r : m.rays) {
        if (r.size() != ambient_dim_)
            throw InputError("ray length does not match the ambient dimension");
        if (std::any_of(r.begin(), r.end(), [](const Rational& x) { return x != 0; }))
            rays.push_back(primitive(r));
    }
    rays_ = sorted_unique(std::move(rays));
    basis_ = reduced_row_echelon(rays_);
    const std::size_t k = basis_.rank();
    if (k == 0)
        return;
    for (const auto& r : rays_)
        coords_.push_back(coordinates(r));

    // Short rays first: they tend to be extremal.
    std::vector<std::size_t> order(rays_.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Integer> norm(rays_.size());
    for (std::size_t i = 0; i < rays_.size(); ++i)
        for (const auto& x : coords_.big[i])
            norm[i] += abs(x);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return norm[a] < norm[b]; });

    // Redundant rays make double description expensive, so feed it a few
    // short rays first and then only rays that still fall outside.
    DoubleDescription dd(k);
    std::vector<char> used(rays_.size(), 0);
    auto use = [&](std::size_t i) {
        dd.add(coords_.big[i]);
        used[i] = 1;
        working_.push_back(i);
    };
    for (std::size_t j = 0; j < std::min(order.size(), 2 * k); ++j)
        use(order[j]);
    while (true) {
        facets_ = to_facets(dd.generators());
        std::vector<std::size_t> outside;
        for (auto i : order) {
            if (used[i])
                continue;
            for (std::size_t f = 0; f < facets_.big.size(); ++f)
                if (dot_sign(facets_, f, coords_, i) < 0) {
                    outside.push_back(i);
                    break;
                }
        }
        if (outside.empty())
            break;
        const std::size_t batch = std::max<std::size_t>(4 * k, outside.size() / 8);
        for (std::size_t j = 0; j < std::min(batch, outside.size()); ++j)
            use(outside[j]);
    }
    std::sort(working_.begin(), working_.end());
}

std::vector<Integer> Cone::coordinates(const RVector& v) const
{
    RVector y;
    y.reserve(basis_.rank());
    for (auto p : basis_.pivots)
        y.push_back(v[p]);
    return to_integer(y);
}

bool Cone::contains(const RVector& v) const
{
    if (v.size() != ambient_dim_)
        throw InputError("vector length does not match the ambient dimension");
    RVector rest = v;
    for (std::size_t j = 0; j < basis_.rank(); ++j) {
        const Rational c = v[basis_.pivots[j]];
        if (c == 0)
            continue;
        for (std::size_t i = 0; i < ambient_dim_; ++i)
            if (basis_.rows[j][i] != 0)
                rest[i] -= c * basis_.rows[j][i];
    }
    if (std::any_of(rest.begin(), rest.end(), [](const Rational& x) { return x != 0; }))
        return false;
    if (basis_.rank() == 0)
        return true;
    detail::IntRows y;
    y.push_back(coordinates(v));
    for (std::size_t f = 0; f < facets_.big.size(); ++f)
        if (dot_sign(facets_, f, y, 0) < 0)
            return false;
    return true;
}

std::vector<std::size_t> Cone::extremal_among(const std::vector<std::size_t>& candidates,
                                              const detail::IntRows& facets) const
{
    // `candidates` generates the cone, so a candidate spans an extremal face
    // exactly when no other candidate is tight on strictly more facets.
    const std::size_t nf = facets.big.size();
    std::vector<Bits> tight(candidates.size(), Bits(nf));
    std::vector<std::size_t> weight(candidates.size(), 0);
    for (std::size_t c = 0; c < candidates.size(); ++c)
        for (std::size_t f = 0; f < nf; ++f)
            if (dot_sign(facets, f, coords_, candidates[c]) == 0) {
                tight[c].set(f);
                ++weight[c];
            }
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (weight[c] == nf)
            continue;  // inside the lineality space
        bool extremal = true;
        for (std::size_t d = 0; d < candidates.size() && extremal; ++d) {
            // Rays of the lineality space are tight everywhere but span no face.
            if (d == c || weight[d] == nf || weight[d] < weight[c] || !tight[c].subset_of(tight[d]))
                continue;
            // Equal tight sets describe the same face; keep the first.
            if (weight[d] > weight[c] || d < c)
                extremal = false;
        }
        if (extremal)
            out.push_back(candidates[c]);
    }
    return out;
}

std::vector<RVector> Cone::extremal_rays() const
{
    const std::size_t k = basis_.rank();
    if (k == 0)
        return {};
    std::vector<RVector> out;
    for (auto i : extremal_among(working_, facets_))
        out.push_back(rays_[i]);
    for (const auto& b : lineality_basis(facets_, k)) {
        RVector v(ambient_dim_, Rational(0));
        for (std::size_t j = 0; j < k; ++j)
            if (b[j] != 0)
                for (std::size_t i = 0; i < ambient_dim_; ++i)
                    v[i] += b[j] * basis_.rows[j][i];
        v = primitive(v);
        RVector neg = v;
        for (auto& x : neg)
            x = -x;
        out.push_back(std::move(v));
        out.push_back(std::move(neg));
    }
    return sorted_unique(std::move(out));
}

std::vector<RVector> extremal_rays(const RayMatrix& m)
{
    if (m.rays.empty())
        throw InputError("extremal_rays needs at least one ray");
    return Cone(m).extremal_rays();
}

bool cone_contains(const RayMatrix& m, const RVector& v)
{
    return Cone(m).contains(v);
}

std::vector<RVector> dual_cone_generators(const std::vector<RVector>& halfspaces)
{
    if (halfspaces.empty())
        throw InputError("dual_cone_generators needs at least one halfspace");
    const std::size_t dim = halfspaces.front().size();
    std::vector<IVector> rows;
    for (const auto& h : halfspaces) {
        if (h.size() != dim)
            throw InputError("halfspaces have inconsistent dimensions");
        rows.push_back(to_integer(h));
    }
    ConeGenerators g = double_description(rows, dim);
    std::vector<RVector> out;
    for (const auto& r : g.rays)
        out.push_back(to_rational(r));
    for (const auto& l : g.lineality) {
        out.push_back(to_rational(l));
        IVector neg = l;
        for (auto& x : neg)
            x = -x;
        out.push_back(to_rational(neg));
    }
    return sorted_unique(std::move(out));
}

}  // namespace cblocks
