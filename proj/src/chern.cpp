#include "cblocks/chern.hpp"

#include <algorithm>
#include <numeric>

namespace cblocks {

namespace {

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational checked_degree(Rational value, const char* what)
{
    value.canonicalize();
    if (!is_integral(value))
        throw InvariantError(std::string(what) + " came out non-integral: " + to_string(value));
    return value;
}

Rational casimir_sum(const FusionContext& fc, const std::vector<int>& idx)
{
    Rational s = 0;
    for (int i : idx)
        s += fc.casimir_at(i);
    return s;
}

// sum_mu c(mu) r(A + mu) r(A^c + mu^*)
Rational node_sum(const BlockContext& ctx, const std::vector<int>& side, const std::vector<int>& other)
{
    const auto& fc = ctx.fusion();
    auto va = ctx.attachment_vector(side);
    auto vb = ctx.attachment_vector(other);
    Rational s = 0;
    for (int mu = 0; mu < static_cast<int>(fc.size()); ++mu) {
        const Integer& a = (*va)[mu];
        if (a == 0)
            continue;
        const Integer& b = (*vb)[fc.dual_index(mu)];
        if (b == 0)
            continue;
        s += fc.casimir_at(mu) * Rational(a * b);
    }
    return s;
}

// Degree on M_{0,4} from P_ell indices.
Rational degree_4pt_indices(const BlockContext& ctx, std::array<int, 4> w)
{
    std::sort(w.begin(), w.end());
    const std::vector<int> key{-1, w[0], w[1], w[2], w[3]};
    if (auto hit = ctx.cached_degree(key))
        return *hit;

    const auto& fc = ctx.fusion();
    const Integer r = ctx.rank({w[0], w[1], w[2], w[3]});
    Rational total = Rational(r) * casimir_sum(fc, {w[0], w[1], w[2], w[3]});
    static constexpr int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (int lam = 0; lam < static_cast<int>(fc.size()); ++lam) {
        long long m = 0;
        for (const auto& p : pairings) {
            const long long a = fc.three_point_rank(w[p[0]], w[p[1]], lam);
            if (a == 0)
                continue;
            m += a * fc.three_point_rank(w[p[2]], w[p[3]], fc.dual_index(lam));
        }
        if (m)
            total -= fc.casimir_at(lam) * static_cast<long>(m);
    }
    total /= fc.kz_denominator();
    Rational deg = checked_degree(total, "degree on M_{0,4}");
    ctx.store_degree(key, deg);
    return deg;
}

void check_same_n(const WeightTuple& t, const FCurve& f)
{
    if (static_cast<int>(t.size()) != f.n())
        throw InputError("tuple has " + std::to_string(t.size()) + " weights but the F-curve lives on M_{0," +
                         std::to_string(f.n()) + "}");
}

void check_c1_input(const WeightTuple& t)
{
    if (t.size() < 4)
        throw InputError("first Chern classes need n >= 4 marked points");
}

std::array<int, 4> block_sums(std::span<const int> values, const FCurve& f)
{
    std::array<int, 4> nu{};
    for (int k = 0; k < 4; ++k)
        for (int p : members(f.part(k)))
            nu[k] += values[p - 1];
    return nu;
}

}  // namespace

// ---------------------------------------------------------------------------

BoundaryDivisor residue_divisor(int n, int divisor_type, PointSet subset)
{
    const PointSet coords = full_set(n - 3);
    if (subset == 0 || (subset & ~coords))
        throw InputError("residue subset must be a non-empty subset of 1..n-3");
    switch (divisor_type) {
    case 1: return BoundaryDivisor(n, subset | singleton(n - 2));
    case 2: return BoundaryDivisor(n, subset | singleton(n - 1));
    case 3: return BoundaryDivisor(n, subset | singleton(n));
    case 4:
        if (count(subset) < 2)
            throw InputError("type 4 residues need at least two colliding points");
        return BoundaryDivisor(n, subset);
    default: throw InputError("residue divisor type must be 1, 2, 3 or 4");
    }
}

Rational kz_residue_scalar(const ResidueSpec& r)
{
    const WeightTuple& t = r.tuple;
    const int n = static_cast<int>(t.size());
    if (n < 4)
        throw InputError("residues need n >= 4 marked points");
    residue_divisor(n, r.divisor_type, r.subset);  // validates
    const auto& fc = t.context().fusion();
    const int mu = fc.index_of(r.mu);

    Rational s_sum = casimir_sum(fc, t.indices_of(r.subset));
    Rational num = fc.casimir_at(mu);
    switch (r.divisor_type) {
    case 1: num -= fc.casimir_at(t.indices()[n - 3]) + s_sum; break;
    case 2: num -= fc.casimir_at(t.indices()[n - 2]) + s_sum; break;
    case 3: num += s_sum - fc.casimir_at(t.indices()[n - 1]); break;
    case 4: num -= s_sum; break;
    }
    Rational out = num / fc.kz_denominator();
    out.canonicalize();
    return out;
}

Rational kz_residue_trace(const WeightTuple& t, int divisor_type, PointSet subset)
{
    const int n = static_cast<int>(t.size());
    BoundaryDivisor d = residue_divisor(n, divisor_type, subset);
    PointSet side = subset;
    if (divisor_type <= 3)
        side |= singleton(n - 3 + divisor_type);
    const PointSet other = full_set(n) & ~side;
    (void)d;

    const auto& ctx = t.context();
    const auto& fc = ctx.fusion();
    auto va = ctx.attachment_vector(t.indices_of(side));
    auto vb = ctx.attachment_vector(t.indices_of(other));
    Rational tr = 0;
    for (int mu = 0; mu < static_cast<int>(fc.size()); ++mu) {
        const Integer& a = (*va)[mu];
        if (a == 0)
            continue;
        const Integer& b = (*vb)[fc.dual_index(mu)];
        if (b == 0)
            continue;
        ResidueSpec res{divisor_type, subset, fc.weights()[mu], t};
        tr += kz_residue_scalar(res) * Rational(a * b);
    }
    tr.canonicalize();
    return tr;
}

DivisorClass kz_c1_representative(const WeightTuple& t)
{
    check_c1_input(t);
    const int n = static_cast<int>(t.size());
    const PointSet fixed = singleton(n - 2) | singleton(n - 1) | singleton(n);
    DivisorClass c(n);
    for (const auto& d : boundary_divisors(n)) {
        // The side holding at most one of the three fixed points.
        PointSet x = d.side();
        if (count(x & fixed) > 1)
            x = d.complement();
        int type = 4;
        if (contains(x, n - 2))
            type = 1;
        else if (contains(x, n - 1))
            type = 2;
        else if (contains(x, n))
            type = 3;
        c.add(d, -kz_residue_trace(t, type, x & ~fixed));
    }
    return c;
}

Rational degree_4pt(const WeightTuple& t)
{
    if (t.size() != 4)
        throw InputError("degree_4pt needs exactly four weights");
    const auto& i = t.indices();
    return degree_4pt_indices(t.context(), {i[0], i[1], i[2], i[3]});
}

Rational degree_on_fcurve(const WeightTuple& t, const FCurve& f)
{
    check_same_n(t, f);
    const auto& ctx = t.context();
    const auto& fc = ctx.fusion();

    // Canonical key: each block as a sorted zero-free multiset, blocks sorted.
    std::array<std::vector<int>, 4> blocks;
    const int zero = fc.index_of(Weight::zero(fc.algebra().rank()));
    for (int k = 0; k < 4; ++k) {
        blocks[k] = t.indices_of(f.part(k));
        std::erase(blocks[k], zero);
        std::sort(blocks[k].begin(), blocks[k].end());
    }
    std::sort(blocks.begin(), blocks.end());
    std::vector<int> key{-2};
    for (const auto& b : blocks) {
        key.push_back(static_cast<int>(b.size()));
        key.insert(key.end(), b.begin(), b.end());
    }
    if (auto hit = ctx.cached_degree(key))
        return *hit;

    // deg = sum_{mu in P^4} deg(V_mu) prod_k r(N_k + mu_k^*), skipping zero ranks.
    std::array<std::vector<std::pair<int, Integer>>, 4> support;
    for (int k = 0; k < 4; ++k) {
        auto v = ctx.attachment_vector(blocks[k]);
        for (int mu = 0; mu < static_cast<int>(fc.size()); ++mu) {
            const Integer& r = (*v)[fc.dual_index(mu)];
            if (r != 0)
                support[k].emplace_back(mu, r);
        }
    }
    Rational total = 0;
    for (const auto& [m0, r0] : support[0])
        for (const auto& [m1, r1] : support[1]) {
            const Integer r01 = r0 * r1;
            for (const auto& [m2, r2] : support[2]) {
                const Integer r012 = r01 * r2;
                for (const auto& [m3, r3] : support[3]) {
                    Rational d = degree_4pt_indices(ctx, {m0, m1, m2, m3});
                    if (d != 0)
                        total += d * Rational(r012 * r3);
                }
            }
        }
    Rational deg = checked_degree(total, "degree on an F-curve");
    ctx.store_degree(key, deg);
    return deg;
}

DivisorClass c1_class(const WeightTuple& t)
{
    check_c1_input(t);
    const int n = static_cast<int>(t.size());
    const auto& ctx = t.context();
    const auto& fc = ctx.fusion();
    const Rational r(rank(t));
    DivisorClass c(n);
    for (const auto& d : boundary_divisors(n)) {
        const auto a = t.indices_of(d.side());
        const auto ac = t.indices_of(d.complement());
        const long i = static_cast<long>(a.size());
        Rational psi = r *
                       (Rational((n - i) * (n - i - 1)) * casimir_sum(fc, a) +
                        Rational(i * (i - 1)) * casimir_sum(fc, ac)) /
                       ((n - 1) * (n - 2));
        Rational coef = (psi - node_sum(ctx, a, ac)) / fc.kz_denominator();
        coef.canonicalize();
        c.add(d, coef);
    }
    return c;
}

std::vector<Rational> symmetrized_c1(const WeightTuple& t)
{
    check_c1_input(t);
    const int n = static_cast<int>(t.size());
    const auto& ctx = t.context();
    const auto& fc = ctx.fusion();
    const Rational r_sum = Rational(rank(t)) * casimir_sum(fc, t.indices());
    const PointSet all = full_set(n);

    std::vector<Rational> out;
    for (int i = 2; 2 * i <= n; ++i) {
        Rational nodes = 0;
        for (PointSet a = 0; a <= all; ++a) {
            if (count(a) != i)
                continue;
            nodes += node_sum(ctx, t.indices_of(a), t.indices_of(all & ~a));
        }
        Rational psi = Rational(binomial(n - 3, i - 1) + binomial(n - 3, n - i - 1)) * r_sum;
        Rational coef = Rational(factorial(i) * factorial(n - i)) * (psi - nodes) / fc.kz_denominator();
        coef.canonicalize();
        out.push_back(coef);
    }
    return out;
}

// ---------------------------------------------------------------------------

Rational sl2_closed_form_4pt(int ell, std::array<int, 4> l)
{
    if (!std::is_sorted(l.begin(), l.end()))
        throw InputError("closed form expects weights sorted ascending");
    if (l[0] < 0 || l[3] > ell)
        throw InputError("closed form expects 0 <= lambda_i <= ell");
    const int sum = l[0] + l[1] + l[2] + l[3];
    if (sum % 2 != 0)
        throw InputError("closed form expects an even weight sum");
    const long half = sum / 2;
    long v = 0;
    if (l[0] + l[3] >= l[1] + l[2])
        v = (ell + 1 - l[3]) * (half - ell);
    else
        v = (ell + 1 + l[0] - half) * (half - ell);
    return Rational(std::max(0L, v));
}

Rational critical_degree_on_fcurve(std::span<const int> lambda, const FCurve& f)
{
    if (static_cast<int>(lambda.size()) != f.n())
        throw InputError("weight count does not match the F-curve");
    int sum = 0;
    for (int l : lambda) {
        if (l < 1)
            throw InputError("critical-level formula needs all weights >= 1");
        sum += l;
    }
    if (sum % 2 != 0)
        throw InputError("critical-level formula needs an even weight sum");
    const int ell = sum / 2 - 1;
    const auto nu = block_sums(lambda, f);
    const int nmax = *std::max_element(nu.begin(), nu.end());
    const int nmin = *std::min_element(nu.begin(), nu.end());
    if (nmax >= ell + 1)
        return 0;
    if (nmax + nmin >= ell + 1)
        return ell + 1 - nmax;
    return nmin;
}

long long slm_level1_degree_on_fcurve(int m, std::span<const int> indices, const FCurve& f)
{
    if (m < 2)
        throw InputError("sl_m needs m >= 2");
    if (static_cast<int>(indices.size()) != f.n())
        throw InputError("index count does not match the F-curve");
    for (int i : indices)
        if (i < 0 || i >= m)
            throw InputError("fundamental indices must lie in 0..m-1");
    auto nu = block_sums(indices, f);
    for (auto& v : nu)
        v %= m;
    const int total = std::accumulate(nu.begin(), nu.end(), 0);
    if (total != 2 * m)
        return 0;
    const int nmax = *std::max_element(nu.begin(), nu.end());
    const int nmin = *std::min_element(nu.begin(), nu.end());
    if (nmax + nmin <= m)
        return nmin;
    return m - nmax;
}

bool hassett_contracted(std::span<const int> lambda, int ell, const FCurve& f)
{
    if (static_cast<int>(lambda.size()) != f.n())
        throw InputError("weight count does not match the F-curve");
    int sum = 0;
    for (int l : lambda) {
        if (l < 0 || l > ell)
            throw InputError("weights must lie in [0, ell]");
        sum += l;
    }
    // ell < sum/2 - 1
    if (2 * (ell + 1) >= sum)
        throw InputError("weighted-curve contraction needs a level below the critical level");
    const auto nu = block_sums(lambda, f);
    for (int v : nu)
        if (sum - v <= ell)
            return true;
    return false;
}

}  // namespace cblocks
