#include "cblocks/verify.hpp"

#include "cblocks/sweeps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace cblocks {

void CheckResult::fail(const std::string& what)
{
    if (passed)
        detail = what;
    passed = false;
}

bool SuiteReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void NefTally::degree(const Rational& d, const std::string& where)
{
    ++degrees;
    if (d < 0) {
        if (clean())
            first_violation = "negative degree " + to_string(d) + " at " + where;
        ++negative_degrees;
    }
}

void NefTally::symmetrized_coefficient(const Rational& c, const std::string& where)
{
    ++symmetrized;
    if (c < 0) {
        if (clean())
            first_violation = "negative symmetrized coefficient " + to_string(c) + " at " + where;
        ++negative_symmetrized;
    }
}

namespace {

const std::vector<FCurve>& curves(int n)
{
    static std::map<int, std::vector<FCurve>> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, f_curves(n)).first;
    return it->second;
}

std::string describe(const WeightTuple& t)
{
    return t.to_string();
}

std::string describe(const WeightTuple& t, const FCurve& f)
{
    return describe(t) + " on F-curve " + f.key();
}

void tally_symmetrized(const WeightTuple& t, NefTally* tally)
{
    if (!tally)
        return;
    const auto coeffs = symmetrized_c1(t);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        tally->symmetrized_coefficient(coeffs[i], describe(t) + ", D_" + std::to_string(i + 2));
}

int uniform(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A random tuple of n weights from P_ell with non-zero rank, if one turns up.
WeightTuple random_tuple(std::mt19937_64& rng, const SimpleAlgebra& alg, int ell, int n)
{
    const auto weights = level_weights(alg, ell);
    std::vector<Weight> pick(n);
    for (int attempt = 0;; ++attempt) {
        for (auto& w : pick)
            w = weights[uniform(rng, 0, static_cast<int>(weights.size()) - 1)];
        WeightTuple t(alg, ell, pick);
        if (attempt >= 20 || rank(t) > 0)
            return t;
    }
}

// Non-decreasing tuples of length n, entries >= lo, sum <= max_sum.
void bounded_tuples(int n, int lo, int max_sum, std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& fn)
{
    if (static_cast<int>(cur.size()) == n) {
        fn(cur);
        return;
    }
    const int used = std::accumulate(cur.begin(), cur.end(), 0);
    const int left = n - static_cast<int>(cur.size());
    for (int v = lo; used + v * left <= max_sum; ++v) {
        cur.push_back(v);
        bounded_tuples(n, v, max_sum, cur, fn);
        cur.pop_back();
    }
}

long long fibonacci(int k)
{
    long long a = 0, b = 1;  // F(0), F(1)
    for (int i = 0; i < k; ++i) {
        const long long c = a + b;
        a = b;
        b = c;
    }
    return a;
}

// Calls fn on every distinct ordering of `sorted`, or only on `sorted`.
void for_each_ordering(const std::vector<int>& sorted, bool ordered,
                       const std::function<void(const std::vector<int>&)>& fn)
{
    if (!ordered) {
        fn(sorted);
        return;
    }
    std::vector<int> p = sorted;
    do
        fn(p);
    while (std::next_permutation(p.begin(), p.end()));
}

std::vector<int> inverse(const std::vector<int>& perm)
{
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        inv[perm[i]] = static_cast<int>(i);
    return inv;
}

}  // namespace

CheckResult check_level1_basis(int n)
{
    CheckResult r("level-1 sl2 basis, n = " + std::to_string(n));
    const BasisReport rep = basis_report(n);
    r.cases = static_cast<long long>(rep.tuples.size());
    r.detail = std::to_string(rep.tuples.size()) + " tuples, rank " + std::to_string(rep.rank) + ", Picard rank " +
               std::to_string(rep.expected);
    if (!rep.ok() || static_cast<long long>(rep.tuples.size()) != rep.expected)
        r.fail(r.detail);
    return r;
}

CheckResult check_pairing_oracle(int samples, std::uint64_t seed, NefTally* tally)
{
    CheckResult r("c1 pairing equals F-curve degree");
    std::mt19937_64 rng(seed);
    const SimpleAlgebra algs[] = {SimpleAlgebra::parse("A1"), SimpleAlgebra::parse("A2")};
    long long pairings = 0;
    for (int s = 0; s < samples; ++s) {
        const auto& alg = algs[uniform(rng, 0, 1)];
        const int ell = uniform(rng, 1, 3);
        const int n = uniform(rng, 4, 6);
        const WeightTuple t = random_tuple(rng, alg, ell, n);
        const DivisorClass c1 = c1_class(t);
        for (const auto& f : curves(n)) {
            const Rational d = degree_on_fcurve(t, f);
            const Rational p = pair_class(c1, f);
            ++pairings;
            if (tally)
                tally->degree(d, describe(t, f));
            if (p != d)
                r.fail(describe(t, f) + ": c1 . F = " + to_string(p) + " but degree = " + to_string(d));
        }
        tally_symmetrized(t, tally);
        ++r.cases;
    }
    if (r.passed)
        r.detail = std::to_string(r.cases) + " tuples, " + std::to_string(pairings) + " pairings";
    return r;
}

CheckResult check_sl2_closed_form(int max_level, NefTally* tally)
{
    CheckResult r("sl2 closed form on M_{0,4}, levels <= " + std::to_string(max_level));
    long long mismatches = 0;
    for (int ell = 1; ell <= max_level; ++ell)
        for (int a = 0; a <= ell; ++a)
            for (int b = 0; b <= ell; ++b)
                for (int c = 0; c <= ell; ++c)
                    for (int d = 0; d <= ell; ++d) {
                        if ((a + b + c + d) % 2)
                            continue;
                        const WeightTuple t = WeightTuple::sl2(ell, {a, b, c, d});
                        const Rational deg = degree_4pt(t);
                        std::array<int, 4> s{a, b, c, d};
                        std::sort(s.begin(), s.end());
                        const Rational closed = sl2_closed_form_4pt(ell, s);
                        ++r.cases;
                        if (tally)
                            tally->degree(deg, describe(t));
                        if (closed != deg) {
                            ++mismatches;
                            r.fail(describe(t) + ": closed form " + to_string(closed) + ", general formula " +
                                   to_string(deg));
                        }
                    }
    if (r.passed)
        r.detail = std::to_string(r.cases) + " ordered tuples, no mismatch";
    else
        r.detail += " (" + std::to_string(mismatches) + " mismatches in total)";
    return r;
}

CheckResult check_critical_level(int max_sum, int max_n, bool ordered, NefTally* tally)
{
    CheckResult r("critical-level closed form, sum <= " + std::to_string(max_sum) + ", n <= " +
                  std::to_string(max_n));
    long long tuples = 0;
    for (int n = 4; n <= max_n; ++n) {
        std::vector<int> cur;
        bounded_tuples(n, 1, max_sum, cur, [&](const std::vector<int>& sorted) {
            const int sum = std::accumulate(sorted.begin(), sorted.end(), 0);
            const int ell = sum / 2 - 1;
            if (sum % 2 || ell < 1 || sorted.back() > ell)
                return;
            for_each_ordering(sorted, ordered, [&](const std::vector<int>& lambda) {
                const WeightTuple t = WeightTuple::sl2(ell, lambda);
                for (const auto& f : curves(n)) {
                    const Rational d = degree_on_fcurve(t, f);
                    const Rational closed = critical_degree_on_fcurve(lambda, f);
                    ++r.cases;
                    if (tally)
                        tally->degree(d, describe(t, f));
                    if (d != closed)
                        r.fail(describe(t, f) + ": closed form " + to_string(closed) + ", general formula " +
                               to_string(d));
                }
                if (lambda == sorted)
                    tally_symmetrized(t, tally);
                ++tuples;
            });
        });
    }
    if (r.passed)
        r.detail = std::to_string(tuples) + (ordered ? " ordered" : " sorted") + " tuples, " +
                   std::to_string(r.cases) + " F-curve degrees";
    return r;
}

CheckResult check_slm_level1(int max_m, int max_n, bool ordered, NefTally* tally)
{
    CheckResult r("sl_m level-1 closed form, m <= " + std::to_string(max_m) + ", n <= " + std::to_string(max_n));
    long long tuples = 0;
    for (int m = 2; m <= max_m; ++m) {
        const SimpleAlgebra alg(Family::A, m - 1);
        for (int n = 4; n <= max_n; ++n)
            for (const auto& sorted : sorted_tuples(n, 0, m - 1))
                for_each_ordering(sorted, ordered, [&](const std::vector<int>& idx) {
                    std::vector<Weight> ws;
                    for (int i : idx)
                        ws.push_back(i == 0 ? Weight::zero(m - 1) : Weight::fundamental(m - 1, i));
                    const WeightTuple t(alg, 1, ws);
                    for (const auto& f : curves(n)) {
                        const Rational d = degree_on_fcurve(t, f);
                        const long long closed = slm_level1_degree_on_fcurve(m, idx, f);
                        ++r.cases;
                        if (tally)
                            tally->degree(d, describe(t, f));
                        if (d != static_cast<long>(closed))
                            r.fail(describe(t, f) + ": closed form " + std::to_string(closed) +
                                   ", general formula " + to_string(d));
                    }
                    if (idx == sorted)
                        tally_symmetrized(t, tally);
                    ++tuples;
                });
    }
    if (r.passed)
        r.detail = std::to_string(tuples) + (ordered ? " ordered" : " sorted") + " index tuples, " +
                   std::to_string(r.cases) + " F-curve degrees";
    return r;
}

CheckResult check_fibonacci(int max_n)
{
    CheckResult r("level-1 G2 and F4 ranks are Fibonacci numbers, n <= " + std::to_string(max_n));
    const struct {
        const char* name;
        std::size_t fundamental;
    } cases[] = {{"G2", 1}, {"F4", 4}};
    for (const auto& c : cases) {
        const SimpleAlgebra alg = SimpleAlgebra::parse(c.name);
        const Weight w = Weight::fundamental(alg.rank(), c.fundamental);
        for (int n = 3; n <= max_n; ++n) {
            const Integer got = rank(WeightTuple(alg, 1, std::vector<Weight>(n, w)));
            ++r.cases;
            if (got != static_cast<long>(fibonacci(n - 1)))
                r.fail(std::string(c.name) + " w" + std::to_string(c.fundamental) + "^" + std::to_string(n) +
                       ": rank " + to_string(got) + ", expected " + std::to_string(fibonacci(n - 1)));
        }
    }
    if (r.passed)
        r.detail = "G2 w1^n and F4 w4^n match Fib(n-1) for 3 <= n <= " + std::to_string(max_n);
    return r;
}

CheckResult check_exceptional()
{
    CheckResult r("level-1 exceptional facts");
    const SimpleAlgebra e6 = SimpleAlgebra::parse("E6");
    const SimpleAlgebra e7 = SimpleAlgebra::parse("E7");
    const SimpleAlgebra e8 = SimpleAlgebra::parse("E8");
    const Weight e7w = Weight::fundamental(7, 7);
    const Weight e6w = Weight::fundamental(6, 1);
    const long long r7 = FusionContext(e7, 1).three_point_rank(e7w, e7w, e7w);
    const long long r6 = FusionContext(e6, 1).three_point_rank(e6w, e6w, e6w);
    const auto p8 = level_weights(e8, 1);
    r.cases = 3;
    if (r7 != 0)
        r.fail("E7 level 1 (w7,w7,w7) has rank " + std::to_string(r7));
    if (r6 != 1)
        r.fail("E6 level 1 (w1,w1,w1) has rank " + std::to_string(r6));
    if (p8.size() != 1 || !p8.front().is_zero())
        r.fail("E8 has " + std::to_string(p8.size()) + " level-1 weights");

    // The computed level-1 weights agree with the classical table.
    for (const char* name : {"A1", "A3", "A5", "B2", "B4", "C2", "C3", "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"}) {
        const SimpleAlgebra alg = SimpleAlgebra::parse(name);
        std::vector<Weight> computed;
        for (const auto& w : level_weights(alg, 1))
            if (!w.is_zero())
                computed.push_back(w);
        auto table = level1_weights_table(alg);
        std::sort(computed.begin(), computed.end());
        std::sort(table.begin(), table.end());
        ++r.cases;
        if (computed != table)
            r.fail(std::string(name) + ": level-1 weights differ from the classical table");
    }
    if (r.passed)
        r.detail = "E7 (w7)^3 rank 0, E6 (w1)^3 rank 1, P_1(E8) = {0}; level-1 tables agree";
    return r;
}

CheckResult check_nefness(int n, int level, NefTally* tally)
{
    CheckResult r("nefness, n = " + std::to_string(n) + ", level " + std::to_string(level));
    NefTally local;
    NefTally& t_ = tally ? *tally : local;
    const long long before = t_.negative_degrees + t_.negative_symmetrized;
    for (const char* name : {"A1", "A2"}) {
        const SimpleAlgebra alg = SimpleAlgebra::parse(name);
        const auto weights = level_weights(alg, level);
        for (const auto& idx : sorted_tuples(n, 0, static_cast<int>(weights.size()) - 1)) {
            std::vector<Weight> ws;
            for (int i : idx)
                ws.push_back(weights[i]);
            const WeightTuple t(alg, level, ws);
            for (const auto& f : curves(n)) {
                t_.degree(degree_on_fcurve(t, f), describe(t, f));
                ++r.cases;
            }
            tally_symmetrized(t, &t_);
        }
    }
    if (t_.negative_degrees + t_.negative_symmetrized > before)
        r.fail(t_.first_violation);
    else
        r.detail = std::to_string(r.cases) + " F-curve degrees and their symmetrized classes non-negative";
    return r;
}

CheckResult check_hassett(int samples, std::uint64_t seed, NefTally* tally)
{
    CheckResult r("contracted F-curves have degree zero");
    long long contracted = 0;

    // n = 6, level 1, all weights 1: the 1+1+2+2 curves carry degree zero.
    {
        const std::vector<int> ones(6, 1);
        const WeightTuple t = WeightTuple::sl2(1, ones);
        for (const auto& f : curves(6)) {
            std::array<int, 4> sizes{};
            for (int k = 0; k < 4; ++k)
                sizes[k] = count(f.part(k));
            std::sort(sizes.begin(), sizes.end());
            if (sizes != std::array<int, 4>{1, 1, 2, 2})
                continue;
            ++r.cases;
            const Rational d = degree_on_fcurve(t, f);
            if (d != 0)
                r.fail(describe(t, f) + ": degree " + to_string(d) + " on a 1+1+2+2 curve");
        }
    }

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples;) {
        const int n = uniform(rng, 5, 7);
        std::vector<int> lambda(n);
        for (auto& l : lambda)
            l = uniform(rng, 1, 4);
        const int sum = std::accumulate(lambda.begin(), lambda.end(), 0);
        const int lo = *std::max_element(lambda.begin(), lambda.end());
        const int hi = sum / 2 - 2;  // largest ell below the critical level
        if (sum % 2 || lo > hi)
            continue;
        const int ell = uniform(rng, lo, hi);
        const WeightTuple t = WeightTuple::sl2(ell, lambda);
        for (const auto& f : curves(n)) {
            const Rational d = degree_on_fcurve(t, f);
            if (tally)
                tally->degree(d, describe(t, f));
            if (!hassett_contracted(lambda, ell, f))
                continue;
            ++contracted;
            ++r.cases;
            if (d != 0)
                r.fail(describe(t, f) + ": contracted but degree " + to_string(d));
        }
        ++s;
    }
    if (r.passed)
        r.detail = std::to_string(samples) + " random tuples, " + std::to_string(contracted) +
                   " contracted F-curves, all of degree 0";
    return r;
}

CheckResult check_residue_averaging(int samples, std::uint64_t seed)
{
    CheckResult r("residue coefficients averaged over labelings give the canonical c1");
    std::mt19937_64 rng(seed);
    const struct {
        const char* name;
        int max_level;
    } algs[] = {{"A1", 4}, {"A2", 3}, {"A3", 2}, {"B2", 3}, {"C3", 2}, {"G2", 2}};
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    for (int s = 0; s < samples; ++s) {
        const auto& pick = algs[uniform(rng, 0, static_cast<int>(std::size(algs)) - 1)];
        const SimpleAlgebra alg = SimpleAlgebra::parse(pick.name);
        const WeightTuple t = random_tuple(rng, alg, uniform(rng, 1, pick.max_level), 4);
        DivisorClass avg(4);
        for (const auto& p : perms) {
            const auto inv = inverse(p);
            const DivisorClass rep = kz_c1_representative(t.permuted(p));
            for (const auto& [d, c] : rep.coefficients())
                avg.add(BoundaryDivisor(4, permute_points(d.side(), inv)), c);
        }
        avg *= Rational(1, static_cast<long>(perms.size()));
        const DivisorClass canonical = c1_class(t);
        ++r.cases;
        for (const auto& d : boundary_divisors(4))
            if (avg.coefficient(d) != canonical.coefficient(d))
                r.fail(describe(t) + ", divisor " + d.key() + ": averaged " + to_string(avg.coefficient(d)) +
                       ", canonical " + to_string(canonical.coefficient(d)));
    }
    if (r.passed)
        r.detail = std::to_string(r.cases) + " random 4-point tuples, all 24 labelings each";
    return r;
}

CheckResult check_symmetrization(int samples, std::uint64_t seed, int max_n)
{
    CheckResult r("symmetrized c1 matches the sum over all relabelings");
    std::mt19937_64 rng(seed);
    const SimpleAlgebra algs[] = {SimpleAlgebra::parse("A1"), SimpleAlgebra::parse("A2")};
    for (int s = 0; s < samples; ++s) {
        const int n = uniform(rng, 4, max_n);
        const WeightTuple t = random_tuple(rng, algs[uniform(rng, 0, 1)], uniform(rng, 1, 2), n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        DivisorClass total(n);
        do
            total += c1_class(t.permuted(perm));
        while (std::next_permutation(perm.begin(), perm.end()));
        const auto coeffs = symmetrized_c1(t);
        ++r.cases;
        for (const auto& d : boundary_divisors(n)) {
            const int i = std::min(count(d.side()), n - count(d.side()));
            if (total.coefficient(d) != coeffs[i - 2])
                r.fail(describe(t) + ", divisor " + d.key() + ": brute force " + to_string(total.coefficient(d)) +
                       ", formula " + to_string(coeffs[i - 2]));
        }
    }
    if (r.passed)
        r.detail = std::to_string(r.cases) + " random tuples, n <= " + std::to_string(max_n);
    return r;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {
        "sl2-closed-form", "nefness",     "pairing-oracle", "critical-level",    "slm-level1", "fibonacci",
        "exceptional",     "hassett",     "residue-averaging", "basis",          "symmetrization",
    };
    return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt)
{
    auto samples = [&](int fallback) { return opt.samples > 0 ? opt.samples : fallback; };
    SuiteReport rep{name, {}};
    if (name == "all") {
        for (const auto& s : suite_names()) {
            SuiteReport sub = run_suite(s, opt);
            rep.checks.insert(rep.checks.end(), sub.checks.begin(), sub.checks.end());
        }
    } else if (name == "sl2-closed-form") {
        rep.checks.push_back(check_sl2_closed_form(6));
    } else if (name == "nefness") {
        rep.checks.push_back(check_nefness(opt.n, opt.level));
    } else if (name == "pairing-oracle") {
        rep.checks.push_back(check_pairing_oracle(samples(200), opt.seed));
    } else if (name == "critical-level") {
        rep.checks.push_back(check_critical_level(14, 8, opt.ordered));
    } else if (name == "slm-level1") {
        rep.checks.push_back(check_slm_level1(5, 7, opt.ordered));
    } else if (name == "fibonacci") {
        rep.checks.push_back(check_fibonacci(12));
    } else if (name == "exceptional") {
        rep.checks.push_back(check_exceptional());
    } else if (name == "hassett") {
        rep.checks.push_back(check_hassett(samples(200), opt.seed));
    } else if (name == "residue-averaging") {
        rep.checks.push_back(check_residue_averaging(samples(100), opt.seed));
    } else if (name == "basis") {
        for (int n = 4; n <= std::max(4, opt.n); ++n)
            rep.checks.push_back(check_level1_basis(n));
    } else if (name == "symmetrization") {
        rep.checks.push_back(check_symmetrization(samples(10), opt.seed, 6));
    } else {
        throw InputError("unknown verification suite '" + name + "'");
    }
    return rep;
}

}  // namespace cblocks
