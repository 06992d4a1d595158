#include <doctest.h>

#include "cblocks/liealg.hpp"

#include <algorithm>
#include <map>

using namespace cblocks;

namespace {

SimpleAlgebra alg(const char* s)
{
    return SimpleAlgebra::parse(s);
}

Weight w(std::initializer_list<int> labels)
{
    return Weight(Labels(labels));
}

const char* const kSmallAlgebras[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4",
                                      "D4", "D5", "E6", "F4", "G2"};

// Hook-content formula for sl_{r+1}: an oracle for the Weyl dimension that
// never touches roots or the invariant form.
Integer hook_content_dimension(int r, const Labels& labels)
{
    // Row i of the partition has length sum_{j >= i} labels[j].
    std::vector<int> rows(r, 0);
    for (int i = 0; i < r; ++i) {
        int s = 0;
        for (int j = i; j < r; ++j)
            s += labels[j];
        rows[i] = s;
    }
    std::vector<int> cols(rows.empty() ? 0 : rows[0], 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < rows[i]; ++j)
            ++cols[j];
    Rational dim = 1;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < rows[i]; ++j) {
            const int hook = rows[i] - j + cols[j] - i - 1;
            Rational f(r + 1 + j - i, hook);
            f.canonicalize();
            dim *= f;
        }
    CHECK(is_integral(dim));
    return dim.get_num();
}

// Number of roots of each simple algebra, from the classification.
int root_count(const SimpleAlgebra& g)
{
    const int r = g.rank();
    switch (g.family()) {
    case Family::A: return r * (r + 1);
    case Family::B:
    case Family::C: return 2 * r * r;
    case Family::D: return 2 * r * (r - 1);
    case Family::E: return r == 6 ? 72 : r == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
    }
    return -1;
}

}  // namespace

TEST_CASE("casimir values")
{
    CHECK(casimir(alg("A1"), w({1})) == Rational(3, 2));
    CHECK(casimir(alg("A2"), w({1, 0})) == Rational(8, 3));
    for (const char* name : kSmallAlgebras) {
        const SimpleAlgebra g = alg(name);
        CHECK(casimir(g, Weight::zero(g.rank())) == 0);
    }
    // sl_m fundamentals: i (m - i)(m + 1) / m
    for (int m = 2; m <= 7; ++m) {
        const SimpleAlgebra g(Family::A, m - 1);
        for (int i = 1; i < m; ++i) {
            Rational expect(i * (m - i) * (m + 1), m);
            expect.canonicalize();
            CHECK(casimir(g, Weight::fundamental(m - 1, i)) == expect);
        }
    }
    // adjoint Casimir is 2 h^vee in this normalization
    for (const char* name : kSmallAlgebras) {
        const SimpleAlgebra g = alg(name);
        CHECK(casimir(g, Weight(g.theta())) == 2 * g.dual_coxeter());
    }
}

TEST_CASE("casimir rejects a weight of the wrong rank")
{
    CHECK_THROWS_AS(casimir(alg("A2"), w({1})), InputError);
}

TEST_CASE("levels")
{
    for (int k = 0; k <= 5; ++k)
        CHECK(level(alg("A1"), w({k})) == k);
    CHECK(level(alg("G2"), w({1, 0})) == 1);
    for (const char* name : kSmallAlgebras) {
        const SimpleAlgebra g = alg(name);
        CHECK(level(g, Weight(g.theta())) == 2);
        CHECK(g.form(g.theta(), g.theta()) == 2);
    }
}

TEST_CASE("level_weights")
{
    CHECK(level_weights(alg("A1"), 1) == std::vector<Weight>{w({0}), w({1})});
    CHECK(level_weights(alg("A1"), 0) == std::vector<Weight>{w({0})});
    CHECK(level_weights(alg("E8"), 1) == std::vector<Weight>{Weight::zero(8)});
    for (const char* name : kSmallAlgebras) {
        const SimpleAlgebra g = alg(name);
        const auto p1 = level_weights(g, 1);
        const auto p2 = level_weights(g, 2);
        CHECK(std::is_sorted(p2.begin(), p2.end()));
        for (const auto& x : p1)
            CHECK(std::find(p2.begin(), p2.end(), x) != p2.end());
        for (const auto& x : p2)
            CHECK(level(g, x) <= 2);
    }
    // sl2 at level ell has ell + 1 weights; sl3 has (ell+1)(ell+2)/2
    for (int l = 0; l <= 6; ++l) {
        CHECK(level_weights(alg("A1"), l).size() == static_cast<std::size_t>(l + 1));
        CHECK(level_weights(alg("A2"), l).size() == static_cast<std::size_t>((l + 1) * (l + 2) / 2));
    }
}

TEST_CASE("dual weights")
{
    CHECK(dual_weight(alg("A1"), w({3})) == w({3}));
    CHECK(dual_weight(alg("A3"), w({1, 0, 0})) == w({0, 0, 1}));
    CHECK(dual_weight(alg("E6"), Weight::fundamental(6, 1)) == Weight::fundamental(6, 6));
    CHECK(dual_weight(alg("E6"), Weight::fundamental(6, 3)) == Weight::fundamental(6, 5));
    CHECK(dual_weight(alg("E6"), Weight::fundamental(6, 2)) == Weight::fundamental(6, 2));
    CHECK(dual_weight(alg("D5"), Weight::fundamental(5, 4)) == Weight::fundamental(5, 5));
    CHECK(dual_weight(alg("D4"), Weight::fundamental(4, 4)) == Weight::fundamental(4, 4));
}

TEST_CASE("dual weight equals minus the lowest weight")
{
    // Oracle: lambda^* = -w0(lambda), and w0(lambda) is the weight of V_lambda
    // of least height.
    for (const char* name : kSmallAlgebras) {
        const SimpleAlgebra g = alg(name);
        for (int i = 1; i <= g.rank(); ++i) {
            const Weight f = Weight::fundamental(g.rank(), i);
            const WeightSystem ws = weight_multiplicities(g, f);
            std::vector<Labels> lowest;
            Rational least;
            for (const auto& [mu, mult] : ws) {
                const Rational h = g.form(mu, g.rho().labels());
                if (lowest.empty() || h < least) {
                    lowest = {mu};
                    least = h;
                } else if (h == least) {
                    lowest.push_back(mu);
                }
            }
            REQUIRE(lowest.size() == 1);
            Labels neg = lowest.front();
            for (int& x : neg)
                x = -x;
            CHECK_MESSAGE(dual_weight(g, f) == Weight(neg), name << " w" << i);
        }
    }
}

TEST_CASE("duality is a level- and Casimir-preserving involution")
{
    for (const char* name : kSmallAlgebras) {
        const SimpleAlgebra g = alg(name);
        for (const auto& x : level_weights(g, 2)) {
            const Weight d = dual_weight(g, x);
            CHECK(dual_weight(g, d) == x);
            CHECK(level(g, d) == level(g, x));
            CHECK(casimir(g, d) == casimir(g, x));
        }
    }
}

TEST_CASE("weight multiplicities")
{
    const WeightSystem sl2 = weight_multiplicities(alg("A1"), w({2}));
    CHECK(sl2 == WeightSystem{{{-2}, 1}, {{0}, 1}, {{2}, 1}});
    CHECK(weight_multiplicities(alg("A2"), w({1, 1})).at({0, 0}) == 2);
    for (const char* name : kSmallAlgebras) {
        const SimpleAlgebra g = alg(name);
        CHECK(weight_multiplicities(g, Weight::zero(g.rank())) == WeightSystem{{Labels(g.rank(), 0), 1}});
    }
}

TEST_CASE("adjoint weight system is the roots plus rank zero weights")
{
    for (const char* name : kSmallAlgebras) {
        const SimpleAlgebra g = alg(name);
        const WeightSystem ws = weight_multiplicities(g, Weight(g.theta()));
        long long nonzero = 0;
        for (const auto& [mu, mult] : ws) {
            if (std::all_of(mu.begin(), mu.end(), [](int x) { return x == 0; })) {
                CHECK(mult == g.rank());
            } else {
                CHECK(mult == 1);
                ++nonzero;
            }
        }
        CHECK_MESSAGE(nonzero == root_count(g), name);
        CHECK(2 * g.positive_roots().size() == static_cast<std::size_t>(root_count(g)));
        CHECK(weyl_dimension(g, Weight(g.theta())) == g.rank() + root_count(g));
    }
}

TEST_CASE("multiplicities sum to the Weyl dimension")
{
    for (const char* name : kSmallAlgebras) {
        const SimpleAlgebra g = alg(name);
        for (const auto& x : level_weights(g, 2)) {
            if (weyl_dimension(g, x) > 20000)
                continue;
            long long total = 0;
            for (const auto& [mu, mult] : weight_multiplicities(g, x))
                total += mult;
            CHECK(weyl_dimension(g, x) == static_cast<long>(total));
        }
    }
}

TEST_CASE("Weyl dimension against hook-content and known values")
{
    for (int r = 1; r <= 4; ++r) {
        const SimpleAlgebra g(Family::A, r);
        for (const auto& x : level_weights(g, 3))
            CHECK(weyl_dimension(g, x) == hook_content_dimension(r, x.labels()));
    }
    const std::map<std::pair<std::string, int>, long> known = {
        {{"G2", 1}, 7},     {{"G2", 2}, 14},  {{"F4", 4}, 26},  {{"F4", 1}, 52},  {{"E6", 1}, 27},
        {{"E6", 2}, 78},    {{"E7", 7}, 56},  {{"E7", 1}, 133}, {{"E8", 8}, 248}, {{"E8", 1}, 3875},
        {{"B3", 1}, 7},     {{"B3", 3}, 8},   {{"C3", 1}, 6},   {{"D4", 1}, 8},   {{"D4", 2}, 28},
    };
    for (const auto& [key, dim] : known) {
        const SimpleAlgebra g = alg(key.first.c_str());
        CHECK_MESSAGE(weyl_dimension(g, Weight::fundamental(g.rank(), key.second)) == dim,
                      key.first << " w" << key.second);
    }
}

TEST_CASE("weight system capacity")
{
    CHECK_THROWS_AS(weight_multiplicities(alg("E8"), Weight::fundamental(8, 1), 10), CapacityError);
}

TEST_CASE("parsing")
{
    CHECK(alg("E7").rank() == 7);
    CHECK(alg("D4").name() == "D4");
    CHECK_THROWS_AS(alg("D2"), InputError);
    CHECK_THROWS_AS(alg("E9"), InputError);
    CHECK_THROWS_AS(alg("Q3"), InputError);
    CHECK(parse_weight(alg("A2"), "1,0") == w({1, 0}));
    CHECK(parse_weight(alg("B3"), "w3") == w({0, 0, 1}));
    CHECK(parse_weight(alg("B3"), "0") == w({0, 0, 0}));
    CHECK_THROWS_AS(parse_weight(alg("A2"), "1"), InputError);
    CHECK_THROWS_AS(parse_weight(alg("A2"), "w3"), InputError);
    CHECK_THROWS_AS(parse_weight(alg("A2"), "1,-1"), InputError);
    CHECK_THROWS_AS(parse_weight(alg("A2"), "a,b"), InputError);
}
