#include <doctest.h>

#include "cblocks/fusion.hpp"

#include <algorithm>
#include <array>
#include <map>

using namespace cblocks;

namespace {

SimpleAlgebra alg(const char* s)
{
    return SimpleAlgebra::parse(s);
}

// Decomposes a character (weight -> multiplicity) into irreducibles by
// repeatedly peeling off the character of the highest remaining dominant weight.
std::map<Weight, long long> decompose(const SimpleAlgebra& g, std::map<Labels, long long> ch)
{
    std::map<Weight, long long> out;
    for (;;) {
        std::erase_if(ch, [](const auto& kv) { return kv.second == 0; });
        if (ch.empty())
            break;
        // highest dominant weight: the one maximizing (x | rho)
        const Labels* best = nullptr;
        Rational best_height;
        for (const auto& [mu, m] : ch) {
            if (!std::all_of(mu.begin(), mu.end(), [](int x) { return x >= 0; }))
                continue;
            const Rational h = g.form(mu, g.rho().labels());
            if (!best || h > best_height) {
                best = &mu;
                best_height = h;
            }
        }
        REQUIRE(best != nullptr);
        const Weight top(*best);
        const long long mult = ch.at(*best);
        REQUIRE(mult > 0);
        out[top] += mult;
        for (const auto& [mu, m] : weight_multiplicities(g, top))
            ch[mu] -= mult * m;
    }
    return out;
}

std::map<Weight, long long> character_product(const SimpleAlgebra& g, const Weight& a, const Weight& b)
{
    std::map<Labels, long long> ch;
    for (const auto& [x, mx] : weight_multiplicities(g, a))
        for (const auto& [y, my] : weight_multiplicities(g, b)) {
            Labels s(x.size());
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] = x[i] + y[i];
            ch[s] += mx * my;
        }
    return decompose(g, std::move(ch));
}

}  // namespace

TEST_CASE("tensor multiplicities")
{
    const SimpleAlgebra a1 = alg("A1");
    CHECK(tensor_multiplicity(a1, Weight({1}), Weight({1}), Weight({0})) == 1);
    CHECK(tensor_multiplicity(a1, Weight({1}), Weight({1}), Weight({1})) == 0);
    const SimpleAlgebra a2 = alg("A2");
    CHECK(tensor_multiplicity(a2, Weight({1, 0}), Weight({0, 1}), Weight({0, 0})) == 1);
}

TEST_CASE("tensor products agree with brute-force character products")
{
    for (const char* name : {"A1", "A2", "A3", "B2", "C3", "G2", "D4"}) {
        const SimpleAlgebra g = alg(name);
        const auto ws = level_weights(g, 2);
        for (const auto& a : ws)
            for (const auto& b : ws) {
                if (weyl_dimension(g, a) * weyl_dimension(g, b) > 3000)
                    continue;
                CHECK_MESSAGE(tensor_product(g, a, b) == character_product(g, a, b),
                              name << " " << a.to_string() << " x " << b.to_string());
            }
    }
}

TEST_CASE("sl2 fusion rule, exhaustive to level 8")
{
    for (int l = 0; l <= 8; ++l) {
        const FusionContext ctx(alg("A1"), l);
        for (int a = 0; a <= l; ++a)
            for (int b = 0; b <= l; ++b)
                for (int c = 0; c <= l; ++c)
                    CHECK(ctx.three_point_rank(Weight({a}), Weight({b}), Weight({c})) ==
                          sl2_three_point_rank(l, a, b, c));
    }
    CHECK(sl2_three_point_rank(1, 1, 1, 0) == 1);
    CHECK(sl2_three_point_rank(2, 2, 2, 2) == 0);  // 2 x 2 = 0 at level 2
    CHECK(sl2_three_point_rank(1, 1, 1, 1) == 0);
    CHECK_THROWS_AS(sl2_three_point_rank(1, 1, 1, 2), InputError);
}

TEST_CASE("level-one three-point ranks")
{
    const FusionContext a1(alg("A1"), 1);
    CHECK(a1.three_point_rank(Weight({1}), Weight({1}), Weight({0})) == 1);
    CHECK(a1.three_point_rank(Weight({1}), Weight({1}), Weight({1})) == 0);
    const FusionContext e7(alg("E7"), 1);
    const Weight w7 = Weight::fundamental(7, 7);
    CHECK(e7.three_point_rank(w7, w7, w7) == 0);
    const FusionContext g2(alg("G2"), 1);
    const Weight g1 = Weight::fundamental(2, 1);
    CHECK(g2.three_point_rank(g1, g1, g1) == 1);
    const FusionContext e6(alg("E6"), 1);
    const Weight e1 = Weight::fundamental(6, 1);
    CHECK(e6.three_point_rank(e1, e1, e1) == 1);
}

TEST_CASE("sl_m at level one: a cyclic group")
{
    for (int m = 2; m <= 6; ++m) {
        const FusionContext ctx(SimpleAlgebra(Family::A, m - 1), 1);
        auto fund = [&](int i) { return i == 0 ? Weight::zero(m - 1) : Weight::fundamental(m - 1, i); };
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    CHECK(ctx.three_point_rank(fund(i), fund(j), fund(k)) == ((i + j + k) % m == 0 ? 1 : 0));
    }
}

TEST_CASE("three-point symmetries and the untruncated limit")
{
    for (const char* name : {"A2", "A3", "B2", "C3", "G2", "D5"}) {
        const SimpleAlgebra g = alg(name);
        const FusionContext ctx(g, 2);
        const auto& ws = ctx.weights();
        const int k = static_cast<int>(ws.size());
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                for (int c = 0; c < k; ++c) {
                    const long long r = ctx.three_point_rank(a, b, c);
                    std::array<int, 3> p{a, b, c};
                    std::sort(p.begin(), p.end());
                    do {
                        CHECK(ctx.three_point_rank(p[0], p[1], p[2]) == r);
                    } while (std::next_permutation(p.begin(), p.end()));
                    CHECK(ctx.three_point_rank(ctx.dual_index(a), ctx.dual_index(b), ctx.dual_index(c)) == r);
                }
        // vacuum row: r(a, b, 0) = [b = a*]
        const int zero = ctx.index_of(Weight::zero(g.rank()));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                CHECK(ctx.three_point_rank(a, b, zero) == (b == ctx.dual_index(a) ? 1 : 0));
    }
    // at level >= level(a) + level(b) the truncation is inactive
    for (const char* name : {"A2", "B2", "G2"}) {
        const SimpleAlgebra g = alg(name);
        const FusionContext big(g, 4);
        for (const auto& a : level_weights(g, 2))
            for (const auto& b : level_weights(g, 2))
                for (const auto& c : level_weights(g, 4))
                    CHECK(big.three_point_rank(a, b, c) == tensor_multiplicity(g, a, b, dual_weight(g, c)));
    }
}

TEST_CASE("fusion is monotone in the level")
{
    const SimpleAlgebra g = alg("A2");
    for (int l = 1; l < 4; ++l) {
        const FusionContext lo(g, l), hi(g, l + 1);
        for (const auto& a : lo.weights())
            for (const auto& b : lo.weights())
                for (const auto& c : lo.weights())
                    CHECK(lo.three_point_rank(a, b, c) <= hi.three_point_rank(a, b, c));
    }
}

TEST_CASE("weights above the level are rejected")
{
    const FusionContext ctx(alg("A1"), 1);
    CHECK_THROWS_AS(ctx.index_of(Weight({2})), InputError);
    CHECK_THROWS_AS(ctx.three_point_rank(Weight({2}), Weight({1}), Weight({1})), InputError);
}

TEST_CASE("level-one weight tables")
{
    CHECK(level1_weights_table(alg("E7")) == std::vector<Weight>{Weight::fundamental(7, 7)});
    CHECK(level1_weights_table(alg("E8")).empty());
    CHECK(level1_weights_table(alg("C3")).size() == 3);
    for (const char* name : {"A1", "A4", "B2", "B5", "C3", "C4", "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"}) {
        const SimpleAlgebra g = alg(name);
        auto table = level1_weights_table(g);
        std::vector<Weight> computed;
        for (const auto& x : level_weights(g, 1))
            if (!x.is_zero())
                computed.push_back(x);
        std::sort(table.begin(), table.end());
        CHECK_MESSAGE(table == computed, name);
    }
}
