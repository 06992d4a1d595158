#include <doctest.h>

#include "cblocks/linalg.hpp"
#include "cblocks/moduli.hpp"

#include <set>

using namespace cblocks;

namespace {

long long stirling4(int n)
{
    // S(n, 4) by the recurrence S(n, k) = k S(n-1, k) + S(n-1, k-1)
    std::vector<std::vector<long long>> s(n + 1, std::vector<long long>(5, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= 4; ++k)
            s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
    return s[n][4];
}

}  // namespace

TEST_CASE("counts")
{
    CHECK(boundary_divisors(4).size() == 3);
    CHECK(boundary_divisors(5).size() == 10);
    CHECK(boundary_divisors(6).size() == 25);
    CHECK(f_curves(4).size() == 1);
    CHECK(f_curves(5).size() == 10);
    CHECK(f_curves(6).size() == 65);
    for (int n = 4; n <= 10; ++n) {
        CHECK(boundary_divisors(n).size() == (std::size_t{1} << (n - 1)) - n - 1);
        CHECK(static_cast<long long>(f_curves(n).size()) == stirling4(n));
    }
    CHECK(pic_rank(4) == 1);
    CHECK(pic_rank(5) == 5);
    CHECK(pic_rank(6) == 16);
    CHECK_THROWS_AS(boundary_divisors(3), InputError);
    CHECK_THROWS_AS(f_curves(3), InputError);
}

TEST_CASE("canonical keys")
{
    for (int n = 4; n <= 8; ++n) {
        std::set<std::string> keys;
        for (const auto& d : boundary_divisors(n)) {
            CHECK_FALSE(contains(d.side(), n));
            CHECK(count(d.side()) >= 2);
            CHECK(count(d.complement()) >= 2);
            CHECK(BoundaryDivisor(n, d.complement()) == d);
            keys.insert(d.key());
        }
        CHECK(keys.size() == boundary_divisors(n).size());
        for (const auto& f : f_curves(n)) {
            PointSet all = 0;
            for (PointSet p : f.parts()) {
                CHECK(p != 0);
                CHECK((all & p) == 0);
                all |= p;
            }
            CHECK(all == full_set(n));
            CHECK(parse_fcurve(n, f.key()) == f);
        }
    }
    CHECK(boundary_divisors(4).front().key() == "1,2");
    CHECK(parse_divisor(5, "4,5") == parse_divisor(5, "1,2,3"));
    CHECK(f_curves(5).size() == 10);
}

TEST_CASE("intersection numbers")
{
    const FCurve f = parse_fcurve(5, "1|2|3|4,5");
    CHECK(pair(parse_divisor(5, "4,5"), f) == -1);
    CHECK(pair(parse_divisor(5, "1,2"), f) == 1);
    CHECK(pair(parse_divisor(5, "1,4"), f) == 0);
    CHECK_THROWS_AS(pair(parse_divisor(6, "1,2"), f), InputError);

    for (int n = 4; n <= 8; ++n)
        for (const auto& c : f_curves(n)) {
            int plus = 0, minus = 0;
            for (const auto& d : boundary_divisors(n)) {
                const int p = pair(d, c);
                CHECK(pair(BoundaryDivisor(n, d.complement()), c) == p);
                plus += p == 1;
                minus += p == -1;
            }
            CHECK(plus == 3);
            CHECK(minus <= 4);
        }
}

TEST_CASE("class pairing")
{
    const FCurve f = f_curves(4).front();
    CHECK(pair_class(DivisorClass(4), f) == 0);
    DivisorClass third(4);
    for (const auto& d : boundary_divisors(4))
        third.add(d, Rational(1, 3));
    CHECK(pair_class(third, f) == 1);

    DivisorClass single(6);
    single.add(parse_divisor(6, "1,2"), 1);
    CHECK(pair_class(single, parse_fcurve(6, "1,2,3|4|5|6")) == 0);
}

TEST_CASE("symmetric classes")
{
    const auto b4 = symmetrize_basis(4);
    REQUIRE(b4.size() == 1);
    for (const auto& d : boundary_divisors(4))
        CHECK(b4[0].coefficient(d) == 1);

    const auto b5 = symmetrize_basis(5);
    REQUIRE(b5.size() == 1);
    for (const auto& d : boundary_divisors(5))
        CHECK(b5[0].coefficient(d) == 1);

    const auto b6 = symmetrize_basis(6);
    REQUIRE(b6.size() == 2);
    int threes = 0;
    for (const auto& d : boundary_divisors(6)) {
        const int i = std::min(count(d.side()), count(d.complement()));
        CHECK(b6[0].coefficient(d) == (i == 2 ? 1 : 0));
        CHECK(b6[1].coefficient(d) == (i == 3 ? 1 : 0));
        threes += i == 3;
    }
    CHECK(threes == 10);
}

TEST_CASE("the F-curve pairing detects Pic")
{
    for (int n = 4; n <= 8; ++n) {
        std::vector<std::vector<Integer>> m;
        for (const auto& d : boundary_divisors(n)) {
            std::vector<Integer> row;
            for (const auto& f : f_curves(n))
                row.emplace_back(pair(d, f));
            m.push_back(std::move(row));
        }
        CHECK(static_cast<long long>(integer_matrix_rank(m)) == pic_rank(n));
    }
}

TEST_CASE("point permutations")
{
    CHECK(permute_points(0b0011, {1, 2, 0}) == 0b0110);
    CHECK(permute_points(0b0101, {0, 1, 2}) == 0b0101);
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(parse_fcurve(5, "1|2|3"), InputError);
    CHECK_THROWS_AS(parse_fcurve(5, "1|2|3|4"), InputError);
    CHECK_THROWS_AS(parse_fcurve(5, "1|2|3|4,4,5"), InputError);
    CHECK_THROWS_AS(parse_divisor(5, "1"), InputError);
    CHECK_THROWS_AS(parse_divisor(5, "1,9"), InputError);
}
