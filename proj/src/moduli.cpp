#include "cblocks/moduli.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cblocks {

namespace {

void check_n(int n)
{
    if (n < 4)
        throw InputError("moduli space needs n >= 4 marked points, got " + std::to_string(n));
    if (n > kMaxPoints)
        throw InputError("n = " + std::to_string(n) + " exceeds the supported maximum");
}

PointSet parse_points(int n, std::string_view text)
{
    PointSet s = 0;
    std::stringstream ss{std::string(text)};
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int p = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), p);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || p < 1 || p > n)
            throw InputError("malformed point list '" + std::string(text) + "'");
        if (contains(s, p))
            throw InputError("repeated point in '" + std::string(text) + "'");
        s |= singleton(p);
    }
    return s;
}

}  // namespace

BoundaryDivisor::BoundaryDivisor(int n, PointSet side) : n_(n), side_(side)
{
    check_n(n);
    const PointSet all = full_set(n);
    if (side_ & ~all)
        throw InputError("divisor side refers to points outside 1..n");
    if (contains(side_, n))
        side_ = all & ~side_;
    const int k = count(side_);
    if (k < 2 || k > n - 2)
        throw InputError("boundary divisor sides need at least two points each");
}

FCurve::FCurve(int n, std::array<PointSet, 4> parts) : n_(n), parts_(parts)
{
    check_n(n);
    PointSet seen = 0;
    for (PointSet p : parts_) {
        if (p == 0)
            throw InputError("F-curve blocks must be non-empty");
        if (seen & p)
            throw InputError("F-curve blocks must be disjoint");
        seen |= p;
    }
    if (seen != full_set(n))
        throw InputError("F-curve blocks must cover 1..n");
    std::sort(parts_.begin(), parts_.end(),
              [](PointSet a, PointSet b) { return std::countr_zero(a) < std::countr_zero(b); });
}

std::string FCurve::key() const
{
    std::string s;
    for (int k = 0; k < 4; ++k) {
        if (k)
            s += '|';
        s += format_points(parts_[k]);
    }
    return s;
}

Rational DivisorClass::coefficient(const BoundaryDivisor& d) const
{
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void DivisorClass::add(const BoundaryDivisor& d, const Rational& c)
{
    if (d.n() != n_)
        throw InputError("divisor and class live on different moduli spaces");
    if (c == 0)
        return;
    auto& slot = coeffs_[d];
    slot += c;
    if (slot == 0)
        coeffs_.erase(d);
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other)
{
    for (const auto& [d, c] : other.coeffs_)
        add(d, c);
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s)
{
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [d, c] : coeffs_)
        c *= s;
    return *this;
}

std::vector<BoundaryDivisor> boundary_divisors(int n)
{
    check_n(n);
    std::vector<std::pair<std::vector<int>, PointSet>> sides;
    const PointSet lower = full_set(n - 1);
    for (PointSet s = 1; s <= lower; ++s) {
        const int k = count(s);
        if (k >= 2 && k <= n - 2)
            sides.emplace_back(members(s), s);
    }
    std::sort(sides.begin(), sides.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size())
            return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<BoundaryDivisor> out;
    out.reserve(sides.size());
    for (const auto& [m, s] : sides)
        out.emplace_back(n, s);
    return out;
}

std::vector<FCurve> f_curves(int n)
{
    check_n(n);
    // Restricted growth strings a_1..a_n with values in 0..3 using all four.
    std::vector<FCurve> out;
    std::vector<int> a(n, 0);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == n) {
            if (used == 4) {
                std::array<PointSet, 4> parts{};
                for (int i = 0; i < n; ++i)
                    parts[a[i]] |= singleton(i + 1);
                out.emplace_back(n, parts);
            }
            return;
        }
        if (used + (n - pos) < 4)
            return;
        for (int b = 0; b <= std::min(used, 3); ++b) {
            a[pos] = b;
            self(self, pos + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

int pair(const BoundaryDivisor& d, const FCurve& f)
{
    if (d.n() != f.n())
        throw InputError("divisor and F-curve live on different moduli spaces");
    const PointSet a = d.side();
    const PointSet ac = d.complement();
    int blocks_in_a = 0;
    for (PointSet p : f.parts()) {
        if ((p & a) == p)
            ++blocks_in_a;
        else if (p & a)
            return 0;  // A splits a block
    }
    if (blocks_in_a == 2)
        return 1;
    for (PointSet p : f.parts())
        if (p == a || p == ac)
            return -1;
    return 0;
}

Rational pair_class(const DivisorClass& c, const FCurve& f)
{
    if (c.n() != f.n())
        throw InputError("class and F-curve live on different moduli spaces");
    Rational s = 0;
    for (const auto& [d, coef] : c.coefficients()) {
        const int p = pair(d, f);
        if (p)
            s += coef * p;
    }
    return s;
}

long long pic_rank(int n)
{
    check_n(n);
    return (1LL << (n - 1)) - static_cast<long long>(n) * (n - 1) / 2 - 1;
}

std::vector<DivisorClass> symmetrize_basis(int n)
{
    check_n(n);
    std::vector<DivisorClass> out;
    const auto divisors = boundary_divisors(n);
    for (int i = 2; 2 * i <= n; ++i) {
        DivisorClass c(n);
        for (const auto& d : divisors) {
            const int k = count(d.side());
            if (k == i || k == n - i)
                c.add(d, 1);
        }
        out.push_back(std::move(c));
    }
    return out;
}

FCurve parse_fcurve(int n, std::string_view text)
{
    std::array<PointSet, 4> parts{};
    std::stringstream ss{std::string(text)};
    std::string tok;
    int k = 0;
    while (std::getline(ss, tok, '|')) {
        if (k == 4)
            throw InputError("F-curve '" + std::string(text) + "' has more than four blocks");
        parts[k++] = parse_points(n, tok);
    }
    if (k != 4)
        throw InputError("F-curve '" + std::string(text) + "' needs four blocks");
    return FCurve(n, parts);
}

BoundaryDivisor parse_divisor(int n, std::string_view text)
{
    return BoundaryDivisor(n, parse_points(n, text));
}

PointSet permute_points(PointSet s, const std::vector<int>& perm)
{
    PointSet out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if ((s >> i) & 1u)
            out |= PointSet{1} << perm[i];
    return out;
}

}  // namespace cblocks
