#include "cblocks/linalg.hpp"

#include <algorithm>

namespace cblocks {

Echelon reduced_row_echelon(RMatrix m)
{
    Echelon e;
    if (m.empty())
        return e;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[row]);
        const Rational piv = m[row][c];
        for (std::size_t j = c; j < cols; ++j)
            m[row][j] /= piv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][c] == 0)
                continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (m[row][j] != 0)
                    m[i][j] -= f * m[row][j];
        }
        e.pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    e.rows = std::move(m);
    return e;
}

std::size_t matrix_rank(const RMatrix& m)
{
    return reduced_row_echelon(m).rank();
}

std::size_t integer_matrix_rank(const std::vector<std::vector<Integer>>& input)
{
    auto m = input;
    if (m.empty())
        return 0;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[row]);
        const Integer a = m[row][c];
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            if (m[i][c] == 0)
                continue;
            const Integer b = m[i][c];
            Integer g = 0;
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] = a * m[i][j] - b * m[row][j];
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m[i][j].get_mpz_t());
            }
            if (g > 1)
                for (std::size_t j = c; j < cols; ++j)
                    mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), g.get_mpz_t());
        }
        ++row;
    }
    return row;
}

RMatrix null_space(const RMatrix& m, std::size_t cols)
{
    RMatrix basis;
    Echelon e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        RVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r)
            v[e.pivots[r]] = -e.rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational dot(const RVector& a, const RVector& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

RVector primitive(const RVector& v)
{
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    std::vector<Integer> z(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * l;
        z[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    RVector out(v.size(), Rational(0));
    if (g == 0)
        return out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rational(Integer(z[i] / g));
    return out;
}

}  // namespace cblocks
