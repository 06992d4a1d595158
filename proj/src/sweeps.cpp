#include "cblocks/sweeps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cblocks {

std::vector<std::vector<int>> sorted_tuples(int n, int lo, int hi)
{
    std::vector<std::vector<int>> out;
    if (n <= 0 || lo > hi)
        return out;
    std::vector<int> cur(n, lo);
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[i] == hi)
            --i;
        if (i < 0)
            break;
        const int v = cur[i] + 1;
        for (int j = i; j < n; ++j)
            cur[j] = v;
    }
    return out;
}

std::vector<int> fcurve_permutation(int n, const std::vector<int>& perm)
{
    const auto curves = f_curves(n);
    std::map<FCurve, int> index;
    for (std::size_t i = 0; i < curves.size(); ++i)
        index.emplace(curves[i], static_cast<int>(i));
    std::vector<int> out;
    out.reserve(curves.size());
    for (const auto& f : curves) {
        std::array<PointSet, 4> parts{};
        for (int k = 0; k < 4; ++k)
            parts[k] = permute_points(f.part(k), perm);
        out.push_back(index.at(FCurve(n, parts)));
    }
    return out;
}

std::vector<WeightTuple> level1_basis_tuples(int n)
{
    std::vector<std::pair<std::vector<int>, PointSet>> supports;
    for (PointSet s = 0; s <= full_set(n); ++s) {
        const int k = count(s);
        if (k >= 4 && k % 2 == 0)
            supports.emplace_back(members(s), s);
    }
    std::sort(supports.begin(), supports.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size())
            return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<WeightTuple> out;
    for (const auto& [m, s] : supports) {
        std::vector<int> labels(n, 0);
        for (int p : m)
            labels[p - 1] = 1;
        out.push_back(WeightTuple::sl2(1, labels));
    }
    return out;
}

BasisReport basis_report(int n)
{
    BasisReport rep;
    rep.n = n;
    rep.expected = pic_rank(n);
    rep.tuples = level1_basis_tuples(n);
    std::vector<std::vector<Integer>> rows;
    for (const auto& t : rep.tuples) {
        rep.degree_vectors.push_back(degree_vector(t));
        std::vector<Integer> row;
        for (const auto& d : rep.degree_vectors.back())
            row.push_back(d.get_num());
        rows.push_back(std::move(row));
    }
    rep.rank = integer_matrix_rank(rows);
    return rep;
}

std::vector<RVector> nef_cone_generators(int n)
{
    const auto curves = f_curves(n);
    RMatrix pairing;
    for (const auto& d : boundary_divisors(n)) {
        RVector row;
        for (const auto& f : curves)
            row.push_back(pair(d, f));
        pairing.push_back(std::move(row));
    }
    const Echelon basis = reduced_row_echelon(std::move(pairing));
    const std::size_t k = basis.rank();
    std::vector<RVector> halfspaces;
    for (std::size_t f = 0; f < curves.size(); ++f) {
        RVector h(k);
        for (std::size_t j = 0; j < k; ++j)
            h[j] = basis.rows[j][f];
        halfspaces.push_back(std::move(h));
    }
    std::vector<RVector> out;
    for (const auto& y : dual_cone_generators(halfspaces)) {
        RVector x(curves.size(), Rational(0));
        for (std::size_t j = 0; j < k; ++j)
            if (y[j] != 0)
                for (std::size_t f = 0; f < curves.size(); ++f)
                    x[f] += y[j] * basis.rows[j][f];
        out.push_back(primitive(x));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<RVector> sl2_cone_rays(int n, int max_level)
{
    if (max_level < 1)
        throw InputError("sweep needs a maximum level >= 1");
    std::set<std::vector<long long>> base;
    for (int ell = 1; ell <= max_level; ++ell)
        for (const auto& labels : sorted_tuples(n, 0, ell)) {
            if (std::accumulate(labels.begin(), labels.end(), 0) % 2 != 0)
                continue;
            const RVector v = primitive(degree_vector(WeightTuple::sl2(ell, labels)));
            std::vector<long long> z;
            z.reserve(v.size());
            for (const auto& x : v)
                z.push_back(x.get_num().get_si());
            if (std::any_of(z.begin(), z.end(), [](long long x) { return x != 0; }))
                base.insert(std::move(z));
        }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> images;
    do
        images.push_back(fcurve_permutation(n, perm));
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::vector<long long>> all;
    for (const auto& z : base)
        for (const auto& img : images) {
            std::vector<long long> w(z.size());
            for (std::size_t i = 0; i < z.size(); ++i)
                w[img[i]] = z[i];
            all.insert(std::move(w));
        }
    std::vector<RVector> out;
    out.reserve(all.size());
    for (const auto& z : all) {
        RVector v;
        v.reserve(z.size());
        for (long long x : z)
            v.emplace_back(static_cast<long>(x));
        out.push_back(std::move(v));
    }
    return out;
}

ConeExperiment sl2_cone_experiment(int n, int max_level, bool compare_nef)
{
    ConeExperiment ex;
    ex.n = n;
    ex.max_level = max_level;
    RayMatrix m;
    m.ambient_dim = f_curves(n).size();
    m.rays = sl2_cone_rays(n, max_level);
    ex.candidate_rays = m.rays.size();
    if (m.rays.empty())
        return ex;
    const Cone cone(m);
    ex.dimension = cone.dimension();
    ex.rays = cone.extremal_rays();
    ex.extremal_rays = ex.rays.size();
    if (compare_nef) {
        const auto nef = nef_cone_generators(n);
        ex.nef_generators = nef.size();
        for (const auto& g : nef)
            if (cone.contains(g))
                ++ex.nef_generators_inside;
    }
    return ex;
}

}  // namespace cblocks
