#include "cblocks/liealg.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace cblocks {

Weight::Weight(Labels labels) : labels_(std::move(labels))
{
    for (int x : labels_)
        if (x < 0)
            throw InputError("weight is not dominant: negative Dynkin label");
}

Weight Weight::fundamental(std::size_t rank, std::size_t i)
{
    if (i < 1 || i > rank)
        throw InputError("fundamental weight index out of range");
    Labels l(rank, 0);
    l[i - 1] = 1;
    return Weight(std::move(l));
}

bool Weight::is_zero() const
{
    return std::all_of(labels_.begin(), labels_.end(), [](int x) { return x == 0; });
}

std::string Weight::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(labels_[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------

struct SimpleAlgebra::Data {
    Family family;
    int rank;
    std::string name;
    std::vector<Rational> lengths;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<Rational>> gram;  // on fundamental weights
    long long scale = 1;
    std::vector<std::vector<long long>> scaled_gram;
    std::vector<Labels> simple_roots;
    std::vector<Labels> positive_roots;
    Labels theta;
    std::vector<int> comarks;
    int dual_coxeter = 0;
};

namespace {

char family_letter(Family f)
{
    return "ABCDEFG"[static_cast<int>(f)];
}

void check_admissible(Family f, int r)
{
    bool ok = false;
    switch (f) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
    }
    if (!ok)
        throw InputError(std::string("no simple Lie algebra of type ") + family_letter(f) +
                         std::to_string(r));
}

// Bourbaki numbering, 0-based.
std::vector<std::pair<int, int>> dynkin_edges(Family f, int r)
{
    std::vector<std::pair<int, int>> e;
    switch (f) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
        for (int i = 0; i + 1 < r; ++i)
            e.emplace_back(i, i + 1);
        break;
    case Family::D:
        for (int i = 0; i + 2 < r; ++i)
            e.emplace_back(i, i + 1);
        e.emplace_back(r - 3, r - 1);
        break;
    case Family::E:
        e.emplace_back(0, 2);
        e.emplace_back(1, 3);
        for (int i = 2; i + 1 < r; ++i)
            e.emplace_back(i, i + 1);
        break;
    }
    return e;
}

std::vector<Rational> root_lengths_for(Family f, int r)
{
    std::vector<Rational> L(r, Rational(2));
    switch (f) {
    case Family::B: L[r - 1] = 1; break;
    case Family::C:
        for (int i = 0; i + 1 < r; ++i)
            L[i] = 1;
        break;
    case Family::F: L[2] = L[3] = 1; break;
    case Family::G: L[0] = Rational(2, 3); break;
    default: break;
    }
    return L;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (m[p][c] == 0)
            ++p;
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

Labels add(const Labels& a, const Labels& b, int k = 1)
{
    Labels r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += k * b[i];
    return r;
}

}  // namespace

SimpleAlgebra::SimpleAlgebra(Family family, int rank)
{
    check_admissible(family, rank);
    auto d = std::make_shared<Data>();
    d->family = family;
    d->rank = rank;
    d->name = std::string(1, family_letter(family)) + std::to_string(rank);
    d->lengths = root_lengths_for(family, rank);

    const int r = rank;
    std::vector<std::vector<Rational>> B(r, std::vector<Rational>(r, Rational(0)));
    for (int i = 0; i < r; ++i)
        B[i][i] = d->lengths[i];
    for (auto [i, j] : dynkin_edges(family, rank)) {
        Rational v = -std::max(d->lengths[i], d->lengths[j]) / 2;
        B[i][j] = B[j][i] = v;
    }

    d->cartan.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rational c = 2 * B[i][j] / d->lengths[i];
            d->cartan[i][j] = static_cast<int>(c.get_num().get_si());
        }

    // (varpi_i|varpi_j) = (L_i/2) (B^{-1})_{ij} (L_j/2)
    auto Binv = invert(B);
    d->gram.assign(r, std::vector<Rational>(r));
    Integer den = 1;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            d->gram[i][j] = d->lengths[i] / 2 * Binv[i][j] * d->lengths[j] / 2;
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d->gram[i][j].get_den_mpz_t());
        }
    d->scale = den.get_si();
    d->scaled_gram.assign(r, std::vector<long long>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rational s = d->gram[i][j] * den;
            d->scaled_gram[i][j] = s.get_num().get_si();
        }

    // alpha_j has Dynkin labels (a_0j, ..., a_{r-1}j).
    d->simple_roots.assign(r, Labels(r));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i)
            d->simple_roots[j][i] = d->cartan[i][j];

    // Positive roots by height, in simple-root coordinates, via root strings:
    // beta + alpha_i is a root iff q > 0 where p - q = <beta, alpha_i^vee>.
    std::vector<std::vector<int>> roots;
    std::set<std::vector<int>> known;
    for (int i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        roots.push_back(e);
        known.insert(e);
    }
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const auto beta = roots[k];
        for (int i = 0; i < r; ++i) {
            int pairing = 0;
            for (int j = 0; j < r; ++j)
                pairing += d->cartan[i][j] * beta[j];
            int p = 0;
            auto down = beta;
            while (true) {
                down[i] -= 1;
                if (!known.count(down))
                    break;
                ++p;
            }
            if (p - pairing > 0) {
                auto up = beta;
                up[i] += 1;
                if (known.insert(up).second)
                    roots.push_back(up);
            }
        }
    }
    std::stable_sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });
    for (const auto& beta : roots) {
        Labels l(r, 0);
        for (int j = 0; j < r; ++j)
            l = add(l, d->simple_roots[j], beta[j]);
        d->positive_roots.push_back(l);
    }
    d->theta = d->positive_roots.back();

    d->comarks.resize(r);
    int sum = 0;
    for (int i = 0; i < r; ++i) {
        Rational c = 0;
        for (int j = 0; j < r; ++j)
            c += d->gram[i][j] * d->theta[j];
        d->comarks[i] = static_cast<int>(c.get_num().get_si());
        sum += d->comarks[i];
    }
    d->dual_coxeter = 1 + sum;
    d_ = std::move(d);
}

SimpleAlgebra SimpleAlgebra::parse(std::string_view text)
{
    if (text.size() < 2)
        throw InputError("malformed algebra name '" + std::string(text) + "'");
    const std::string letters = "ABCDEFG";
    auto pos = letters.find(static_cast<char>(std::toupper(text[0])));
    if (pos == std::string::npos)
        throw InputError("unknown algebra family in '" + std::string(text) + "'");
    int rank = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw InputError("malformed algebra rank in '" + std::string(text) + "'");
    return SimpleAlgebra(static_cast<Family>(pos), rank);
}

Family SimpleAlgebra::family() const { return d_->family; }
int SimpleAlgebra::rank() const { return d_->rank; }
std::string SimpleAlgebra::name() const { return d_->name; }
const std::vector<std::vector<int>>& SimpleAlgebra::cartan_matrix() const { return d_->cartan; }
const std::vector<std::vector<Rational>>& SimpleAlgebra::normalized_form() const { return d_->gram; }
const std::vector<Rational>& SimpleAlgebra::root_lengths() const { return d_->lengths; }
const std::vector<int>& SimpleAlgebra::comarks() const { return d_->comarks; }
Weight SimpleAlgebra::rho() const { return Weight(Labels(d_->rank, 1)); }
const Labels& SimpleAlgebra::theta() const { return d_->theta; }
int SimpleAlgebra::dual_coxeter() const { return d_->dual_coxeter; }
const std::vector<Labels>& SimpleAlgebra::positive_roots() const { return d_->positive_roots; }
const Labels& SimpleAlgebra::simple_root(std::size_t i) const { return d_->simple_roots.at(i); }
long long SimpleAlgebra::form_scale() const { return d_->scale; }

Rational SimpleAlgebra::form(const Labels& x, const Labels& y) const
{
    Rational q(static_cast<long>(scaled_form(x, y)), static_cast<long>(d_->scale));
    q.canonicalize();
    return q;
}

long long SimpleAlgebra::scaled_form(const Labels& x, const Labels& y) const
{
    long long s = 0;
    const int r = d_->rank;
    for (int i = 0; i < r; ++i) {
        if (x[i] == 0)
            continue;
        long long row = 0;
        for (int j = 0; j < r; ++j)
            row += d_->scaled_gram[i][j] * y[j];
        s += x[i] * row;
    }
    return s;
}

void SimpleAlgebra::check(const Weight& w) const
{
    if (static_cast<int>(w.size()) != d_->rank)
        throw InputError("weight " + w.to_string() + " has " + std::to_string(w.size()) +
                         " labels but " + d_->name + " has rank " + std::to_string(d_->rank));
}

// ---------------------------------------------------------------------------

Rational casimir(const SimpleAlgebra& alg, const Weight& w)
{
    alg.check(w);
    Labels shifted = w.labels();
    for (auto& x : shifted)
        x += 2;
    Rational c = alg.form(w.labels(), shifted);
    c.canonicalize();
    return c;
}

int level(const SimpleAlgebra& alg, const Weight& w)
{
    alg.check(w);
    int s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += w[i] * alg.comarks()[i];
    return s;
}

std::vector<Weight> level_weights(const SimpleAlgebra& alg, int ell)
{
    std::vector<Weight> out;
    if (ell < 0)
        return out;
    const int r = alg.rank();
    const auto& a = alg.comarks();
    Labels cur(r, 0);
    auto rec = [&](auto&& self, int pos, int budget) -> void {
        if (pos == r) {
            out.emplace_back(cur);
            return;
        }
        for (int k = 0; k * a[pos] <= budget; ++k) {
            cur[pos] = k;
            self(self, pos + 1, budget - k * a[pos]);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, ell);
    return out;
}

Weight dual_weight(const SimpleAlgebra& alg, const Weight& w)
{
    alg.check(w);
    Labels l = w.labels();
    const int r = alg.rank();
    switch (alg.family()) {
    case Family::A: std::reverse(l.begin(), l.end()); break;
    case Family::D:
        if (r % 2 == 1)
            std::swap(l[r - 2], l[r - 1]);
        break;
    case Family::E:
        if (r == 6) {
            std::swap(l[0], l[5]);
            std::swap(l[2], l[4]);
        }
        break;
    default: break;
    }
    return Weight(std::move(l));
}

Integer weyl_dimension(const SimpleAlgebra& alg, const Weight& w)
{
    alg.check(w);
    Labels shifted = w.labels();
    for (auto& x : shifted)
        x += 1;
    const Labels rho(alg.rank(), 1);
    Rational dim = 1;
    for (const auto& alpha : alg.positive_roots()) {
        Rational f(static_cast<long>(alg.scaled_form(shifted, alpha)), static_cast<long>(alg.scaled_form(rho, alpha)));
        f.canonicalize();
        dim *= f;
    }
    return dim.get_num();
}

int reflect_to_dominant(const SimpleAlgebra& alg, Labels& x)
{
    int sign = 1;
    const int r = alg.rank();
    while (true) {
        int i = 0;
        while (i < r && x[i] >= 0)
            ++i;
        if (i == r)
            break;
        const int c = x[i];
        const auto& a = alg.simple_root(i);
        for (int j = 0; j < r; ++j)
            x[j] -= c * a[j];
        sign = -sign;
    }
    for (int v : x)
        if (v == 0)
            return 0;
    return sign;
}

namespace {

Labels dominant_rep(const SimpleAlgebra& alg, Labels x)
{
    const int r = alg.rank();
    while (true) {
        int i = 0;
        while (i < r && x[i] >= 0)
            ++i;
        if (i == r)
            return x;
        const int c = x[i];
        const auto& a = alg.simple_root(i);
        for (int j = 0; j < r; ++j)
            x[j] -= c * a[j];
    }
}

}  // namespace

WeightSystem weight_multiplicities(const SimpleAlgebra& alg, const Weight& w, std::size_t capacity)
{
    alg.check(w);
    const int r = alg.rank();
    const auto& roots = alg.positive_roots();

    // Dominant weights mu <= lambda, with the height of lambda - mu.
    std::map<Labels, int> height;
    std::vector<Labels> queue{w.labels()};
    height[w.labels()] = 0;
    std::vector<int> root_height;
    {
        // alpha = sum_j c_j alpha_j with (alpha|varpi_j) = c_j L_j / 2.
        for (const auto& alpha : roots) {
            int h = 0;
            for (int j = 0; j < r; ++j) {
                Labels fund(r, 0);
                fund[j] = 1;
                Rational c = alg.form(alpha, fund) * 2 / alg.root_lengths()[j];
                h += static_cast<int>(c.get_num().get_si());
            }
            root_height.push_back(h);
        }
    }
    for (std::size_t k = 0; k < queue.size(); ++k) {
        const Labels mu = queue[k];
        const int hmu = height[mu];
        for (std::size_t a = 0; a < roots.size(); ++a) {
            Labels nu = add(mu, roots[a], -1);
            if (std::any_of(nu.begin(), nu.end(), [](int v) { return v < 0; }))
                continue;
            if (height.emplace(nu, hmu + root_height[a]).second) {
                queue.push_back(nu);
                if (queue.size() > capacity)
                    throw CapacityError("weight system of " + w.to_string() + " exceeds capacity");
            }
        }
    }
    std::stable_sort(queue.begin(), queue.end(),
                     [&](const Labels& a, const Labels& b) { return height[a] < height[b]; });

    Labels lr = w.labels();
    for (auto& v : lr)
        v += 1;
    const long long top = alg.scaled_form(lr, lr);

    std::map<Labels, long long> dom;
    dom[w.labels()] = 1;
    for (std::size_t k = 1; k < queue.size(); ++k) {
        const Labels& mu = queue[k];
        Labels mr = mu;
        for (auto& v : mr)
            v += 1;
        const long long denom = top - alg.scaled_form(mr, mr);
        long long num = 0;
        for (const auto& alpha : roots) {
            Labels x = mu;
            while (true) {
                x = add(x, alpha);
                auto it = dom.find(dominant_rep(alg, x));
                if (it == dom.end())
                    break;
                num += alg.scaled_form(x, alpha) * it->second;
            }
        }
        num *= 2;
        if (denom <= 0 || num % denom != 0)
            throw InvariantError("Freudenthal recursion produced a non-integral multiplicity");
        if (num != 0)
            dom[mu] = num / denom;
    }

    WeightSystem out;
    for (const auto& [mu, m] : dom) {
        std::vector<Labels> orbit{mu};
        std::set<Labels> seen{mu};
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            for (int i = 0; i < r; ++i) {
                const int c = orbit[k][i];
                if (c <= 0)
                    continue;
                Labels y = add(orbit[k], alg.simple_root(i), -c);
                if (seen.insert(y).second) {
                    orbit.push_back(y);
                    if (out.size() + orbit.size() > capacity)
                        throw CapacityError("weight system of " + w.to_string() +
                                            " exceeds capacity");
                }
            }
        }
        for (auto& y : orbit)
            out.emplace(std::move(y), m);
    }
    return out;
}

Weight parse_weight(const SimpleAlgebra& alg, std::string_view text)
{
    const std::string s(text);
    if (s.empty())
        throw InputError("empty weight");
    if (s[0] == 'w' || s[0] == 'W') {
        int i = 0;
        auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), i);
        if (ec != std::errc() || ptr != s.data() + s.size() || i < 1 || i > alg.rank())
            throw InputError("malformed fundamental weight '" + s + "' for " + alg.name());
        return Weight::fundamental(alg.rank(), i);
    }
    Labels labels;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
            throw InputError("malformed weight '" + s + "'");
        labels.push_back(v);
    }
    if (labels.size() == 1 && labels[0] == 0 && alg.rank() > 1)
        return Weight::zero(alg.rank());
    Weight w(std::move(labels));
    alg.check(w);
    return w;
}

}  // namespace cblocks
