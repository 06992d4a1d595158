#include "cblocks/cli.hpp"

#include "cblocks/sweeps.hpp"
#include "cblocks/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

namespace cblocks {

using json = nlohmann::json;

namespace {

struct Job {
    std::string algebra = "A1";
    int level = -1;
    std::vector<std::string> weights;
    int n = 0;
    std::string fcurve;
    std::string format;
    int max_level = 3;
    bool compare_nef = false;
    std::string rays_file;
    std::string suite;
    int samples = 0;
    std::uint64_t seed = VerifyOptions{}.seed;
    bool ordered = false;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

std::vector<std::string> split_tokens(std::string_view text)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ';' || c == ' ' || c == '\t' || c == '\n') {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

// "w1^6" -> ("w1", 6); also accepts "w1x6" and the multiplication sign.
std::pair<std::string, int> split_repeat(const std::string& tok)
{
    static const std::string times = "×";
    std::size_t pos = tok.find('^');
    std::size_t skip = 1;
    if (pos == std::string::npos) {
        pos = tok.find(times);
        skip = times.size();
    }
    if (pos == std::string::npos) {
        pos = tok.find('x');
        skip = 1;
    }
    if (pos == std::string::npos)
        return {tok, 1};
    const std::string count = tok.substr(pos + skip);
    int k = 0;
    auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), k);
    if (count.empty() || ec != std::errc() || ptr != count.data() + count.size() || k < 1 || k > kMaxPoints)
        throw InputError("malformed repetition in weight token '" + tok + "'");
    return {tok.substr(0, pos), k};
}

SimpleAlgebra algebra_of(const Job& job)
{
    return SimpleAlgebra::parse(job.algebra);
}

WeightTuple tuple_of(const Job& job)
{
    if (job.level < 0)
        throw InputError("--level is required");
    if (job.weights.empty())
        throw InputError("--weights is required");
    std::string joined;
    for (const auto& w : job.weights)
        joined += w + ";";
    const SimpleAlgebra alg = algebra_of(job);
    auto weights = parse_weight_list(alg, joined);
    if (job.n > 0 && static_cast<int>(weights.size()) != job.n)
        throw InputError("--n is " + std::to_string(job.n) + " but " + std::to_string(weights.size()) +
                         " weights were given");
    return WeightTuple(alg, job.level, std::move(weights));
}

json tuple_json(const WeightTuple& t)
{
    json w = json::array();
    for (const auto& x : t.weights())
        w.push_back(x.to_string());
    return {{"algebra", t.algebra().name()}, {"level", t.level()}, {"n", t.size()}, {"weights", w}};
}

void emit_json(std::ostream& out, const json& j)
{
    out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

int cmd_rank(const Job& job, std::ostream& out)
{
    const WeightTuple t = tuple_of(job);
    const std::string r = to_string(rank(t));
    if (job.format == "json") {
        json j = tuple_json(t);
        j["rank"] = r;
        emit_json(out, j);
    } else if (job.format == "csv") {
        out << "rank\n" << r << '\n';
    } else {
        out << r << '\n';
    }
    return 0;
}

int print_degrees(const Job& job, const WeightTuple& t, const std::vector<std::pair<std::string, Rational>>& rows,
                  std::ostream& out)
{
    if (job.format == "json") {
        json j = tuple_json(t);
        if (rows.size() == 1 && rows.front().first.empty()) {
            j["degree"] = to_string(rows.front().second);
        } else {
            json d = json::object();
            for (const auto& [k, v] : rows)
                d[k] = to_string(v);
            j["degrees"] = d;
        }
        emit_json(out, j);
    } else if (job.format == "csv") {
        out << "fcurve,degree\n";
        for (const auto& [k, v] : rows)
            out << csv_field(k) << ',' << to_string(v) << '\n';
    } else {
        for (const auto& [k, v] : rows)
            out << (k.empty() ? "" : k + " ") << to_string(v) << '\n';
    }
    return 0;
}

int cmd_deg4(const Job& job, std::ostream& out)
{
    const WeightTuple t = tuple_of(job);
    return print_degrees(job, t, {{"", degree_4pt(t)}}, out);
}

int cmd_degree(const Job& job, std::ostream& out)
{
    const WeightTuple t = tuple_of(job);
    const int n = static_cast<int>(t.size());
    if (!job.fcurve.empty()) {
        const FCurve f = parse_fcurve(n, job.fcurve);
        return print_degrees(job, t, {{"", degree_on_fcurve(t, f)}}, out);
    }
    std::vector<std::pair<std::string, Rational>> rows;
    for (const auto& f : f_curves(n))
        rows.emplace_back(f.key(), degree_on_fcurve(t, f));
    return print_degrees(job, t, rows, out);
}

int cmd_c1(const Job& job, std::ostream& out)
{
    const WeightTuple t = tuple_of(job);
    const int n = static_cast<int>(t.size());
    const DivisorClass c = c1_class(t);
    bool zero = true;
    for (const auto& f : f_curves(n))
        if (pair_class(c, f) != 0) {
            zero = false;
            break;
        }
    if (job.format == "json") {
        json j = tuple_json(t);
        json coeffs = json::object();
        for (const auto& d : boundary_divisors(n))
            coeffs[d.key()] = to_string(c.coefficient(d));
        j["c1"] = coeffs;
        j["class_is_numerically_zero"] = zero;
        emit_json(out, j);
    } else if (job.format == "csv") {
        out << "divisor,coefficient\n";
        for (const auto& d : boundary_divisors(n))
            out << csv_field(d.key()) << ',' << to_string(c.coefficient(d)) << '\n';
    } else {
        for (const auto& d : boundary_divisors(n))
            out << d.key() << ' ' << to_string(c.coefficient(d)) << '\n';
        out << "numerically_zero " << (zero ? "true" : "false") << '\n';
    }
    return 0;
}

int cmd_symm(const Job& job, std::ostream& out)
{
    const WeightTuple t = tuple_of(job);
    const auto coeffs = symmetrized_c1(t);
    if (job.format == "json") {
        json j = tuple_json(t);
        json s = json::object();
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            s["D_" + std::to_string(i + 2)] = to_string(coeffs[i]);
        j["symmetrized_c1"] = s;
        emit_json(out, j);
    } else {
        if (job.format == "csv")
            out << "class,coefficient\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            out << "D_" << i + 2 << (job.format == "csv" ? "," : " ") << to_string(coeffs[i]) << '\n';
    }
    return 0;
}

int cmd_basis(const Job& job, std::ostream& out)
{
    if (job.n < 4)
        throw InputError("basis needs --n >= 4");
    const BasisReport rep = basis_report(job.n);
    const auto curves = f_curves(job.n);
    auto labels = [](const WeightTuple& t) {
        std::string s;
        for (const auto& w : t.weights())
            s += w.to_string();
        return s;
    };
    if (job.format == "json") {
        json keys = json::array();
        for (const auto& f : curves)
            keys.push_back(f.key());
        json tuples = json::array();
        json matrix = json::array();
        for (std::size_t i = 0; i < rep.tuples.size(); ++i) {
            tuples.push_back(labels(rep.tuples[i]));
            json row = json::array();
            for (const auto& d : rep.degree_vectors[i])
                row.push_back(d.get_num().get_si());
            matrix.push_back(row);
        }
        emit_json(out, {{"n", job.n},
                        {"fcurves", keys},
                        {"tuples", tuples},
                        {"degree_matrix", matrix},
                        {"rank", rep.rank},
                        {"pic_rank", rep.expected},
                        {"is_basis", rep.ok()}});
    } else if (job.format == "csv") {
        out << "tuple";
        for (const auto& f : curves)
            out << ',' << csv_field(f.key());
        out << '\n';
        for (std::size_t i = 0; i < rep.tuples.size(); ++i) {
            out << labels(rep.tuples[i]);
            for (const auto& d : rep.degree_vectors[i])
                out << ',' << to_string(d);
            out << '\n';
        }
    } else {
        out << "n " << job.n << "\ntuples " << rep.tuples.size() << "\nrank " << rep.rank << "\npic_rank "
            << rep.expected << '\n';
        for (std::size_t i = 0; i < rep.tuples.size(); ++i) {
            out << labels(rep.tuples[i]);
            for (const auto& d : rep.degree_vectors[i])
                out << ' ' << to_string(d);
            out << '\n';
        }
    }
    return rep.ok() ? 0 : 1;
}

std::vector<RVector> read_rays(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open ray file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("ray file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_array())
        throw InputError("ray file must hold a JSON array of integer vectors");
    std::vector<RVector> rays;
    for (const auto& row : j) {
        if (!row.is_array())
            throw InputError("ray file must hold a JSON array of integer vectors");
        RVector v;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw InputError("ray entries must be integers");
            v.emplace_back(static_cast<long>(x.get<long long>()));
        }
        rays.push_back(std::move(v));
    }
    return rays;
}

int cmd_cone(const Job& job, std::ostream& out)
{
    json j;
    std::vector<RVector> rays;
    if (!job.rays_file.empty()) {
        RayMatrix m;
        m.rays = read_rays(job.rays_file);
        if (m.rays.empty())
            throw InputError("ray file holds no rays");
        m.ambient_dim = m.rays.front().size();
        rays = extremal_rays(m);
        j = {{"source", job.rays_file}, {"candidate_rays", m.rays.size()}};
    } else {
        if (job.n < 4)
            throw InputError("cone needs --n >= 4 (or --rays FILE)");
        const ConeExperiment ex = sl2_cone_experiment(job.n, job.max_level, job.compare_nef);
        rays = ex.rays;
        json keys = json::array();
        for (const auto& f : f_curves(job.n))
            keys.push_back(f.key());
        j = {{"n", job.n},
             {"max_level", job.max_level},
             {"fcurves", keys},
             {"candidate_rays", ex.candidate_rays},
             {"dimension", ex.dimension}};
        if (job.compare_nef) {
            j["nef_generators"] = ex.nef_generators;
            j["nef_generators_inside"] = ex.nef_generators_inside;
        }
    }
    json arr = json::array();
    for (const auto& r : rays) {
        json row = json::array();
        for (const auto& x : r)
            row.push_back(x.get_num().get_si());
        arr.push_back(row);
    }
    j["extremal_ray_count"] = rays.size();
    j["extremal_rays"] = arr;

    if (job.format == "json") {
        emit_json(out, j);
    } else {
        const char* sep = job.format == "csv" ? "," : " ";
        if (job.format == "plain") {
            out << "candidate_rays " << j["candidate_rays"].get<std::size_t>() << '\n';
            out << "extremal_rays " << rays.size() << '\n';
            if (j.contains("nef_generators"))
                out << "nef_generators_inside " << j["nef_generators_inside"].get<std::size_t>() << '/'
                    << j["nef_generators"].get<std::size_t>() << '\n';
        }
        for (const auto& r : rays) {
            for (std::size_t i = 0; i < r.size(); ++i)
                out << (i ? sep : "") << to_string(r[i]);
            out << '\n';
        }
    }
    return 0;
}

int cmd_verify(const Job& job, std::ostream& out)
{
    VerifyOptions opt;
    if (job.n > 0)
        opt.n = job.n;
    if (job.level >= 0)
        opt.level = job.level;
    opt.samples = job.samples;
    opt.seed = job.seed;
    opt.ordered = job.ordered;
    const SuiteReport rep = run_suite(job.suite, opt);
    if (job.format == "json") {
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
        emit_json(out, {{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", checks}});
    } else if (job.format == "csv") {
        out << "check,passed,cases,detail\n";
        for (const auto& c : rep.checks)
            out << csv_field(c.name) << ',' << (c.passed ? "true" : "false") << ',' << c.cases << ','
                << csv_field(c.detail) << '\n';
    } else {
        for (const auto& c : rep.checks)
            out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        out << (rep.passed() ? "PASS" : "FAIL") << ' ' << rep.suite << '\n';
    }
    return rep.passed() ? 0 : 1;
}

}  // namespace

std::vector<Weight> parse_weight_list(const SimpleAlgebra& alg, std::string_view text)
{
    std::vector<Weight> out;
    for (const auto& raw : split_tokens(text)) {
        const auto [tok, times] = split_repeat(raw);
        std::vector<Weight> ws;
        if (alg.rank() == 1 && tok[0] != 'w' && tok[0] != 'W') {
            // One label per weight, so commas separate weights.
            for (std::size_t start = 0;;) {
                const std::size_t comma = tok.find(',', start);
                ws.push_back(parse_weight(alg, tok.substr(start, comma - start)));
                if (comma == std::string::npos)
                    break;
                start = comma + 1;
            }
        } else {
            ws.push_back(parse_weight(alg, tok));
        }
        for (int k = 0; k < times; ++k)
            out.insert(out.end(), ws.begin(), ws.end());
    }
    if (out.empty())
        throw InputError("empty weight list");
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Job job;
    CLI::App app{"Ranks, degrees and first Chern classes of conformal-block bundles on M_{0,n}", "cbtool"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    const std::vector<std::string> formats = {"json", "csv", "plain"};
    auto tuple_opts = [&](CLI::App* sub) {
        sub->add_option("--algebra,-g", job.algebra, "Simple Lie algebra, e.g. A1, B3, E8")->capture_default_str();
        sub->add_option("--level,-l", job.level, "Level ell")->required();
        sub->add_option("--weights,-w", job.weights, "Weights: 1,1,1,1 | 1,0;0,1 | w1^6")->required();
        sub->add_option("--n", job.n, "Number of marked points (checked against the weights)");
    };
    auto format_opt = [&](CLI::App* sub, const char* fallback) {
        job.format = fallback;
        sub->add_option("--format,-f", job.format, "Output format")->check(CLI::IsMember(formats));
    };

    CLI::App* rank_cmd = app.add_subcommand("rank", "Rank of the bundle of conformal blocks");
    tuple_opts(rank_cmd);
    CLI::App* deg4_cmd = app.add_subcommand("deg4", "Degree on M_{0,4}");
    tuple_opts(deg4_cmd);
    CLI::App* degree_cmd = app.add_subcommand("degree", "Degree on one F-curve, or on all of them");
    tuple_opts(degree_cmd);
    degree_cmd->add_option("--fcurve", job.fcurve, "F-curve, e.g. 1|2|3|4,5");
    CLI::App* c1_cmd = app.add_subcommand("c1", "Boundary representative of the first Chern class");
    tuple_opts(c1_cmd);
    CLI::App* symm_cmd = app.add_subcommand("symm", "Symmetrized first Chern class");
    tuple_opts(symm_cmd);
    CLI::App* basis_cmd = app.add_subcommand("basis", "Level-1 sl2 determinants as a basis of Pic");
    basis_cmd->add_option("--n", job.n, "Number of marked points")->required();
    CLI::App* cone_cmd = app.add_subcommand("cone", "Cone spanned by sl2 conformal-block divisors");
    cone_cmd->add_option("--n", job.n, "Number of marked points");
    cone_cmd->add_option("--max-level", job.max_level, "Largest level in the sweep")->capture_default_str();
    cone_cmd->add_flag("--compare-nef", job.compare_nef, "Test the nef-cone generators for membership");
    cone_cmd->add_option("--rays", job.rays_file, "JSON file with integer rays; replaces the sweep");
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify_cmd->add_option("suite", job.suite, "Suite name")->required()->check(CLI::IsMember(suites));
    verify_cmd->add_option("--n", job.n, "Marked points (nefness, basis)");
    verify_cmd->add_option("--level", job.level, "Level (nefness)");
    verify_cmd->add_option("--samples", job.samples, "Random instances for sampled suites");
    verify_cmd->add_option("--seed", job.seed, "Random seed")->capture_default_str();
    verify_cmd->add_flag("--ordered", job.ordered, "Sweep ordered tuples instead of multisets");

    format_opt(rank_cmd, "plain");
    format_opt(deg4_cmd, "plain");
    format_opt(degree_cmd, "plain");
    format_opt(c1_cmd, "json");
    format_opt(symm_cmd, "json");
    format_opt(basis_cmd, "json");
    format_opt(cone_cmd, "json");
    format_opt(verify_cmd, "plain");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: usage: " << msg << '\n';
        return 2;
    }

    // Each subcommand registered its own default format; the one that ran wins.
    const std::pair<CLI::App*, const char*> defaults[] = {
        {rank_cmd, "plain"}, {deg4_cmd, "plain"}, {degree_cmd, "plain"}, {c1_cmd, "json"},
        {symm_cmd, "json"},  {basis_cmd, "json"}, {cone_cmd, "json"},    {verify_cmd, "plain"},
    };
    for (const auto& [sub, fallback] : defaults)
        if (sub->parsed() && sub->count("--format") == 0)
            job.format = fallback;

    try {
        if (rank_cmd->parsed())
            return cmd_rank(job, out);
        if (deg4_cmd->parsed())
            return cmd_deg4(job, out);
        if (degree_cmd->parsed())
            return cmd_degree(job, out);
        if (c1_cmd->parsed())
            return cmd_c1(job, out);
        if (symm_cmd->parsed())
            return cmd_symm(job, out);
        if (basis_cmd->parsed())
            return cmd_basis(job, out);
        if (cone_cmd->parsed())
            return cmd_cone(job, out);
        if (verify_cmd->parsed())
            return cmd_verify(job, out);
    } catch (const InputError& e) {
        err << "error: input: " << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        err << "error: capacity: " << e.what() << '\n';
        return 1;
    } catch (const InvariantError& e) {
        err << "error: invariant: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << '\n';
        return 1;
    }
    err << "error: usage: no command given\n";
    return 2;
}

}  // namespace cblocks
