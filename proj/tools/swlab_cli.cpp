// swlab: batch front end for the Schur-Weyl laboratory. Subcommands cover the
// dimension tables, orthogonal-form checks, embedding verification, the
// phi(p) limit law, the periodic-Laplacian ground-energy scan, walk sampling,
// and the cylinder-function isometry check. Outputs are deterministic for a
// fixed seed; every CSV artifact carries a JSON mirror and a metadata sidecar.

#include <CLI11.hpp>

#include <Eigen/Core>
#include <algorithm>
#include <chrono>
#include <map>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "swlab/diagrams.hpp"
#include "swlab/embeddings.hpp"
#include "swlab/json_io.hpp"
#include "swlab/laplace.hpp"
#include "swlab/measures.hpp"
#include "swlab/orthoform.hpp"
#include "swlab/tensorspace.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kExitViolation = 2;
constexpr int kExitNoConverge = 3;

// all floating output: 12 significant digits, always with a decimal point
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s = buf;
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

std::string word_string(const swlab::RowWord& w) {
    std::string s;
    for (auto c : w) s += static_cast<char>('0' + c);
    return s;
}

struct Artifact {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<std::string> csvLines;  // header first
    nlohmann::json mirror;
    std::string csvExtension = ".csv";

    // writes <prefix>.csv, <prefix>.json and the <prefix>.meta.json sidecar
    void write(const std::string& prefix, double wallSeconds) const {
        if (prefix.empty()) return;
        if (!csvLines.empty()) {
            std::ofstream csv(prefix + csvExtension);
            if (!csv) throw std::invalid_argument("cannot open " + prefix + csvExtension);
            for (const auto& line : csvLines) csv << line << '\n';
        }
        if (!mirror.is_null()) {
            std::ofstream js(prefix + ".json");
            if (!js) throw std::invalid_argument("cannot open " + prefix + ".json");
            js << mirror.dump(2) << '\n';
        }
        nlohmann::json meta = {{"command", command},
                               {"version", kVersion},
                               {"seed", seed},
                               {"wallTime", wallSeconds}};
        std::ofstream ms(prefix + ".meta.json");
        if (!ms) throw std::invalid_argument("cannot open " + prefix + ".meta.json");
        ms << meta.dump(2) << '\n';
    }
};

void print_csv(const Artifact& a) {
    for (const auto& line : a.csvLines) std::cout << line << '\n';
}

swlab::StandardTableau minimal_proper_start(int k) {
    if (k == 0) return swlab::StandardTableau{1, 2};
    swlab::StandardTableau t;
    t.word.assign(static_cast<std::size_t>(k), std::uint8_t{1});
    return t;
}

// ---------------------------------------------------------------- commands

int cmd_dims(int n, Artifact& art) {
    art.csvLines = {"row1,row2,dim,mult,total"};
    std::int64_t total = 0;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& d : swlab::enumerate_two_row_diagrams(n)) {
        std::int64_t dim = swlab::dim_irrep(d);
        std::int64_t mult = d.diff() + 1;
        total += dim * mult;
        std::ostringstream line;
        line << d.row1 << ',' << d.row2 << ',' << dim << ',' << mult << ',' << dim * mult;
        art.csvLines.push_back(line.str());
        rows.push_back({{"shape", {d.row1, d.row2}}, {"dim", dim}, {"mult", mult}});
    }
    art.mirror = {{"n", n}, {"rows", rows}, {"total", total}};
    print_csv(art);
    std::cout << "total " << total << " = 2^" << n << '\n';
    if (n <= 62 && total != (std::int64_t{1} << n)) {
        std::cerr << "dimension identity violated at n = " << n << '\n';
        return kExitViolation;
    }
    return 0;
}

int cmd_check_orthoform(int nMax, Artifact& art) {
    art.csvLines = {"n,defect"};
    nlohmann::json rows = nlohmann::json::array();
    double worstAll = 0.0;
    for (int n = 2; n <= nMax; ++n) {
        double worst = 0.0;
        for (const auto& d : swlab::enumerate_two_row_diagrams(n)) {
            std::vector<swlab::SparseOperator> gen;
            for (int i = 1; i < n; ++i) gen.push_back(swlab::coxeter_generator_matrix(d, i));
            for (std::size_t i = 0; i < gen.size(); ++i) {
                worst = std::max(worst, gen[i].multiply(gen[i]).maxAbsDiffIdentity());
                if (i + 1 < gen.size()) {
                    auto lhs = gen[i].multiply(gen[i + 1]).multiply(gen[i]);
                    auto rhs = gen[i + 1].multiply(gen[i]).multiply(gen[i + 1]);
                    worst = std::max(worst, lhs.maxAbsDiff(rhs));
                }
                for (std::size_t j = i + 2; j < gen.size(); ++j)
                    worst = std::max(worst,
                                     gen[i].multiply(gen[j]).maxAbsDiff(gen[j].multiply(gen[i])));
            }
        }
        art.csvLines.push_back(std::to_string(n) + "," + fmt(worst));
        rows.push_back({{"n", n}, {"defect", worst}});
        worstAll = std::max(worstAll, worst);
    }
    art.mirror = {{"nMax", nMax}, {"rows", rows}};
    print_csv(art);
    if (worstAll > 1e-12) {
        std::cerr << "Coxeter relation defect " << fmt(worstAll) << " exceeds 1e-12\n";
        return kExitViolation;
    }
    return 0;
}

int cmd_embed_verify(int k, double p, int levels, Artifact& art) {
    auto spec = swlab::EmbeddingSpec::stationaryPair(k, p);
    int from = (k > 0) ? k : 2;
    if (levels <= from || (levels - from) % 2 != 0)
        throw std::invalid_argument("--levels must exceed the base level " +
                                    std::to_string(from) + " by a positive even amount");
    art.csvLines = {"from,to,isometry_defect,intertwining_defect"};
    nlohmann::json rows = nlohmann::json::array();
    double worst = 0.0;
    for (int to = from + 2; to <= levels; to += 2) {
        auto chain = swlab::chain_embedding(spec, from, to);
        double iso = chain.isometryDefect();
        double twine = chain.intertwiningDefect();
        worst = std::max(worst, std::max(iso, twine));
        std::ostringstream line;
        line << from << ',' << to << ',' << fmt(iso) << ',' << fmt(twine);
        art.csvLines.push_back(line.str());
        rows.push_back({{"from", from}, {"to", to}, {"isometryDefect", iso},
                        {"intertwiningDefect", twine}});
    }
    art.mirror = {{"k", k}, {"p", p}, {"rows", rows}};
    print_csv(art);
    if (worst > 1e-9) {
        std::cerr << "embedding defect " << fmt(worst) << " exceeds 1e-9\n";
        return kExitViolation;
    }
    return 0;
}

int cmd_tensor_params(int kMax, Artifact& art) {
    art.csvLines = {"k,abs_p,predicted,abs_error,phase"};
    nlohmann::json rows = nlohmann::json::array();
    double worst = 0.0;
    std::map<int, swlab::BlockParameters> byK;
    for (int n = 2; n <= kMax + 1; ++n)
        for (const auto& bp : swlab::extract_block_parameters(n))
            if (bp.k <= kMax) byK.emplace(bp.k, bp);
    for (const auto& [k, bp] : byK) {
        double r = k + 1.0;
        double predicted = std::sqrt((r - 1.0) / (2.0 * r));
        double err = std::abs(bp.absP - predicted);
        worst = std::max(worst, err);
        std::ostringstream line;
        line << k << ',' << fmt(bp.absP) << ',' << fmt(predicted) << ',' << fmt(err) << ','
             << fmt(bp.relativePhase);
        art.csvLines.push_back(line.str());
        rows.push_back({{"k", k}, {"absP", bp.absP}, {"predicted", predicted},
                        {"phase", bp.relativePhase}});
    }
    art.mirror = {{"kMax", kMax}, {"rows", rows}};
    print_csv(art);
    if (worst > 1e-8) {
        std::cerr << "tensor parameter deviates from sqrt((r-1)/(2r)) by " << fmt(worst) << '\n';
        return kExitViolation;
    }
    return 0;
}

int cmd_phi(double p, Artifact& art) {
    double value = swlab::phi(p);
    std::cout << fmt(value) << '\n';
    art.mirror = {{"p", p}, {"phi", value}};
    return 0;
}

int cmd_phi_scan(int grid, Artifact& art) {
    if (grid < 2) throw std::invalid_argument("--grid must be at least 2");
    art.csvLines = {"p,phi"};
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i <= grid; ++i) {
        double p = -1.0 + 2.0 * i / grid;
        double v = swlab::phi(p);
        art.csvLines.push_back(fmt(p) + "," + fmt(v));
        rows.push_back({{"p", p}, {"phi", v}});
    }
    auto mx = swlab::phi_maximizer(std::max(grid, 1000), 1e-12);
    art.mirror = {{"grid", grid}, {"rows", rows},
                  {"maximizer", {{"pStar", mx.pStar}, {"phiStar", mx.phiStar}}}};
    print_csv(art);
    std::cout << "maximizer p* = " << fmt(mx.pStar) << ", phi* = " << fmt(mx.phiStar) << '\n';
    return 0;
}

int cmd_limit_element(int k, double p, int level, Artifact& art) {
    auto spec = swlab::EmbeddingSpec::stationaryPair(k, p);
    int base = (k > 0) ? k + 2 : 2;
    std::vector<swlab::StandardTableau> ts;
    for (const auto& d : swlab::enumerate_two_row_diagrams(base))
        if (d.diff() == k)
            for (const auto& t : swlab::enumerate_tableaux(d)) ts.push_back(t);
    art.csvLines = {"t,s,value"};
    nlohmann::json rows = nlohmann::json::array();
    double worst = 0.0;
    double lawValue = swlab::phi(p);
    for (const auto& t : ts)
        for (const auto& s : ts) {
            double v = swlab::limit_matrix_element(k, spec, t, s, level);
            double expected = (t == s) ? lawValue : 0.0;
            worst = std::max(worst, std::abs(v - expected));
            art.csvLines.push_back(word_string(t.word) + "," + word_string(s.word) + "," +
                                   fmt(v));
            rows.push_back({{"t", word_string(t.word)}, {"s", word_string(s.word)},
                            {"value", v}});
        }
    art.mirror = {{"k", k}, {"p", p}, {"level", level}, {"phi", lawValue}, {"rows", rows}};
    print_csv(art);
    std::cout << "phi(p) = " << fmt(lawValue) << '\n';
    if (worst > 1e-9) {
        std::cerr << "limit element deviates from phi(p) delta by " << fmt(worst) << '\n';
        return kExitViolation;
    }
    return 0;
}

int cmd_ground_scan(int kMax, double tol, Artifact& art) {
    constexpr int kFeasible = 12;
    if (kMax > kFeasible) {
        std::int64_t dim = swlab::dim_irrep({kMax + 1, kMax});
        throw std::invalid_argument(
            "k-max " + std::to_string(kMax) + " exceeds the feasibility bound " +
            std::to_string(kFeasible) + ": pi_(k+1,k) has dimension " + std::to_string(dim) +
            " at k = " + std::to_string(kMax));
    }
    auto rows = swlab::ground_energy_scan(kMax, tol);
    art.csvLines = {"k,N,lambda_max,per_site,prop7_ratio,residual"};
    nlohmann::json jrows = nlohmann::json::array();
    for (const auto& r : rows) {
        std::ostringstream line;
        line << r.k << ',' << r.sites << ',' << fmt(r.lambdaMax) << ',' << fmt(r.perSite)
             << ',' << fmt(r.prop7Ratio) << ',' << fmt(r.residual);
        art.csvLines.push_back(line.str());
        jrows.push_back({{"k", r.k}, {"N", r.sites}, {"lambdaMax", r.lambdaMax},
                         {"perSite", r.perSite}, {"prop7Ratio", r.prop7Ratio},
                         {"residual", r.residual}});
    }
    art.mirror = {{"kMax", kMax}, {"tol", tol}, {"rows", jrows}};
    print_csv(art);
    if (kMax >= 5) {
        auto [a, b] = swlab::fit_per_site(rows, 4);
        art.mirror["fit"] = {{"a", a}, {"b", b}, {"kMin", 4}};
        std::cout << "fit per_site ~ a + b/N^2 over k >= 4: a = " << fmt(a)
                  << ", b = " << fmt(b) << " (2 log 2 = " << fmt(2.0 * std::log(2.0)) << ")\n";
    }
    return 0;
}

int cmd_sample(int k, double p, int depth, int count, std::uint64_t seed, Artifact& art) {
    if (depth < 1 || count < 1) throw std::invalid_argument("--depth and --count must be >= 1");
    auto spec = swlab::EmbeddingSpec::stationaryPair(k, p);
    auto m = swlab::WalkMeasure::fromSpec(minimal_proper_start(k), spec);
    art.seed = seed;
    art.csvExtension = ".jsonl";
    nlohmann::json all = nlohmann::json::array();
    for (int i = 0; i < count; ++i) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        auto path = swlab::sample_path(m, depth, s);
        nlohmann::json patterns = nlohmann::json::array();
        for (const auto& e : path) patterns.push_back(e.isP21() ? "21" : "12");
        nlohmann::json line = {{"seed", s}, {"depth", depth}, {"patterns", patterns}};
        art.csvLines.push_back(line.dump());
        all.push_back(line);
    }
    art.mirror = {{"k", k}, {"p", p}, {"depth", depth}, {"count", count}, {"seed", seed},
                  {"samples", all}};
    print_csv(art);
    return 0;
}

int cmd_isometry_check(int k, double p, int depth, Artifact& art) {
    auto spec = swlab::EmbeddingSpec::stationaryPair(k, p);
    auto start = minimal_proper_start(k);
    if (depth <= start.level() || (depth - start.level()) % 2 != 0)
        throw std::invalid_argument("--depth must exceed " + std::to_string(start.level()) +
                                    " by a positive even amount");
    auto m = swlab::WalkMeasure::fromSpec(start, spec);
    std::vector<swlab::StandardTableau> props;
    for (int level = start.level(); level <= depth - 2; level += 2)
        for (const auto& t : swlab::enumerate_proper_tableaux(k, level)) props.push_back(t);
    std::vector<swlab::CylinderFunction> fs;
    for (const auto& t : props) fs.push_back(swlab::phi_t_vector(k, spec, t, depth));
    art.csvLines = {"t,s,gram"};
    nlohmann::json rows = nlohmann::json::array();
    double worst = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < fs.size(); ++j) {
            double g = swlab::cylinder_inner(k, m, fs[i], fs[j]);
            worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
            art.csvLines.push_back(word_string(props[i].word) + "," +
                                   word_string(props[j].word) + "," + fmt(g));
            rows.push_back({{"t", word_string(props[i].word)},
                            {"s", word_string(props[j].word)}, {"gram", g}});
        }
    art.mirror = {{"k", k}, {"p", p}, {"depth", depth}, {"defect", worst}, {"rows", rows}};
    print_csv(art);
    std::cout << "max Gram defect " << fmt(worst) << " over " << props.size()
              << " cylinder functions\n";
    if (worst > 1e-8) {
        std::cerr << "cylinder isometry defect " << fmt(worst) << " exceeds 1e-8\n";
        return kExitViolation;
    }
    return 0;
}

int cmd_spin(const std::string& input, Artifact& art) {
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open " + input);
    nlohmann::json j;
    in >> j;
    auto v = swlab::tensor_from_json(j);
    auto comps = swlab::spin_components(v);
    art.csvLines = {"k,mass"};
    nlohmann::json rows = nlohmann::json::array();
    for (auto [k, mass] : comps) {
        art.csvLines.push_back(std::to_string(k) + "," + fmt(mass));
        rows.push_back({{"k", k}, {"mass", mass}});
    }
    art.mirror = {{"n", v.n}, {"squaredNorm", v.squaredNorm()}, {"rows", rows}};
    print_csv(art);
    std::cout << "squared norm " << fmt(v.squaredNorm()) << '\n';
    return 0;
}

// ---------------------------------------------------------------- campaign

// maps a validated campaign file onto the equivalent argv
std::vector<std::string> campaign_to_argv(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("campaign file must be a JSON object");
    if (!j.contains("command"))
        throw std::invalid_argument("campaign validation error: missing required key `command`");
    std::string command = j.at("command").get<std::string>();

    static const std::map<std::string, std::pair<std::vector<std::string>,
                                                 std::vector<std::string>>>
        schema = {
            // command -> ({required}, {optional})
            {"dims", {{"n"}, {}}},
            {"check-orthoform", {{"n-max"}, {}}},
            {"embed-verify", {{"k", "p", "levels"}, {}}},
            {"tensor-params", {{"k-max"}, {}}},
            {"phi", {{"p"}, {}}},
            {"phi-scan", {{"grid"}, {}}},
            {"limit-element", {{"k", "p", "level"}, {}}},
            {"ground-scan", {{"k-max"}, {"tol"}}},
            {"sample", {{"k", "p", "depth", "count", "seed"}, {}}},
            {"isometry-check", {{"k", "p", "depth"}, {}}},
            {"spin", {{"input"}, {}}},
        };
    auto it = schema.find(command);
    if (it == schema.end())
        throw std::invalid_argument("campaign validation error: unknown command `" + command +
                                    "`");
    const auto& [required, optional] = it->second;
    for (const auto& key : required)
        if (!j.contains(key))
            throw std::invalid_argument("campaign validation error: missing required key `" +
                                        key + "` for command `" + command + "`");
    for (const auto& [key, value] : j.items()) {
        if (key == "command" || key == "out") continue;
        bool known = std::count(required.begin(), required.end(), key) ||
                     std::count(optional.begin(), optional.end(), key);
        if (!known)
            throw std::invalid_argument("campaign validation error: unknown key `" + key +
                                        "` for command `" + command + "`");
    }

    std::vector<std::string> argv = {command};
    for (const auto& [key, value] : j.items()) {
        if (key == "command") continue;
        argv.push_back("--" + key);
        if (value.is_string())
            argv.push_back(value.get<std::string>());
        else
            argv.push_back(value.dump());
    }
    return argv;
}

int run(const std::vector<std::string>& args);

int cmd_campaign(const std::string& input) {
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open " + input);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("campaign parse error: ") + e.what());
    }
    return run(campaign_to_argv(j));
}

// ---------------------------------------------------------------- dispatch

int run(const std::vector<std::string>& args) {
    CLI::App app{"swlab: Schur-Weyl spectral laboratory"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    struct {
        int n = 3, nMax = 8, k = 1, levels = 7, kMaxTensor = 5, grid = 200, level = 7;
        int kMaxScan = 3, depth = 7, count = 10;
        double p = 0.0, tol = 1e-10;
        std::uint64_t seed = 2024;
        std::string out, input;
    } o;

    auto add_out = [&o](CLI::App* sub) {
        sub->add_option("--out", o.out, "artifact path prefix (.csv/.json/.meta.json)");
    };

    auto* dims = app.add_subcommand("dims", "dimension table at one level");
    dims->add_option("--n", o.n, "level")->required()->check(CLI::Range(1, 60));
    add_out(dims);

    auto* chk = app.add_subcommand("check-orthoform", "Coxeter relation defects");
    chk->add_option("--n-max", o.nMax, "largest level")->required()->check(CLI::Range(2, 14));
    add_out(chk);

    auto* emb = app.add_subcommand("embed-verify", "chain embedding defects");
    emb->add_option("--k", o.k, "shape difference")->required()->check(CLI::Range(0, 8));
    emb->add_option("--p", o.p, "stationary parameter")->required()
        ->check(CLI::Range(-1.0, 1.0));
    emb->add_option("--levels", o.levels, "target level")->required()->check(CLI::Range(2, 14));
    add_out(emb);

    auto* tp = app.add_subcommand("tensor-params", "tensor embedding block parameters");
    tp->add_option("--k-max", o.kMaxTensor, "largest spin")->required()
        ->check(CLI::Range(1, 10));
    add_out(tp);

    auto* ph = app.add_subcommand("phi", "evaluate the limit law");
    ph->add_option("--p", o.p, "parameter")->required()->check(CLI::Range(-1.0, 1.0));
    add_out(ph);

    auto* ps = app.add_subcommand("phi-scan", "tabulate the limit law");
    ps->add_option("--grid", o.grid, "grid intervals over [-1,1]")->required()
        ->check(CLI::Range(2, 1000000));
    add_out(ps);

    auto* le = app.add_subcommand("limit-element", "limit matrix elements");
    le->add_option("--k", o.k, "shape difference")->required()->check(CLI::Range(0, 6));
    le->add_option("--p", o.p, "stationary parameter")->required()
        ->check(CLI::Range(-1.0, 1.0));
    le->add_option("--level", o.level, "embedding level")->required()->check(CLI::Range(4, 16));
    add_out(le);

    auto* gs = app.add_subcommand("ground-scan", "periodic Laplacian ground-energy scan");
    gs->add_option("--k-max", o.kMaxScan, "largest k (N = 2k + 1)")->required()
        ->check(CLI::Range(1, 30));
    gs->add_option("--tol", o.tol, "eigenvalue tolerance");
    add_out(gs);

    auto* sa = app.add_subcommand("sample", "sample walk paths as JSON lines");
    sa->add_option("--k", o.k, "shape difference")->required()->check(CLI::Range(0, 8));
    sa->add_option("--p", o.p, "stationary parameter")->required()
        ->check(CLI::Range(-1.0, 1.0));
    sa->add_option("--depth", o.depth, "steps per path")->required();
    sa->add_option("--count", o.count, "number of paths")->required();
    sa->add_option("--seed", o.seed, "base seed")->required();
    add_out(sa);

    auto* ic = app.add_subcommand("isometry-check", "cylinder function Gram matrix");
    ic->add_option("--k", o.k, "shape difference")->required()->check(CLI::Range(0, 4));
    ic->add_option("--p", o.p, "stationary parameter")->required()
        ->check(CLI::Range(-1.0, 1.0));
    ic->add_option("--depth", o.depth, "cylinder level")->required()->check(CLI::Range(2, 13));
    add_out(ic);

    auto* sp = app.add_subcommand("spin", "spin decomposition of a tensor vector");
    sp->add_option("--input", o.input, "tensor vector JSON file")->required();
    add_out(sp);

    auto* ca = app.add_subcommand("campaign", "run a campaign config file");
    ca->add_option("--input", o.input, "campaign JSON file")->required();

    // CLI11 parses argv reversed
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    Artifact art;
    art.command = app.get_subcommands().front()->get_name();
    art.seed = o.seed;
    auto t0 = std::chrono::steady_clock::now();
    int status = 0;
    try {
        if (dims->parsed()) status = cmd_dims(o.n, art);
        else if (chk->parsed()) status = cmd_check_orthoform(o.nMax, art);
        else if (emb->parsed()) status = cmd_embed_verify(o.k, o.p, o.levels, art);
        else if (tp->parsed()) status = cmd_tensor_params(o.kMaxTensor, art);
        else if (ph->parsed()) status = cmd_phi(o.p, art);
        else if (ps->parsed()) status = cmd_phi_scan(o.grid, art);
        else if (le->parsed()) status = cmd_limit_element(o.k, o.p, o.level, art);
        else if (gs->parsed()) status = cmd_ground_scan(o.kMaxScan, o.tol, art);
        else if (sa->parsed()) status = cmd_sample(o.k, o.p, o.depth, o.count, o.seed, art);
        else if (ic->parsed()) status = cmd_isometry_check(o.k, o.p, o.depth, art);
        else if (sp->parsed()) status = cmd_spin(o.input, art);
        else if (ca->parsed()) return cmd_campaign(o.input);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::runtime_error& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitNoConverge;
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.out.empty()) art.write(o.out, wall);
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("SWLAB_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || n < 1) {
            std::cerr << "error: SWLAB_THREADS must be a positive integer\n";
            return kExitViolation;
        }
        Eigen::setNbThreads(static_cast<int>(n));
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run(args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitViolation;
    }
}
