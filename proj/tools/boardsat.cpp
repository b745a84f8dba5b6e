#include "boardsat/analysis.hpp"
#include "boardsat/dimacs.hpp"
#include "boardsat/error.hpp"
#include "boardsat/oracle.hpp"
#include "boardsat/orchestrator.hpp"
#include "boardsat/report.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include <fmt/format.h>

using namespace boardsat;

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

std::string read_input(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInput("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Word parse_bitstring(const std::string& s, unsigned n)
{
    if (s.size() != n || s.find_first_not_of("01") != std::string::npos)
        throw InvalidInput(fmt::format("witness '{}' is not a {}-bit string", s, n));
    Word w = 0;
    for (char c : s)
        w = (w << 1) | static_cast<Word>(c == '1');
    return w;
}

nlohmann::json describe(const ImplicitFormula& f)
{
    nlohmann::json j;
    j["type"] = "extreme";
    j["n"] = f.variable_count();
    j["witness"] = f.witness() ? nlohmann::json(to_bitstring(*f.witness(), f.variable_count())) : nlohmann::json();
    j["dnf"] = f.dnf();
    return j;
}

ImplicitFormula from_descriptor(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("bad instance descriptor: ") + e.what());
    }
    if (j.value("type", "") != "extreme" || !j.contains("n") || !j["n"].is_number_unsigned())
        throw InvalidInput("descriptor needs type \"extreme\" and an unsigned n");
    const auto n = j["n"].get<unsigned>();
    if (n > kMaxVariables)
        throw UnsupportedInstance(fmt::format("n = {} exceeds {}", n, kMaxVariables));
    std::optional<Word> witness;
    if (j.contains("witness") && !j["witness"].is_null())
        witness = parse_bitstring(j["witness"].get<std::string>(), n);
    return ImplicitFormula(n, witness);
}

Instance load_instance(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return from_descriptor(text);
    std::vector<ParseDiagnostic> warnings;
    Formula f = parse_dimacs(text, &warnings);
    for (const auto& w : warnings)
        std::cerr << "warning: line " << w.line << ": " << w.message << '\n';
    return f;
}

struct SolveOptions {
    std::string path;
    std::string engine = "all";
    std::string schedule = "concurrent";
    std::string report;
    unsigned p = 1;
    std::uint64_t seed = 0;
    unsigned tracker_cap = kDefaultTrackerCap;
    std::size_t join_cap = kDefaultJoinRowCap;
    unsigned board_cap = kDefaultBoardWidthCap;
    std::size_t queue_capacity = kDefaultQueueCapacity;
    bool literal_draw = false;
    unsigned expand = 0;
};

int cmd_solve(const SolveOptions& o)
{
    const Instance instance = load_instance(read_input(o.path));
    const std::map<std::string, EngineSelection> engines{{"all", EngineSelection::All},
                                                         {"deterministic", EngineSelection::Deterministic},
                                                         {"random", EngineSelection::Random},
                                                         {"tracker", EngineSelection::Tracker}};
    PortfolioConfig cfg;
    cfg.engines = engines.at(o.engine);
    cfg.schedule = o.schedule == "deterministic" ? Schedule::Deterministic : Schedule::Concurrent;
    cfg.prefix_bits = o.p;
    cfg.seed = o.seed;
    cfg.tracker_cap = o.tracker_cap;
    cfg.join_row_cap = o.join_cap;
    cfg.board_width_cap = o.board_cap;
    cfg.queue_capacity = o.queue_capacity;
    cfg.literal_draw = o.literal_draw;
    cfg.implicit_expand_limit = o.expand;

    const PortfolioResult r = solve(instance, cfg);
    const unsigned n = instance.variable_count();
    if (o.report == "json") {
        std::cout << run_report(r, cfg, n).dump() << '\n';
    } else {
        const Verdict& v = r.verdict;
        std::cout << fmt::format("c engine {}  {:.6f}s\n", to_string(v.source), r.wall_seconds);
        if (!v.message.empty())
            std::cout << "c " << v.message << '\n';
        switch (v.answer) {
        case Answer::Sat:
            std::cout << "s SATISFIABLE\n";
            std::cout << "c witness " << v.witness->to_string() << '\n';
            std::cout << witness_literals(*v.witness) << '\n';
            break;
        case Answer::Unsat: std::cout << "s UNSATISFIABLE\n"; break;
        default: std::cout << "s UNKNOWN\n"; break;
        }
    }
    switch (r.verdict.answer) {
    case Answer::Sat: return kExitSat;
    case Answer::Unsat: return kExitUnsat;
    default: return kExitInconclusive;
    }
}

struct CurveOptions {
    unsigned n = 20;
    Word s = 1;
    unsigned p = 1;
    std::string model = "sequential";
    std::vector<Word> k;
};

std::vector<Word> default_ks(const CurveOptions& o)
{
    if (o.n > kMaxVariables)
        throw InvalidInput(fmt::format("n = {} exceeds {}", o.n, kMaxVariables));
    const Word space = Word{1} << o.n;
    const Word last = o.s <= space ? space - o.s : 0;
    std::vector<Word> ks{0};
    for (Word k = 1; k < last; k <<= 1)
        ks.push_back(k);
    if (last > 0)
        ks.push_back(last);
    return ks;
}

int cmd_probcurve(const CurveOptions& o)
{
    std::vector<ProbModel> models;
    if (o.model == "sequential" || o.model == "all")
        models.push_back(ProbModel::Sequential);
    if (o.model == "random" || o.model == "all")
        models.push_back(ProbModel::RandomEngine);
    if (o.model == "tracker" || o.model == "all")
        models.push_back(ProbModel::Tracker);
    const std::vector<Word> ks = o.k.empty() ? default_ks(o) : o.k;

    std::cout << kProbCsvHeader << '\n';
    for (Word k : ks)
        for (ProbModel m : models) {
            try {
                std::cout << to_csv_row(prob_point(m, o.s, k, o.n, o.p)) << '\n';
            } catch (const InvalidInput& e) {
                if (models.size() == 1)
                    throw;
                std::cerr << "skipped " << to_string(m) << " at k = " << k << ": " << e.what() << '\n';
            }
        }
    return 0;
}

struct GenerateOptions {
    bool random = false;
    bool extreme = false;
    unsigned n = 3;
    std::optional<unsigned> k;
    unsigned kmin = 3;
    unsigned kmax = 3;
    std::size_t m = 0;
    std::uint64_t seed = 0;
    std::string witness;
    bool unsat = false;
    bool cnf = false;
};

int cmd_generate(const GenerateOptions& o)
{
    if (o.random == o.extreme)
        throw InvalidInput("choose exactly one of --random or --extreme");
    if (o.n == 0 || o.n > kMaxVariables)
        throw InvalidInput(fmt::format("n must be in [1, {}]", kMaxVariables));
    if (o.random) {
        const WidthDistribution widths = o.k ? WidthDistribution::fixed(*o.k) : WidthDistribution::mixed(o.kmin, o.kmax);
        if (widths.min_width == 0 || widths.min_width > widths.max_width)
            throw InvalidInput("clause widths need 1 <= kmin <= kmax");
        std::cout << write_dimacs(random_formula(o.n, o.m, widths, o.seed));
        return 0;
    }
    const ImplicitFormula f = !o.witness.empty() ? ImplicitFormula(o.n, parse_bitstring(o.witness, o.n))
                                                 : extreme_instance(o.n, o.seed, !o.unsat);
    if (o.cnf)
        std::cout << write_dimacs(to_cnf(f));
    else
        std::cout << describe(f).dump() << '\n';
    return 0;
}

struct HistogramOptions {
    unsigned n = 12;
    unsigned p = 0;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    bool unsat = false;
};

int cmd_histogram(const HistogramOptions& o)
{
    const HitHistogram h = empirical_hit_histogram(o.n, o.p, o.trials, o.seed, !o.unsat);
    std::cout << "iterations,count\n";
    for (const auto& [it, count] : h.counts)
        std::cout << it << ',' << count << '\n';
    std::cerr << fmt::format("trials {} exhausted {} mean {:.3f} stddev {:.3f} expected {:.1f}\n", h.trials,
                             h.exhausted, h.mean, h.stddev,
                             (static_cast<double>(Word{1} << (o.n - o.p)) + 1.0) / 2.0);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"boardsat: board-based portfolio SAT solver"};
    app.require_subcommand(1);

    SolveOptions so;
    auto* solve_cmd = app.add_subcommand("solve", "solve a DIMACS file or instance descriptor");
    solve_cmd->add_option("input", so.path, "path, or - for standard input")->required();
    solve_cmd->add_option("--engine", so.engine)->check(CLI::IsMember({"all", "deterministic", "random", "tracker"}));
    solve_cmd->add_option("--p", so.p, "prefix bits of the random engine");
    solve_cmd->add_option("--seed", so.seed);
    solve_cmd->add_option("--schedule", so.schedule)->check(CLI::IsMember({"concurrent", "deterministic"}));
    solve_cmd->add_option("--report", so.report)->check(CLI::IsMember({"json"}));
    solve_cmd->add_option("--tracker-cap", so.tracker_cap);
    solve_cmd->add_option("--join-cap", so.join_cap, "row cap of intermediate joins");
    solve_cmd->add_option("--board-cap", so.board_cap, "widest clause given a board");
    solve_cmd->add_option("--queue-capacity", so.queue_capacity);
    solve_cmd->add_flag("--literal-draw", so.literal_draw, "use the unclamped-range shuffle draw");
    solve_cmd->add_option("--expand", so.expand, "expand descriptors up to this many variables into CNF");

    CurveOptions co;
    auto* curve_cmd = app.add_subcommand("probcurve", "success probability per iteration as CSV");
    curve_cmd->add_option("--n", co.n);
    curve_cmd->add_option("--s", co.s, "number of witnesses");
    curve_cmd->add_option("--p", co.p);
    curve_cmd->add_option("--model", co.model)->check(CLI::IsMember({"sequential", "random", "tracker", "all"}));
    curve_cmd->add_option("--k", co.k, "comma separated iteration counts")->delimiter(',');

    GenerateOptions go;
    auto* gen_cmd = app.add_subcommand("generate", "random CNF or hidden-witness instances");
    gen_cmd->add_flag("--random", go.random);
    gen_cmd->add_flag("--extreme", go.extreme);
    gen_cmd->add_option("--n", go.n);
    gen_cmd->add_option("--k", go.k, "fixed clause width");
    gen_cmd->add_option("--kmin", go.kmin);
    gen_cmd->add_option("--kmax", go.kmax);
    gen_cmd->add_option("--m", go.m, "clause count");
    gen_cmd->add_option("--seed", go.seed);
    gen_cmd->add_option("--witness", go.witness, "x_{n-1}..x_0 bit string");
    gen_cmd->add_flag("--unsat", go.unsat, "no witness");
    gen_cmd->add_flag("--cnf", go.cnf, "print the explicit CNF instead of the descriptor");

    HistogramOptions ho;
    auto* hist_cmd = app.add_subcommand("histogram", "iterations until the random engine hits the witness");
    hist_cmd->add_option("--n", ho.n);
    hist_cmd->add_option("--p", ho.p);
    hist_cmd->add_option("--trials", ho.trials);
    hist_cmd->add_option("--seed", ho.seed);
    hist_cmd->add_flag("--unsat", ho.unsat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitError;
    }

    try {
        if (*solve_cmd)
            return cmd_solve(so);
        if (*curve_cmd)
            return cmd_probcurve(co);
        if (*gen_cmd)
            return cmd_generate(go);
        if (*hist_cmd)
            return cmd_histogram(ho);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
