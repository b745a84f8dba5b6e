#include "boardsat/report.hpp"

#include <fmt/format.h>

namespace boardsat {

std::string_view to_string(EngineSelection s) noexcept
{
    switch (s) {
    case EngineSelection::All: return "all";
    case EngineSelection::Deterministic: return "deterministic";
    case EngineSelection::Random: return "random";
    case EngineSelection::Tracker: return "tracker";
    }
    return "?";
}

std::string_view to_string(Schedule s) noexcept
{
    return s == Schedule::Concurrent ? "concurrent" : "deterministic";
}

nlohmann::json to_json(const EngineStats& s)
{
    return {
        {"clauses_read", s.clauses_read},
        {"boards_created", s.boards_created},
        {"probes", s.probes},
        {"join_rows_peak", s.join_rows_peak},
        {"theta_rows", s.theta_rows},
        {"iterations", s.iterations},
        {"evaluations", s.evaluations},
        {"skipped", s.skipped},
        {"failures_received", s.failures_received},
        {"duplicate_failures", s.duplicate_failures},
        {"read_seconds", s.read_seconds},
    };
}

nlohmann::json to_json(const Verdict& v)
{
    nlohmann::json j = {
        {"answer", to_string(v.answer)},
        {"engine", to_string(v.source)},
        {"message", v.message},
        {"stats", to_json(v.stats)},
    };
    if (v.answer == Answer::Unsat)
        j["reason"] = {{"kind", to_string(v.reason)}, {"detail", v.reason_detail}};
    if (v.witness)
        j["witness"] = v.witness->to_string();
    return j;
}

nlohmann::json to_json(const PortfolioConfig& cfg)
{
    return {
        {"engine", to_string(cfg.engines)},
        {"p", cfg.prefix_bits},
        {"seed", cfg.seed},
        {"schedule", to_string(cfg.schedule)},
        {"tracker_cap", cfg.tracker_cap},
        {"join_cap", cfg.join_row_cap},
        {"board_cap", cfg.board_width_cap},
        {"queue_capacity", cfg.queue_capacity},
        {"literal_draw", cfg.literal_draw},
    };
}

nlohmann::json run_report(const PortfolioResult& result, const PortfolioConfig& cfg, unsigned n)
{
    nlohmann::json engines = nlohmann::json::array();
    for (const Verdict& v : result.engines)
        engines.push_back(to_json(v));
    nlohmann::json j = {
        {"variables", n},
        {"verdict", to_string(result.verdict.answer)},
        {"engine", to_string(result.verdict.source)},
        {"message", result.verdict.message},
        {"engines", engines},
        {"config", to_json(cfg)},
        {"messages_sent", result.messages_sent},
        {"messages_dropped", result.messages_dropped},
        {"wall_seconds", result.wall_seconds},
    };
    if (result.verdict.witness)
        j["witness"] = result.verdict.witness->to_string();
    if (result.verdict.answer == Answer::Unsat)
        j["reason"] = {{"kind", to_string(result.verdict.reason)}, {"detail", result.verdict.reason_detail}};
    return j;
}

std::string witness_literals(const Assignment& a)
{
    std::string s = "v";
    for (unsigned i = 0; i < a.n; ++i)
        s += fmt::format(" {}{}", ((a.bits >> i) & 1) ? "" : "-", i + 1);
    return s + " 0";
}

} // namespace boardsat
