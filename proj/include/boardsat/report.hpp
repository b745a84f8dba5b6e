#pragma once

#include "boardsat/orchestrator.hpp"

#include <string>

#include "json.hpp"

namespace boardsat {

nlohmann::json to_json(const EngineStats& stats);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const PortfolioConfig& cfg);

/// Structured record of one solve: verdict, witness bit string (x_{n-1}..x_0),
/// winning engine, per-engine stats, config echo and timings.
nlohmann::json run_report(const PortfolioResult& result, const PortfolioConfig& cfg, unsigned n);

/// "v" line in DIMACS literal form: "v -1 2 3 0".
std::string witness_literals(const Assignment& a);

std::string_view to_string(EngineSelection s) noexcept;
std::string_view to_string(Schedule s) noexcept;

} // namespace boardsat
