#pragma once

#include "boardsat/cnf.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace boardsat {

enum class Answer { Sat, Unsat, Inconclusive, Cancelled };

enum class EngineKind { Deterministic, Random, Tracker, Portfolio };

/// Machine-checkable justification attached to Unsat verdicts.
enum class UnsatReason {
    None,
    BlockedBoard,        // detail: subset id of the board
    IncompatibleBoards,  // detail: number of boards joined
    SearchExhausted,     // detail: candidates explored (2^n)
    CandidatesExhausted, // detail: candidates marked failed (2^n)
};

struct EngineStats {
    std::uint64_t clauses_read = 0;
    std::uint64_t boards_created = 0;
    std::uint64_t probes = 0;
    std::uint64_t join_rows_peak = 0;
    std::uint64_t theta_rows = 0;
    std::uint64_t iterations = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t skipped = 0;
    std::uint64_t failures_received = 0;
    std::uint64_t duplicate_failures = 0;
    double read_seconds = 0.0;
};

struct Verdict {
    Answer answer = Answer::Inconclusive;
    EngineKind source = EngineKind::Portfolio;
    std::optional<Assignment> witness;
    UnsatReason reason = UnsatReason::None;
    std::uint64_t reason_detail = 0;
    std::string message;
    EngineStats stats;

    bool final() const noexcept { return answer == Answer::Sat || answer == Answer::Unsat; }
};

std::string_view to_string(Answer a) noexcept;
std::string_view to_string(EngineKind e) noexcept;
std::string_view to_string(UnsatReason r) noexcept;

} // namespace boardsat
