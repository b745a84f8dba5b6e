#pragma once

#include "boardsat/boards.hpp"
#include "boardsat/failure_sink.hpp"
#include "boardsat/instance.hpp"
#include "boardsat/theta_join.hpp"
#include "boardsat/verdict.hpp"

#include <cstdint>
#include <optional>
#include <stop_token>

namespace boardsat {

struct DeterministicConfig {
    std::uint64_t seed = 0;
    unsigned board_width_cap = kDefaultBoardWidthCap;
    std::size_t join_row_cap = kDefaultJoinRowCap;
};

/// One pass over the clause stream into per-variable-set boards, then the
/// theta-join of every board's survivors.
class DeterministicEngine {
public:
    DeterministicEngine(const Formula& formula, FailureSink& sink, DeterministicConfig cfg = {});

    /// Ingests the next clause, or runs the join once every clause is read.
    /// Resource guards yield an Inconclusive verdict.
    std::optional<Verdict> step(std::stop_token stop = {});
    Verdict run(std::stop_token stop = {});

    bool reading() const noexcept { return next_clause_ < formula_.clause_count(); }
    const BoardSet& boards() const noexcept { return boards_; }
    const EngineStats& stats() const noexcept { return stats_; }

private:
    std::optional<Verdict> ingest_next();
    Verdict join_boards(std::stop_token stop);
    Verdict make(Answer answer) const;

    const Formula& formula_;
    FailureSink& sink_;
    DeterministicConfig cfg_;
    BoardSet boards_;
    Rng rng_;
    std::size_t next_clause_ = 0;
    EngineStats stats_;
    double read_started_ = -1.0;
};


Verdict run_deterministic(const Formula& formula, FailureSink& sink, std::stop_token stop,
                          const DeterministicConfig& cfg = {});

} // namespace boardsat
