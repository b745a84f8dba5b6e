#pragma once

#include "boardsat/deterministic_engine.hpp"
#include "boardsat/instance.hpp"
#include "boardsat/random_engine.hpp"
#include "boardsat/tracker.hpp"
#include "boardsat/verdict.hpp"

#include <cstdint>
#include <vector>

namespace boardsat {

enum class EngineSelection { All, Deterministic, Random, Tracker };

enum class Schedule {
    Concurrent,    // one thread per engine, first final verdict wins
    Deterministic, // engines stepped round-robin on the calling thread
};

struct PortfolioConfig {
    EngineSelection engines = EngineSelection::All;
    unsigned prefix_bits = 1;
    std::uint64_t seed = 0;
    Schedule schedule = Schedule::Concurrent;
    unsigned tracker_cap = kDefaultTrackerCap;
    std::size_t join_row_cap = kDefaultJoinRowCap;
    unsigned board_width_cap = kDefaultBoardWidthCap;
    std::size_t queue_capacity = kDefaultQueueCapacity;
    bool literal_draw = false;
    /// Lets the clause-reading engine run on the explicit CNF of an implicit
    /// instance up to this many variables; 0 disables it for implicit input.
    unsigned implicit_expand_limit = 0;
};

struct PortfolioResult {
    Verdict verdict;
    /// Final state of every engine that was started, in launch order.
    std::vector<Verdict> engines;
    double wall_seconds = 0.0;
    std::uint64_t messages_sent = 0;
    std::uint64_t messages_dropped = 0;
};

/// Runs the selected engines on `instance`. A Sat answer is re-verified before
/// it is returned; if no engine reaches a final verdict the result is
/// Inconclusive. Throws InvalidInput for unusable configurations.
PortfolioResult solve(const Instance& instance, const PortfolioConfig& cfg = {});

} // namespace boardsat
