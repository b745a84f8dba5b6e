#pragma once

#include "boardsat/cnf.hpp"
#include "boardsat/failure_sink.hpp"
#include "boardsat/subset_id.hpp"
#include "boardsat/theta_join.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace boardsat {

using Rng = std::mt19937_64;

inline constexpr unsigned kDefaultBoardWidthCap = 26;

/// Survivor table of the local sub-problem over one variable set. Entries are
/// the 2^k local patterns, chained in ascending order through prev/next links;
/// a removed entry has both links set to kRemoved.
class Board {
public:
    static constexpr std::int32_t kRemoved = -1;
    static constexpr std::int32_t kEnd = -2;

    /// Throws ResourceLimit when the board is wider than `width_cap` (max 30).
    explicit Board(VarSet vars, unsigned width_cap = kDefaultBoardWidthCap);

    const VarSet& vars() const noexcept { return vars_; }
    unsigned width() const noexcept { return vars_.size(); }
    Word capacity() const noexcept { return Word{1} << width(); }
    Word removed_count() const noexcept { return removed_; }
    Word survivor_count() const noexcept { return capacity() - removed_; }
    bool blocked() const noexcept { return removed_ == capacity(); }

    bool survives(Word pattern) const { return next_[pattern] != kRemoved; }
    /// Unlinks `pattern`. Returns false (and changes nothing) if already removed.
    bool remove(Word pattern);

    std::int32_t first() const noexcept { return first_; }
    std::int32_t last() const noexcept { return last_; }
    std::int32_t next(Word pattern) const { return next_[pattern]; }
    std::int32_t prev(Word pattern) const { return prev_[pattern]; }

    /// Walks the chain and checks link symmetry, ordering and the removal count.
    bool links_consistent() const;

    /// The surviving patterns.
    Relation solutions() const;

private:
    VarSet vars_;
    std::vector<std::int32_t> prev_;
    std::vector<std::int32_t> next_;
    std::int32_t first_ = 0;
    std::int32_t last_ = 0;
    Word removed_ = 0;
};

class BoardSet {
public:
    explicit BoardSet(unsigned universe, unsigned width_cap = kDefaultBoardWidthCap)
        : universe_(universe), width_cap_(width_cap)
    {
    }

    /// The board for `vars`, created on first use.
    Board& board_for(const VarSet& vars);
    const Board* find(SubsetId id) const;

    unsigned universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return boards_.size(); }
    const std::map<SubsetId, Board>& boards() const noexcept { return boards_; }

private:
    unsigned universe_;
    unsigned width_cap_;
    std::map<SubsetId, Board> boards_;
};

/// Completes a partial assignment: members of `pattern.vars` take their
/// pattern bits, every other variable an independent fair bit from `rng`.
Assignment number_sigma(const PartialAssignment& pattern, Rng& rng);

enum class IngestStatus { Continue, Sat, Blocked };

struct IngestOutcome {
    IngestStatus status = IngestStatus::Continue;
    SubsetId board;
    /// The probe candidate; a witness when status == Sat.
    Assignment probe;
    bool removed = false;
};

/// Feeds one clause of `formula` into its board: probes one random completion
/// of the clause's translation (Sat on success, failure report otherwise),
/// reports the complement of full-width clauses, and unlinks the complement
/// from the board. Blocked when the board has no survivors left.
IngestOutcome ingest_clause(BoardSet& boards, const Clause& clause, const Formula& formula, FailureSink& sink,
                            Rng& rng);

} // namespace boardsat
