#include "boardsat/boards.hpp"

#include "boardsat/error.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace boardsat {

Board::Board(VarSet vars, unsigned width_cap) : vars_(vars)
{
    const unsigned k = vars_.size();
    if (k > std::min(width_cap, 30u))
        throw ResourceLimit(fmt::format("board over {} needs 2^{} entries (cap 2^{})", vars_.to_string(), k,
                                        std::min(width_cap, 30u)));
    const auto count = static_cast<std::int32_t>(capacity());
    prev_.resize(static_cast<std::size_t>(count));
    next_.resize(static_cast<std::size_t>(count));
    for (std::int32_t i = 0; i < count; ++i) {
        prev_[i] = i == 0 ? kEnd : i - 1;
        next_[i] = i + 1 == count ? kEnd : i + 1;
    }
    first_ = 0;
    last_ = count - 1;
}

bool Board::remove(Word pattern)
{
    const auto i = static_cast<std::int32_t>(pattern);
    if (next_[i] == kRemoved)
        return false;
    const std::int32_t p = prev_[i];
    const std::int32_t n = next_[i];
    if (p != kEnd)
        next_[p] = n;
    if (n != kEnd)
        prev_[n] = p;
    if (i == first_)
        first_ = n;
    if (i == last_)
        last_ = p;
    prev_[i] = kRemoved;
    next_[i] = kRemoved;
    ++removed_;
    return true;
}

bool Board::links_consistent() const
{
    Word walked = 0;
    std::int32_t prev = kEnd;
    for (std::int32_t i = first_; i != kEnd; i = next_[i]) {
        if (i < 0 || static_cast<Word>(i) >= capacity() || prev_[i] != prev || (prev != kEnd && prev >= i))
            return false;
        prev = i;
        if (++walked > capacity())
            return false;
    }
    if (prev != last_ || walked != survivor_count())
        return false;
    const auto removed = static_cast<Word>(std::count(next_.begin(), next_.end(), kRemoved));
    return removed == removed_;
}

Relation Board::solutions() const
{
    std::vector<Word> rows;
    rows.reserve(survivor_count());
    for (std::int32_t i = first_; i != kEnd; i = next_[i])
        rows.push_back(static_cast<Word>(i));
    return {vars_, std::move(rows)};
}

Board& BoardSet::board_for(const VarSet& vars)
{
    const SubsetId id = idss(vars);
    auto it = boards_.find(id);
    if (it == boards_.end())
        it = boards_.emplace(id, Board(vars, width_cap_)).first;
    return it->second;
}

const Board* BoardSet::find(SubsetId id) const
{
    const auto it = boards_.find(id);
    return it == boards_.end() ? nullptr : &it->second;
}

Assignment number_sigma(const PartialAssignment& pattern, Rng& rng)
{
    const unsigned n = pattern.vars.universe();
    const Word free_bits = rng() & low_mask(n) & ~pattern.vars.mask();
    return {n, free_bits | deposit_bits(pattern.bits, pattern.vars.mask())};
}

IngestOutcome ingest_clause(BoardSet& boards, const Clause& clause, const Formula& formula, FailureSink& sink,
                            Rng& rng)
{
    IngestOutcome out;
    out.board = idss(clause.vars());
    Board& board = boards.board_for(clause.vars());

    const PartialAssignment b = clause_to_binary(clause);
    out.probe = number_sigma(b, rng);
    if (formula.satisfied_by(out.probe.bits)) {
        out.status = IngestStatus::Sat;
        return out;
    }
    sink.report(out.probe.bits);

    const Word falsifier = complement(b.bits, clause.width());
    if (clause.vars().is_full())
        sink.report(falsifier);

    out.removed = board.remove(falsifier);
    out.status = board.blocked() ? IngestStatus::Blocked : IngestStatus::Continue;
    return out;
}

} // namespace boardsat
