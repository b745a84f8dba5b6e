#include "boardsat/deterministic_engine.hpp"

#include "boardsat/error.hpp"

#include <chrono>
#include <stdexcept>

#include <fmt/format.h>

namespace boardsat {
namespace {

double now_seconds()
{
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

} // namespace

DeterministicEngine::DeterministicEngine(const Formula& formula, FailureSink& sink, DeterministicConfig cfg)
    : formula_(formula), sink_(sink), cfg_(cfg), boards_(formula.variable_count(), cfg.board_width_cap), rng_(cfg.seed)
{
}

Verdict DeterministicEngine::make(Answer answer) const
{
    Verdict v;
    v.answer = answer;
    v.source = EngineKind::Deterministic;
    v.stats = stats_;
    return v;
}

std::optional<Verdict> DeterministicEngine::ingest_next()
{
    if (read_started_ < 0)
        read_started_ = now_seconds();
    const Clause& clause = formula_.clauses()[next_clause_++];
    const std::size_t boards_before = boards_.size();

    IngestOutcome outcome;
    try {
        outcome = ingest_clause(boards_, clause, formula_, sink_, rng_);
    } catch (const ResourceLimit& e) {
        Verdict v = make(Answer::Inconclusive);
        v.message = fmt::format("inconclusive: resource cap ({})", e.what());
        return v;
    }
    ++stats_.clauses_read;
    ++stats_.probes;
    stats_.boards_created += boards_.size() - boards_before;
    if (!reading() || outcome.status != IngestStatus::Continue)
        stats_.read_seconds = now_seconds() - read_started_;

    switch (outcome.status) {
    case IngestStatus::Continue:
        return std::nullopt;
    case IngestStatus::Sat: {
        Verdict v = make(Answer::Sat);
        v.witness = outcome.probe;
        v.message = "satisfiable: clause probe hit a witness";
        return v;
    }
    case IngestStatus::Blocked: {
        Verdict v = make(Answer::Unsat);
        v.reason = UnsatReason::BlockedBoard;
        v.reason_detail = outcome.board.value;
        v.message = fmt::format("unsatisfiable: board {} over {} is blocked", outcome.board.value,
                                clause.vars().to_string());
        return v;
    }
    }
    return std::nullopt;
}

Verdict DeterministicEngine::join_boards(std::stop_token stop)
{
    std::vector<Relation> relations;
    relations.reserve(boards_.size());
    for (const auto& [id, board] : boards_.boards())
        relations.push_back(board.solutions());

    FoldStats fold;
    Relation theta;
    try {
        theta = fold_theta(std::move(relations), formula_.variable_count(), cfg_.join_row_cap, &fold, stop);
    } catch (const FoldCancelled&) {
        return make(Answer::Cancelled);
    } catch (const ResourceLimit& e) {
        Verdict v = make(Answer::Inconclusive);
        v.message = fmt::format("inconclusive: resource cap ({})", e.what());
        return v;
    }
    stats_.join_rows_peak = fold.rows_peak;
    stats_.theta_rows = theta.size();

    if (theta.empty()) {
        Verdict v = make(Answer::Unsat);
        v.reason = UnsatReason::IncompatibleBoards;
        v.reason_detail = boards_.size();
        v.message = "unsatisfiable: board solutions are incompatible";
        return v;
    }
    Verdict v = make(Answer::Sat);
    v.witness = theta.row(0).with_free_zero();
    if (!formula_.satisfied_by(v.witness->bits))
        throw std::logic_error("theta-join produced a non-satisfying witness " + v.witness->to_string());
    v.message = "satisfiable: board solutions are compatible";
    return v;
}

std::optional<Verdict> DeterministicEngine::step(std::stop_token stop)
{
    if (reading())
        return ingest_next();
    return join_boards(stop);
}

Verdict DeterministicEngine::run(std::stop_token stop)
{
    while (!stop.stop_requested())
        if (auto v = step(stop))
            return *v;
    return make(Answer::Cancelled);
}

Verdict run_deterministic(const Formula& formula, FailureSink& sink, std::stop_token stop,
                          const DeterministicConfig& cfg)
{
    return DeterministicEngine(formula, sink, cfg).run(stop);
}

} // namespace boardsat
