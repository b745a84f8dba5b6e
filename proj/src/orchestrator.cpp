#include "boardsat/orchestrator.hpp"

#include "boardsat/error.hpp"
#include "boardsat/oracle.hpp"

#include <chrono>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

namespace boardsat {
namespace {

// First final verdict wins; later offers are ignored.
class VerdictSlot {
public:
    bool offer(const Verdict& v)
    {
        std::lock_guard lock(mutex_);
        if (value_)
            return false;
        value_ = v;
        return true;
    }
    std::optional<Verdict> take()
    {
        std::lock_guard lock(mutex_);
        return value_;
    }

private:
    std::mutex mutex_;
    std::optional<Verdict> value_;
};

Verdict inactive(EngineKind kind, std::string message)
{
    Verdict v;
    v.answer = Answer::Inconclusive;
    v.source = kind;
    v.message = std::move(message);
    return v;
}

std::uint64_t random_seed_for(std::uint64_t seed)
{
    return seed ^ 0xd1b54a32d192ed03ULL;
}

bool wants(EngineSelection sel, EngineKind kind)
{
    switch (sel) {
    case EngineSelection::All: return true;
    case EngineSelection::Deterministic: return kind == EngineKind::Deterministic;
    case EngineSelection::Random: return kind == EngineKind::Random;
    case EngineSelection::Tracker: return kind == EngineKind::Tracker;
    }
    return false;
}

// Engines built for one run. Slots that could not be built carry the reason.
struct Lineup {
    std::optional<Formula> expanded;
    FailureQueue queue;
    NullSink null_sink;
    std::unique_ptr<DeterministicEngine> deterministic;
    std::unique_ptr<RandomEngine> random;
    std::unique_ptr<Tracker> tracker;
    std::vector<Verdict> unavailable;

    explicit Lineup(std::size_t queue_capacity) : queue(queue_capacity) {}
};

void build(Lineup& lineup, const Instance& instance, const PortfolioConfig& cfg)
{
    const bool parallel_batches = cfg.schedule == Schedule::Concurrent;

    if (wants(cfg.engines, EngineKind::Tracker)) {
        TrackerConfig tc{cfg.tracker_cap};
        if (Tracker::supports(instance.variable_count(), tc))
            lineup.tracker = std::make_unique<Tracker>(instance, lineup.queue, tc);
        else
            lineup.unavailable.push_back(inactive(
                EngineKind::Tracker, fmt::format("inactive: n = {} exceeds exact-mode cap {}",
                                                 instance.variable_count(), cfg.tracker_cap)));
    }
    FailureSink& sink = lineup.tracker ? static_cast<FailureSink&>(lineup.queue) : lineup.null_sink;
    const CandidateView* view = lineup.tracker ? &lineup.tracker->view() : nullptr;

    if (wants(cfg.engines, EngineKind::Deterministic)) {
        const Formula* formula = instance.formula();
        if (!formula && instance.implicit() && cfg.implicit_expand_limit > 0 &&
            instance.variable_count() <= cfg.implicit_expand_limit) {
            lineup.expanded = to_cnf(*instance.implicit(), cfg.implicit_expand_limit);
            formula = &*lineup.expanded;
        }
        if (formula) {
            DeterministicConfig dc{cfg.seed, cfg.board_width_cap, cfg.join_row_cap};
            lineup.deterministic = std::make_unique<DeterministicEngine>(*formula, sink, dc);
        } else if (cfg.engines == EngineSelection::Deterministic) {
            throw UnsupportedInstance("the deterministic engine needs a clause stream; expand the implicit "
                                      "instance to CNF first");
        } else {
            lineup.unavailable.push_back(
                inactive(EngineKind::Deterministic, "inactive: implicit instance has no clause stream"));
        }
    }

    if (wants(cfg.engines, EngineKind::Random)) {
        RandomConfig rc;
        rc.prefix_bits = std::min(cfg.prefix_bits, instance.variable_count());
        rc.seed = random_seed_for(cfg.seed);
        rc.literal_draw = cfg.literal_draw;
        rc.parallel = parallel_batches;
        lineup.random = std::make_unique<RandomEngine>(instance, sink, view, rc);
    }
}

void run_concurrent(Lineup& lineup, std::vector<Verdict>& finals, VerdictSlot& slot)
{
    std::stop_source stop;
    std::vector<std::optional<Verdict>> results(3);
    {
        std::vector<std::jthread> workers;
        auto launch = [&](std::size_t index, auto& engine) {
            if (!engine)
                return;
            workers.emplace_back([&, index] {
                Verdict v = engine->run(stop.get_token());
                if (v.final() && slot.offer(v))
                    stop.request_stop();
                results[index] = std::move(v);
            });
        };
        launch(0, lineup.deterministic);
        launch(1, lineup.random);
        launch(2, lineup.tracker);
    }
    for (auto& r : results)
        if (r)
            finals.push_back(std::move(*r));
}

void run_round_robin(Lineup& lineup, std::vector<Verdict>& finals, VerdictSlot& slot)
{
    std::optional<Verdict> det_done, rnd_done, trk_done;
    auto active = [&] {
        return (lineup.deterministic && !det_done) || (lineup.random && !rnd_done) ||
               (lineup.tracker && !trk_done);
    };
    auto advance = [&](auto& engine, std::optional<Verdict>& done) {
        if (!engine || done)
            return false;
        if (auto v = engine->step()) {
            done = std::move(v);
            return done->final() && slot.offer(*done);
        }
        return false;
    };
    while (active()) {
        if (advance(lineup.deterministic, det_done) || advance(lineup.random, rnd_done) ||
            advance(lineup.tracker, trk_done))
            break;
    }
    auto settle = [&](auto& engine, std::optional<Verdict>& done, EngineKind kind) {
        if (!engine)
            return;
        if (!done) {
            Verdict v;
            v.answer = Answer::Cancelled;
            v.source = kind;
            v.stats = engine->stats();
            done = std::move(v);
        }
        finals.push_back(std::move(*done));
    };
    settle(lineup.deterministic, det_done, EngineKind::Deterministic);
    settle(lineup.random, rnd_done, EngineKind::Random);
    settle(lineup.tracker, trk_done, EngineKind::Tracker);
}

} // namespace

PortfolioResult solve(const Instance& instance, const PortfolioConfig& cfg)
{
    const auto started = std::chrono::steady_clock::now();
    Lineup lineup(cfg.queue_capacity);
    build(lineup, instance, cfg);

    PortfolioResult result;
    VerdictSlot slot;
    if (cfg.schedule == Schedule::Concurrent)
        run_concurrent(lineup, result.engines, slot);
    else
        run_round_robin(lineup, result.engines, slot);
    for (Verdict& v : lineup.unavailable)
        result.engines.push_back(std::move(v));

    if (auto winner = slot.take()) {
        result.verdict = std::move(*winner);
        if (result.verdict.answer == Answer::Sat &&
            (!result.verdict.witness || !instance.satisfied_by(result.verdict.witness->bits)))
            throw std::logic_error(fmt::format("{} engine reported a witness that does not satisfy the instance",
                                               to_string(result.verdict.source)));
    } else {
        result.verdict.answer = Answer::Inconclusive;
        result.verdict.source = EngineKind::Portfolio;
        std::string reasons;
        for (const Verdict& v : result.engines)
            reasons += fmt::format("{}{}: {}", reasons.empty() ? "" : "; ", to_string(v.source), v.message);
        result.verdict.message = "inconclusive: no engine reached an answer (" + reasons + ")";
    }

    result.messages_sent = lineup.queue.accepted() + lineup.queue.dropped();
    result.messages_dropped = lineup.queue.dropped();
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

} // namespace boardsat
