#include "boardsat/random_engine.hpp"

#include "boardsat/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace boardsat {

LazyPermutation::LazyPermutation(Word domain, bool literal_draw) : domain_(domain), literal_draw_(literal_draw) {}

Word LazyPermutation::at(Word i) const
{
    const auto it = table_.find(i);
    return it == table_.end() ? i : it->second;
}

Word LazyPermutation::next(Rng& rng)
{
    const Word i = cursor_++;
    const Word last = domain_ - 1;
    Word current = at(i);

    Word pick = i;
    if (!literal_draw_) {
        pick = std::uniform_int_distribution<Word>(i, last)(rng);
    } else if (current == i && i < last) {
        const double u = std::generate_canonical<double, std::numeric_limits<double>::digits>(rng);
        const double span = static_cast<double>(last - i) + 1.5;
        pick = static_cast<Word>(std::floor(u * span)) + i + 1;
        pick = std::clamp(pick, i, last);
    }

    if (pick != i) {
        const Word other = at(pick);
        table_[pick] = current;
        current = other;
    }
    // Position i is never revisited.
    table_.erase(i);
    return current;
}

TestOutcome test_candidate(Word candidate, const Instance& instance, FailureSink& sink, const CandidateView* view)
{
    if (view && view->failed(candidate))
        return TestOutcome::Skipped;
    if (instance.satisfied_by(candidate))
        return TestOutcome::Sat;
    sink.report(candidate);
    return TestOutcome::Failed;
}

BatchResult test_prefix_batch_serial(Word suffix, unsigned suffix_bits, unsigned prefix_bits,
                                     const Instance& instance, FailureSink& sink, const CandidateView* view)
{
    BatchResult out;
    const Word prefixes = Word{1} << prefix_bits;
    for (Word prefix = 0; prefix < prefixes; ++prefix) {
        const Word candidate = (prefix << suffix_bits) | suffix;
        switch (test_candidate(candidate, instance, sink, view)) {
        case TestOutcome::Skipped:
            ++out.skipped;
            break;
        case TestOutcome::Sat:
            ++out.evaluations;
            if (!out.witness)
                out.witness = candidate;
            break;
        case TestOutcome::Failed:
            ++out.evaluations;
            break;
        }
    }
    return out;
}

BatchResult test_prefix_batch_parallel(Word suffix, unsigned suffix_bits, unsigned prefix_bits,
                                       const Instance& instance, FailureSink& sink, const CandidateView* view)
{
    const auto prefixes = static_cast<std::int64_t>(Word{1} << prefix_bits);
    std::uint64_t evaluations = 0;
    std::uint64_t skipped = 0;
    std::int64_t best = prefixes;

#pragma omp parallel for schedule(static) reduction(+ : evaluations, skipped) reduction(min : best)
    for (std::int64_t prefix = 0; prefix < prefixes; ++prefix) {
        const Word candidate = (static_cast<Word>(prefix) << suffix_bits) | suffix;
        switch (test_candidate(candidate, instance, sink, view)) {
        case TestOutcome::Skipped:
            ++skipped;
            break;
        case TestOutcome::Sat:
            ++evaluations;
            best = std::min(best, prefix);
            break;
        case TestOutcome::Failed:
            ++evaluations;
            break;
        }
    }

    BatchResult out;
    out.evaluations = evaluations;
    out.skipped = skipped;
    if (best < prefixes)
        out.witness = (static_cast<Word>(best) << suffix_bits) | suffix;
    return out;
}

namespace {

constexpr unsigned kParallelBatchThreshold = 6;

unsigned checked_suffix_bits(unsigned n, const RandomConfig& cfg)
{
    if (cfg.prefix_bits > n)
        throw InvalidInput(fmt::format("prefix width {} exceeds n = {}", cfg.prefix_bits, n));
    if (cfg.prefix_bits > cfg.max_prefix_bits)
        throw InvalidInput(fmt::format("prefix width {} exceeds worker cap 2^{}", cfg.prefix_bits,
                                       cfg.max_prefix_bits));
    return n - cfg.prefix_bits;
}

} // namespace

RandomEngine::RandomEngine(const Instance& instance, FailureSink& sink, const CandidateView* view, RandomConfig cfg)
    : instance_(instance),
      sink_(sink),
      view_(view),
      cfg_(cfg),
      suffix_bits_(checked_suffix_bits(instance.variable_count(), cfg)),
      permutation_(Word{1} << suffix_bits_, cfg.literal_draw),
      rng_(cfg.seed)
{
}

std::optional<Verdict> RandomEngine::step()
{
    if (permutation_.done()) {
        Verdict v;
        v.answer = Answer::Unsat;
        v.source = EngineKind::Random;
        v.reason = UnsatReason::SearchExhausted;
        v.reason_detail = permutation_.domain() << cfg_.prefix_bits;
        v.message = "unsatisfiable after exploring every candidate";
        v.stats = stats_;
        return v;
    }

    const Word suffix = permutation_.next(rng_);
    ++stats_.iterations;
    const BatchResult batch = cfg_.parallel && cfg_.prefix_bits >= kParallelBatchThreshold
                                  ? test_prefix_batch_parallel(suffix, suffix_bits_, cfg_.prefix_bits, instance_,
                                                               sink_, view_)
                                  : test_prefix_batch_serial(suffix, suffix_bits_, cfg_.prefix_bits, instance_,
                                                             sink_, view_);
    stats_.evaluations += batch.evaluations;
    stats_.skipped += batch.skipped;
    if (batch.witness) {
        Verdict v;
        v.answer = Answer::Sat;
        v.source = EngineKind::Random;
        v.witness = Assignment{instance_.variable_count(), *batch.witness};
        v.message = "satisfiable: random search found a witness";
        v.stats = stats_;
        return v;
    }
    return std::nullopt;
}

Verdict RandomEngine::run(std::stop_token stop)
{
    while (!stop.stop_requested())
        if (auto v = step())
            return *v;
    Verdict v;
    v.answer = Answer::Cancelled;
    v.source = EngineKind::Random;
    v.stats = stats_;
    return v;
}

} // namespace boardsat
