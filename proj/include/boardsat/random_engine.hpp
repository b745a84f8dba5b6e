#pragma once

#include "boardsat/boards.hpp"
#include "boardsat/failure_sink.hpp"
#include "boardsat/instance.hpp"
#include "boardsat/tracker.hpp"
#include "boardsat/verdict.hpp"

#include <cstdint>
#include <optional>
#include <stop_token>
#include <unordered_map>

namespace boardsat {

/// Fisher-Yates shuffle of [0, domain) computed one position at a time. Only
/// displaced entries are stored, so memory grows with the number of swaps
/// still pending rather than with the domain.
class LazyPermutation {
public:
    /// `literal_draw` swaps with floor(u * (last - i + 1.5)) + i + 1, and only
    /// while T[i] = i; the index is clamped into [i, domain) since that formula
    /// overshoots the end. The default draw is uniform on [i, domain).
    explicit LazyPermutation(Word domain, bool literal_draw = false);

    Word domain() const noexcept { return domain_; }
    Word position() const noexcept { return cursor_; }
    bool done() const noexcept { return cursor_ >= domain_; }
    /// The value at the cursor; advances the cursor.
    Word next(Rng& rng);

    std::size_t stored_entries() const noexcept { return table_.size(); }

private:
    Word at(Word i) const;

    Word domain_;
    bool literal_draw_;
    Word cursor_ = 0;
    std::unordered_map<Word, Word> table_;
};

enum class TestOutcome { Sat, Failed, Skipped };

/// Skips candidates the view already marks failed; otherwise evaluates and
/// reports failures to `sink`. `view` may be null.
TestOutcome test_candidate(Word candidate, const Instance& instance, FailureSink& sink, const CandidateView* view);

struct BatchResult {
    std::optional<Word> witness; // lowest-prefix satisfying candidate
    std::uint64_t evaluations = 0;
    std::uint64_t skipped = 0;
};

/// Tests (prefix << suffix_bits) | suffix for every prefix in [0, 2^prefix_bits).
/// The serial version is the reference; the OpenMP version must agree with it
/// up to the order of failure reports.
BatchResult test_prefix_batch_serial(Word suffix, unsigned suffix_bits, unsigned prefix_bits,
                                     const Instance& instance, FailureSink& sink, const CandidateView* view);
BatchResult test_prefix_batch_parallel(Word suffix, unsigned suffix_bits, unsigned prefix_bits,
                                       const Instance& instance, FailureSink& sink, const CandidateView* view);

inline constexpr unsigned kDefaultMaxPrefixBits = 16;

struct RandomConfig {
    unsigned prefix_bits = 1;
    std::uint64_t seed = 0;
    bool literal_draw = false;
    bool parallel = true;
    unsigned max_prefix_bits = kDefaultMaxPrefixBits;
};

/// Random search over a lazily shuffled suffix space; every iteration tests
/// all 2^p prefixes of the next suffix.
class RandomEngine {
public:
    /// Throws InvalidInput when p > n or p exceeds max_prefix_bits.
    RandomEngine(const Instance& instance, FailureSink& sink, const CandidateView* view, RandomConfig cfg);

    /// One iteration.
    std::optional<Verdict> step();
    Verdict run(std::stop_token stop);

    const EngineStats& stats() const noexcept { return stats_; }
    Word iteration_limit() const noexcept { return permutation_.domain(); }

private:
    const Instance& instance_;
    FailureSink& sink_;
    const CandidateView* view_;
    RandomConfig cfg_;
    unsigned suffix_bits_;
    LazyPermutation permutation_;
    Rng rng_;
    EngineStats stats_;
};

} // namespace boardsat
