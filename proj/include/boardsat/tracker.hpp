#pragma once

#include "boardsat/failure_sink.hpp"
#include "boardsat/instance.hpp"
#include "boardsat/verdict.hpp"

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <stop_token>
#include <vector>

namespace boardsat {

inline constexpr unsigned kDefaultTrackerCap = 26;
inline constexpr std::size_t kDefaultQueueCapacity = std::size_t{1} << 16;

/// Bounded FIFO of failed candidates. Reports arriving while full are dropped.
class FailureQueue final : public FailureSink {
public:
    explicit FailureQueue(std::size_t capacity = kDefaultQueueCapacity) : capacity_(capacity) {}

    void report(Word candidate) noexcept override;
    /// Moves every queued candidate into `out` (cleared first), oldest first.
    void drain(std::vector<Word>& out);

    std::size_t capacity() const noexcept { return capacity_; }
    std::uint64_t accepted() const noexcept { return accepted_.load(std::memory_order_relaxed); }
    std::uint64_t dropped() const noexcept { return dropped_.load(std::memory_order_relaxed); }

private:
    std::size_t capacity_;
    std::mutex mutex_;
    std::deque<Word> items_;
    std::atomic<std::uint64_t> accepted_{0};
    std::atomic<std::uint64_t> dropped_{0};
};

/// Failed flags shared with other engines. Only the owning tracker writes;
/// flags go stale but never revert from failed to viable.
class CandidateView {
public:
    explicit CandidateView(unsigned n);

    bool failed(Word candidate) const noexcept
    {
        return (words_[candidate >> 6].load(std::memory_order_relaxed) >> (candidate & 63)) & 1;
    }
    void mark(Word candidate) noexcept
    {
        words_[candidate >> 6].fetch_or(Word{1} << (candidate & 63), std::memory_order_relaxed);
    }
    Word failed_count() const noexcept;
    unsigned variable_count() const noexcept { return n_; }

private:
    unsigned n_;
    std::unique_ptr<std::atomic<Word>[]> words_;
    std::size_t word_count_;
};

/// Viable/failed status of every candidate in [0, 2^n - 1] with a circular
/// chain threading the viable ones.
class CandidateLedger {
public:
    explicit CandidateLedger(unsigned n);

    Word universe_size() const noexcept { return size_; }
    Word viable_count() const noexcept { return viable_; }
    bool viable(Word c) const { return status_[c] != 0; }
    /// Cursor of the sweep; meaningless when viable_count() == 0.
    Word cursor() const noexcept { return cursor_; }
    Word next(Word c) const { return next_[c]; }
    Word prior(Word c) const { return prior_[c]; }

    /// Marks `c` failed and unlinks it. Returns false if it already was.
    bool mark_failed(Word c);

    /// Walks the circle from the cursor and checks it holds exactly the viable
    /// candidates in ascending cyclic order.
    bool chain_consistent() const;

private:
    Word size_;
    Word viable_;
    Word cursor_ = 0;
    std::vector<std::uint8_t> status_;
    std::vector<std::uint32_t> next_;
    std::vector<std::uint32_t> prior_;
};

struct TrackerConfig {
    unsigned exact_cap = kDefaultTrackerCap;
};

/// Consumes failure reports, keeps the ledger, and sweeps viable candidates
/// in circular order. Unsat once no candidate remains viable.
class Tracker {
public:
    /// Throws ResourceLimit when the instance is wider than the exact cap.
    Tracker(const Instance& instance, FailureQueue& queue, TrackerConfig cfg = {});

    static bool supports(unsigned n, const TrackerConfig& cfg) { return n <= cfg.exact_cap && n <= 32; }

    /// Processes every queued report.
    std::optional<Verdict> drain();
    /// Evaluates the candidate under the cursor.
    std::optional<Verdict> sweep_step();
    /// drain() then sweep_step().
    std::optional<Verdict> step();
    Verdict run(std::stop_token stop);

    const CandidateLedger& ledger() const noexcept { return ledger_; }
    const CandidateView& view() const noexcept { return view_; }
    const EngineStats& stats() const noexcept { return stats_; }

private:
    Verdict exhausted() const;
    void mark(Word c);

    const Instance& instance_;
    FailureQueue& queue_;
    CandidateLedger ledger_;
    CandidateView view_;
    EngineStats stats_;
    std::vector<Word> inbox_;
};

} // namespace boardsat
