#include "boardsat/tracker.hpp"

#include "boardsat/error.hpp"

#include <fmt/format.h>

namespace boardsat {

void FailureQueue::report(Word candidate) noexcept
{
    {
        std::lock_guard lock(mutex_);
        if (items_.size() < capacity_) {
            items_.push_back(candidate);
            accepted_.fetch_add(1, std::memory_order_relaxed);
            return;
        }
    }
    dropped_.fetch_add(1, std::memory_order_relaxed);
}

void FailureQueue::drain(std::vector<Word>& out)
{
    out.clear();
    std::lock_guard lock(mutex_);
    out.assign(items_.begin(), items_.end());
    items_.clear();
}

CandidateView::CandidateView(unsigned n)
    : n_(n), word_count_(static_cast<std::size_t>(((Word{1} << n) + 63) / 64))
{
    words_ = std::make_unique<std::atomic<Word>[]>(word_count_);
    for (std::size_t i = 0; i < word_count_; ++i)
        words_[i].store(0, std::memory_order_relaxed);
}

Word CandidateView::failed_count() const noexcept
{
    Word total = 0;
    for (std::size_t i = 0; i < word_count_; ++i)
        total += static_cast<Word>(std::popcount(words_[i].load(std::memory_order_relaxed)));
    return total;
}

CandidateLedger::CandidateLedger(unsigned n) : size_(Word{1} << n), viable_(size_)
{
    status_.assign(size_, 1);
    next_.resize(size_);
    prior_.resize(size_);
    for (Word c = 0; c < size_; ++c) {
        next_[c] = static_cast<std::uint32_t>((c + 1) % size_);
        prior_[c] = static_cast<std::uint32_t>((c + size_ - 1) % size_);
    }
}

bool CandidateLedger::mark_failed(Word c)
{
    if (status_[c] == 0)
        return false;
    status_[c] = 0;
    --viable_;
    const std::uint32_t p = prior_[c];
    const std::uint32_t n = next_[c];
    next_[p] = n;
    prior_[n] = p;
    if (cursor_ == c)
        cursor_ = n;
    return true;
}

bool CandidateLedger::chain_consistent() const
{
    Word counted = 0;
    for (Word c = 0; c < size_; ++c)
        counted += status_[c];
    if (counted != viable_)
        return false;
    if (viable_ == 0)
        return true;
    if (!viable(cursor_))
        return false;
    Word c = cursor_;
    Word steps = 0;
    Word wraps = 0;
    do {
        const Word n = next_[c];
        if (!viable(n) || prior_[n] != c)
            return false;
        if (n <= c)
            ++wraps;
        c = n;
        if (++steps > viable_)
            return false;
    } while (c != cursor_);
    return steps == viable_ && wraps == 1;
}

Tracker::Tracker(const Instance& instance, FailureQueue& queue, TrackerConfig cfg)
    : instance_(instance),
      queue_(queue),
      ledger_(supports(instance.variable_count(), cfg)
                  ? instance.variable_count()
                  : throw ResourceLimit(fmt::format("tracker inactive: n = {} exceeds exact-mode cap {}",
                                                    instance.variable_count(), cfg.exact_cap))),
      view_(instance.variable_count())
{
}

void Tracker::mark(Word c)
{
    ledger_.mark_failed(c);
    view_.mark(c);
}

Verdict Tracker::exhausted() const
{
    Verdict v;
    v.answer = Answer::Unsat;
    v.source = EngineKind::Tracker;
    v.reason = UnsatReason::CandidatesExhausted;
    v.reason_detail = ledger_.universe_size();
    v.message = "unsatisfiable after reviewing every candidate";
    v.stats = stats_;
    return v;
}

std::optional<Verdict> Tracker::drain()
{
    queue_.drain(inbox_);
    for (Word c : inbox_) {
        ++stats_.failures_received;
        if (c >= ledger_.universe_size() || !ledger_.viable(c)) {
            ++stats_.duplicate_failures;
            continue;
        }
        mark(c);
        if (ledger_.viable_count() == 0)
            return exhausted();
    }
    return std::nullopt;
}

std::optional<Verdict> Tracker::sweep_step()
{
    if (ledger_.viable_count() == 0)
        return exhausted();
    const Word c = ledger_.cursor();
    ++stats_.evaluations;
    ++stats_.iterations;
    if (instance_.satisfied_by(c)) {
        Verdict v;
        v.answer = Answer::Sat;
        v.source = EngineKind::Tracker;
        v.witness = Assignment{instance_.variable_count(), c};
        v.message = "satisfiable: sweep found a witness";
        v.stats = stats_;
        return v;
    }
    mark(c);
    if (ledger_.viable_count() == 0)
        return exhausted();
    return std::nullopt;
}

std::optional<Verdict> Tracker::step()
{
    if (auto v = drain())
        return v;
    return sweep_step();
}

Verdict Tracker::run(std::stop_token stop)
{
    while (!stop.stop_requested())
        if (auto v = step())
            return *v;
    Verdict v;
    v.answer = Answer::Cancelled;
    v.source = EngineKind::Tracker;
    v.stats = stats_;
    return v;
}

} // namespace boardsat
