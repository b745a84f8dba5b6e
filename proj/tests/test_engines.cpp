#include "boardsat/deterministic_engine.hpp"
#include "boardsat/error.hpp"
#include "boardsat/oracle.hpp"
#include "boardsat/random_engine.hpp"
#include "boardsat/tracker.hpp"
#include "doctest.h"
#include "worked_examples.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <mutex>
#include <random>
#include <thread>

using namespace boardsat;
using namespace boardsat::testing;

namespace {

class RecordingSink final : public FailureSink {
public:
    void report(Word c) noexcept override
    {
        std::lock_guard lock(mutex);
        items.push_back(c);
    }
    std::mutex mutex;
    std::vector<Word> items;
};

} // namespace

TEST_CASE("deterministic engine on the worked examples")
{
    NullSink sink;
    const Formula f1 = phi1();
    const Verdict v1 = run_deterministic(f1, sink, {});
    CHECK(v1.answer == Answer::Unsat);
    CHECK(v1.reason == UnsatReason::BlockedBoard);
    CHECK(v1.stats.clauses_read == 2);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Formula f5 = phi5();
        const Verdict v5 = run_deterministic(f5, sink, {}, {seed});
        REQUIRE(v5.answer == Answer::Sat);
        CHECK((v5.witness->bits == bits("1101") || v5.witness->bits == bits("1110")));
    }

    const Formula f7 = phi7();
    const Verdict v7 = run_deterministic(f7, sink, {});
    CHECK(v7.answer == Answer::Unsat);
    CHECK(v7.reason == UnsatReason::IncompatibleBoards);
    CHECK(v7.stats.clauses_read == 7);
}

TEST_CASE("deterministic engine: empty formula and Θ witness choice")
{
    NullSink sink;
    const Formula empty(3);
    const Verdict v = run_deterministic(empty, sink, {});
    REQUIRE(v.answer == Answer::Sat);
    CHECK(v.witness->bits == 0);
    CHECK(v.stats.clauses_read == 0);
}

TEST_CASE("deterministic engine resource caps are inconclusive, not unsat")
{
    NullSink sink;
    const Formula wide(10, {Clause(10, {pos(0), pos(1), pos(2), pos(3), pos(4), pos(5)})});
    DeterministicConfig cfg;
    cfg.board_width_cap = 4;
    CHECK(run_deterministic(wide, sink, {}, cfg).answer == Answer::Inconclusive);

    // ten disjoint boards of three rows each: 3^10 rows in the cross product
    std::vector<Relation> rels;
    for (unsigned v = 0; v + 1 < 20; v += 2) {
        const Clause c(20, {neg(v), neg(v + 1)});
        Board b(c.vars());
        b.remove(complement(c.signs(), c.width()));
        rels.push_back(b.solutions());
    }
    CHECK_THROWS_AS(fold_theta(rels, 20, 1000), ResourceLimit);
}

TEST_CASE("deterministic engine stops when asked")
{
    NullSink sink;
    std::stop_source stop;
    stop.request_stop();
    const Formula f = phi7();
    CHECK(run_deterministic(f, sink, stop.get_token()).answer == Answer::Cancelled);
}

TEST_CASE("deterministic engine reads each clause once, duplicates included")
{
    NullSink sink;
    std::vector<Clause> clauses;
    const Formula f7 = phi7();
    for (int r = 0; r < 5; ++r)
        for (const Clause& c : f7.clauses())
            clauses.push_back(c);
    const Formula repeated(4, clauses);
    const Verdict v = run_deterministic(repeated, sink, {});
    CHECK(v.answer == Answer::Unsat);
    CHECK(v.stats.clauses_read == repeated.clause_count());
    CHECK(v.stats.boards_created == 2);
}

TEST_CASE("lazy permutation emits a permutation")
{
    for (bool literal : {false, true})
        for (Word domain : {Word{1}, Word{2}, Word{7}, Word{64}, Word{1000}}) {
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                LazyPermutation perm(domain, literal);
                Rng rng(seed);
                std::vector<Word> out;
                while (!perm.done())
                    out.push_back(perm.next(rng));
                std::sort(out.begin(), out.end());
                std::vector<Word> expected(domain);
                std::iota(expected.begin(), expected.end(), Word{0});
                CHECK(out == expected);
                CHECK(perm.stored_entries() == 0);
            }
        }
}

TEST_CASE("lazy permutation first draw is uniform")
{
    const Word domain = 8;
    std::vector<int> first(domain, 0);
    Rng rng(42);
    for (int t = 0; t < 8000; ++t) {
        LazyPermutation perm(domain);
        ++first[perm.next(rng)];
    }
    for (int c : first)
        CHECK(std::abs(c - 1000) < 150);
}

TEST_CASE("test_candidate outcomes")
{
    RecordingSink sink;
    const Instance i1 = phi1();
    CHECK(test_candidate(0, i1, sink, nullptr) == TestOutcome::Failed);
    CHECK(sink.items == std::vector<Word>{0});

    CandidateView view(1);
    view.mark(1);
    CHECK(test_candidate(1, i1, sink, &view) == TestOutcome::Skipped);
    CHECK(sink.items.size() == 1);

    const Instance i4 = phi4();
    CHECK(test_candidate(bits("1010"), i4, sink, nullptr) == TestOutcome::Sat);
}

TEST_CASE("random engine on phi2 exhausts in two iterations")
{
    RecordingSink sink;
    const Instance inst = phi2();
    RandomConfig cfg;
    cfg.prefix_bits = 1;
    RandomEngine engine(inst, sink, nullptr, cfg);
    const Verdict v = engine.run({});
    CHECK(v.answer == Answer::Unsat);
    CHECK(v.reason == UnsatReason::SearchExhausted);
    CHECK(v.stats.iterations == 2);
    CHECK(v.stats.evaluations == 4);
}

TEST_CASE("random engine tests every candidate exactly once")
{
    for (unsigned n : {1u, 4u, 9u})
        for (unsigned p = 0; p <= 2 && p <= n; ++p)
            for (bool parallel : {false, true}) {
                RecordingSink sink;
                const Instance inst = ImplicitFormula(n, std::nullopt);
                RandomConfig cfg;
                cfg.prefix_bits = p;
                cfg.seed = n * 31 + p;
                cfg.parallel = parallel;
                RandomEngine engine(inst, sink, nullptr, cfg);
                const Verdict v = engine.run({});
                CHECK(v.answer == Answer::Unsat);
                CHECK(v.stats.iterations == (Word{1} << (n - p)));
                std::sort(sink.items.begin(), sink.items.end());
                std::vector<Word> all(Word{1} << n);
                std::iota(all.begin(), all.end(), Word{0});
                CHECK(sink.items == all);
            }
}

TEST_CASE("random engine finds a hidden witness and honours the view")
{
    NullSink sink;
    const Instance inst = ImplicitFormula(8, bits("10110001"));
    RandomConfig cfg;
    cfg.prefix_bits = 2;
    cfg.seed = 5;
    const Verdict v = RandomEngine(inst, sink, nullptr, cfg).run({});
    REQUIRE(v.answer == Answer::Sat);
    CHECK(v.witness->bits == bits("10110001"));
    CHECK(v.stats.iterations <= 64);

    CandidateView view(8);
    for (Word c = 0; c < 256; ++c)
        if (c != bits("10110001"))
            view.mark(c);
    const Verdict skipped = RandomEngine(inst, sink, &view, cfg).run({});
    CHECK(skipped.answer == Answer::Sat);
    CHECK(skipped.stats.evaluations == 1);
}

TEST_CASE("random engine config validation")
{
    NullSink sink;
    const Instance inst = phi1();
    RandomConfig cfg;
    cfg.prefix_bits = 2;
    CHECK_THROWS_AS(RandomEngine(inst, sink, nullptr, cfg), InvalidInput);
    const Instance wide = ImplicitFormula(30, std::nullopt);
    cfg.prefix_bits = 20;
    CHECK_THROWS_AS(RandomEngine(wide, sink, nullptr, cfg), InvalidInput);
}

TEST_CASE("serial and OpenMP prefix batches agree")
{
    std::mt19937_64 gen(8);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = 8 + gen() % 5;
        const Formula f = random_formula(n, 3 + gen() % 20, WidthDistribution::mixed(1, 4), gen());
        const Instance inst = f;
        const unsigned p = 2 + gen() % 6;
        const Word suffix = gen() & low_mask(n - p);
        CandidateView view(n);
        for (int i = 0; i < 20; ++i) {
            const Word c = gen() & low_mask(n);
            if (!f.satisfied_by(c))
                view.mark(c);
        }
        RecordingSink a, b;
        const BatchResult serial = test_prefix_batch_serial(suffix, n - p, p, inst, a, &view);
        const BatchResult parallel = test_prefix_batch_parallel(suffix, n - p, p, inst, b, &view);
        CHECK(serial.witness == parallel.witness);
        CHECK(serial.evaluations == parallel.evaluations);
        CHECK(serial.skipped == parallel.skipped);
        std::sort(a.items.begin(), a.items.end());
        std::sort(b.items.begin(), b.items.end());
        CHECK(a.items == b.items);
    }
}

TEST_CASE("failure queue is bounded and lossy")
{
    FailureQueue q(3);
    for (Word c = 0; c < 5; ++c)
        q.report(c);
    CHECK(q.accepted() == 3);
    CHECK(q.dropped() == 2);
    std::vector<Word> out;
    q.drain(out);
    CHECK(out == std::vector<Word>{0, 1, 2});
    q.drain(out);
    CHECK(out.empty());
}

TEST_CASE("ledger unlinking keeps the circle consistent (property)")
{
    std::mt19937_64 gen(4);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = gen() % 7;
        CandidateLedger ledger(n);
        CHECK(ledger.chain_consistent());
        Word distinct = 0;
        for (int i = 0; i < 100 && ledger.viable_count() > 0; ++i) {
            const Word c = (i % 2) ? ledger.cursor() : (gen() & low_mask(n));
            if (ledger.mark_failed(c))
                ++distinct;
            CHECK(ledger.viable_count() + distinct == ledger.universe_size());
            CHECK(ledger.chain_consistent());
        }
    }
}

TEST_CASE("tracker: every distinct failure delivered gives unsat at the last one")
{
    const unsigned n = 8;
    const Instance inst = ImplicitFormula(n, std::nullopt);
    FailureQueue q(1024);
    Tracker tracker(inst, q);
    std::vector<Word> order(256);
    std::iota(order.begin(), order.end(), Word{0});
    std::shuffle(order.begin(), order.end(), std::mt19937_64(2));
    for (std::size_t i = 0; i < order.size(); ++i) {
        q.report(order[i]);
        q.report(order[i / 2]); // duplicate
        const auto v = tracker.drain();
        if (i + 1 < order.size()) {
            CHECK_FALSE(v.has_value());
            CHECK(tracker.ledger().viable_count() == 256 - (i + 1));
        } else {
            REQUIRE(v.has_value());
            CHECK(v->answer == Answer::Unsat);
            CHECK(v->reason == UnsatReason::CandidatesExhausted);
        }
    }
}

TEST_CASE("tracker duplicate failures do not move the count")
{
    const Instance inst = phi4();
    FailureQueue q;
    Tracker tracker(inst, q);
    q.report(3);
    q.report(3);
    q.report(3);
    CHECK_FALSE(tracker.drain());
    CHECK(tracker.ledger().viable_count() == 15);
    CHECK(tracker.stats().duplicate_failures == 2);
    CHECK(tracker.view().failed_count() == 1);
}

TEST_CASE("tracker sweep finds a unique witness within 2^n evaluations")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ImplicitFormula hidden = extreme_instance(6, seed, true);
        const Formula f = to_cnf(hidden);
        const Instance inst = f;
        FailureQueue q;
        Tracker tracker(inst, q);
        const Verdict v = tracker.run({});
        REQUIRE(v.answer == Answer::Sat);
        CHECK(v.witness->bits == *hidden.witness());
        CHECK(v.stats.evaluations == *hidden.witness() + 1);
    }
}

TEST_CASE("tracker sweep plus deduplicated reports cover the space exactly")
{
    const Instance inst = ImplicitFormula(7, std::nullopt);
    FailureQueue q;
    Tracker tracker(inst, q);
    std::mt19937_64 gen(6);
    std::optional<Verdict> v;
    while (!v) {
        for (int i = 0; i < 3; ++i) {
            const Word c = gen() & 127;
            q.report(c);
        }
        const Word before = tracker.ledger().viable_count();
        const auto delivered = tracker.stats().failures_received;
        v = tracker.drain();
        const auto fresh = before - tracker.ledger().viable_count();
        CHECK(fresh <= tracker.stats().failures_received - delivered);
        if (!v)
            v = tracker.sweep_step();
    }
    CHECK(v->answer == Answer::Unsat);
    const auto& s = tracker.stats();
    CHECK(s.evaluations + (s.failures_received - s.duplicate_failures) == 128);
}

TEST_CASE("tracker refuses widths above the cap")
{
    const Instance inst = ImplicitFormula(12, std::nullopt);
    FailureQueue q;
    CHECK_THROWS_AS(Tracker(inst, q, TrackerConfig{10}), ResourceLimit);
}

TEST_CASE("tracker view is monotone under concurrent reads")
{
    const Instance inst = ImplicitFormula(12, std::nullopt);
    FailureQueue q(1 << 13);
    Tracker tracker(inst, q);
    std::atomic<bool> done{false};
    std::atomic<int> violations{0};
    std::thread reader([&] {
        std::vector<std::uint8_t> seen(4096, 0);
        while (!done.load()) {
            for (Word c = 0; c < 4096; c += 7) {
                const bool failed = tracker.view().failed(c);
                if (seen[c] && !failed)
                    ++violations;
                seen[c] = seen[c] || failed;
            }
        }
    });
    std::optional<Verdict> v;
    while (!v)
        v = tracker.step();
    done = true;
    reader.join();
    CHECK(violations.load() == 0);
    CHECK(v->answer == Answer::Unsat);
    CHECK(tracker.view().failed_count() == 4096);
}
