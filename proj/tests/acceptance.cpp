// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include "boardsat/analysis.hpp"
#include "boardsat/boards.hpp"
#include "boardsat/deterministic_engine.hpp"
#include "boardsat/oracle.hpp"
#include "boardsat/orchestrator.hpp"
#include "boardsat/random_engine.hpp"
#include "boardsat/subset_id.hpp"
#include "boardsat/theta_join.hpp"
#include "boardsat/tracker.hpp"
#include "worked_examples.hpp"
#include "rank_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include <fmt/format.h>

using namespace boardsat;
using namespace boardsat::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string set_string(const std::set<Word>& s, unsigned n)
{
    std::string out = "{";
    for (Word w : s)
        out += (out.size() > 1 ? "," : "") + to_bitstring(w, n);
    return out + "}";
}

std::set<Word> models(const Instance& f)
{
    std::set<Word> out;
    for (const Assignment& a : brute_force_serial(f))
        out.insert(a.bits);
    return out;
}

// Every clause read, no probe may short-circuit: the probe formula is empty-clause false.
BoardSet ingest_everything(const Formula& f)
{
    BoardSet boards(f.variable_count());
    const Formula never(f.variable_count(), {Clause(f.variable_count(), std::initializer_list<Literal>{})});
    NullSink sink;
    Rng rng(1);
    for (const Clause& c : f.clauses())
        ingest_clause(boards, c, never, sink, rng);
    return boards;
}

Relation theta_of(const Formula& f)
{
    const BoardSet boards = ingest_everything(f);
    std::vector<Relation> rels;
    for (const auto& [id, board] : boards.boards())
        rels.push_back(board.solutions());
    return fold_theta(std::move(rels), f.variable_count());
}

std::set<std::string> rows(const Relation& r)
{
    std::set<std::string> out;
    for (std::size_t i = 0; i < r.size(); ++i)
        out.insert(r.row(i).to_string());
    return out;
}

Outcome ac1()
{
    Outcome o;
    const auto t0 = Clock::now();
    NullSink sink;

    const Verdict v1 = run_deterministic(phi1(), sink, {});
    o.require(v1.answer == Answer::Unsat && v1.reason == UnsatReason::BlockedBoard && v1.stats.clauses_read == 2,
              fmt::format("phi1 clauses_read {}", v1.stats.clauses_read));
    const Verdict v2 = run_deterministic(phi2(), sink, {});
    o.require(v2.answer == Answer::Unsat && v2.reason == UnsatReason::BlockedBoard && v2.stats.clauses_read == 4,
              fmt::format("phi2 clauses_read {}", v2.stats.clauses_read));

    const std::set<Word> expected34{bits("1010"), bits("1011"), bits("1110"), bits("1111")};
    for (const auto& [name, f] : {std::pair{"phi3", phi3()}, std::pair{"phi4", phi4()}}) {
        const PortfolioResult r = solve(f);
        o.require(r.verdict.answer == Answer::Sat, fmt::format("{} not sat", name));
        const std::set<Word> got = models(f);
        o.require(got == expected34, fmt::format("{} satisfying set is {} ({} models), expected {}", name,
                                                 set_string(got, 4), got.size(), set_string(expected34, 4)));
    }

    o.require(rows(theta_of(phi5())) == std::set<std::string>{"1101", "1110"}, "phi5 theta");
    const Formula f6 = phi6();
    const Relation t6 = theta_of(f6);
    std::set<Word> expanded;
    for (const Assignment& a : expand_rows(t6, 4))
        expanded.insert(a.bits);
    o.require(expanded == std::set<Word>{bits("0000"), bits("0011")}, "phi6 theta expansion " + set_string(expanded, 4));
    o.require(theta_of(phi7()).empty(), "phi7 theta not empty");
    const Verdict v7 = run_deterministic(phi7(), sink, {});
    o.require(v7.answer == Answer::Unsat && v7.reason == UnsatReason::IncompatibleBoards, "phi7 verdict");

    const double secs = seconds_since(t0);
    o.require(secs < 1.0, fmt::format("took {:.3f}s", secs));
    return o;
}

Outcome ac2()
{
    Outcome o;
    const auto t0 = Clock::now();
    std::mt19937_64 gen(2024);
    std::size_t mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const unsigned n = 1 + gen() % 12;
        const std::size_t m = 1 + gen() % 40;
        const Formula f = random_formula(n, m, WidthDistribution::mixed(1, std::min(n, 5u)), gen());
        const Instance inst = f;
        const bool sat = !brute_force(inst).empty();
        auto check = [&](const Verdict& v, const char* who) {
            const bool ok = v.final() && (v.answer == Answer::Sat) == sat &&
                            (v.answer != Answer::Sat || f.satisfied_by(v.witness->bits));
            if (!ok && ++mismatches <= 3)
                o.detail += fmt::format("{}trial {} {}: {}", o.detail.empty() ? "" : "; ", trial, who,
                                        to_string(v.answer));
        };
        for (EngineSelection e : {EngineSelection::Deterministic, EngineSelection::Random, EngineSelection::Tracker,
                                  EngineSelection::All}) {
            PortfolioConfig cfg;
            cfg.engines = e;
            cfg.seed = gen();
            cfg.prefix_bits = static_cast<unsigned>(gen() % 3);
            cfg.schedule = (trial % 2) ? Schedule::Concurrent : Schedule::Deterministic;
            check(solve(inst, cfg).verdict, e == EngineSelection::All ? "portfolio" : "solo");
        }
    }
    o.pass = mismatches == 0;
    const double secs = seconds_since(t0);
    o.require(secs < 120.0, fmt::format("took {:.1f}s", secs));
    o.detail = fmt::format("{} mismatches in 4000 solves, {:.1f}s{}{}", mismatches, secs,
                           o.detail.empty() ? "" : "; ", o.detail);
    return o;
}

Outcome ac3()
{
    Outcome o;
    const auto t0 = Clock::now();
    std::mt19937_64 gen(3);
    std::size_t bad = 0;
    for (int i = 0; i < 200; ++i) {
        const unsigned n = 1 + gen() % 6;
        const Formula one = random_formula(n, 1, WidthDistribution::mixed(1, n), gen());
        const Clause& c = one.clauses()[0];
        const Formula expanded(n, expand_to_ssat(c, n));
        if (truth_table(expanded) != truth_table(one))
            ++bad;
    }
    const double secs = seconds_since(t0);
    o.require(bad == 0, fmt::format("{} clauses disagree", bad));
    o.require(secs < 10.0, fmt::format("took {:.2f}s", secs));
    return o;
}

Outcome ac4()
{
    Outcome o;
    for (unsigned n = 0; n <= 12; ++n) {
        std::vector<std::uint8_t> hit(Word{1} << n, 0);
        for (Word mask = 0; mask < (Word{1} << n); ++mask) {
            const VarSet s(n, mask);
            const Word id = idss(s).value;
            Word block = 0;
            for (unsigned j = 0; j < s.size(); ++j)
                block += binomial(n, j);
            if (id >= hit.size() || hit[id] || id < block || id >= block + binomial(n, s.size()) ||
                idss_inverse(SubsetId{id}, n) != s) {
                o.require(false, fmt::format("n={} mask={}", n, mask));
                break;
            }
            hit[id] = 1;
            if (n <= 6 && id != increment_loop_rank(s))
                o.require(false, fmt::format("n={} mask={} differs from the increment loop", n, mask));
        }
        if (std::find(hit.begin(), hit.end(), 0) != hit.end())
            o.require(false, fmt::format("n={} not onto", n));
    }
    return o;
}

class CollectingSink final : public FailureSink {
public:
    void report(Word c) noexcept override { tested.push_back(c); }
    std::vector<Word> tested;
};

Outcome ac5()
{
    Outcome o;
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned p = 0; p <= 2 && p <= n; ++p)
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                const Instance inst = ImplicitFormula(n, std::nullopt);
                CollectingSink sink;
                RandomConfig cfg;
                cfg.prefix_bits = p;
                cfg.seed = seed;
                const Verdict v = RandomEngine(inst, sink, nullptr, cfg).run({});
                std::sort(sink.tested.begin(), sink.tested.end());
                std::vector<Word> all(Word{1} << n);
                std::iota(all.begin(), all.end(), Word{0});
                const bool ok = v.answer == Answer::Unsat && sink.tested == all &&
                                v.stats.iterations <= (Word{1} << (n - p));
                if (!ok)
                    o.require(false, fmt::format("n={} p={} seed={}", n, p, seed));
            }
    return o;
}

Outcome ac6()
{
    Outcome o;
    const Instance inst = ImplicitFormula(8, std::nullopt);
    FailureQueue queue(1024);
    Tracker tracker(inst, queue);
    std::mt19937_64 gen(6);
    std::vector<Word> order(256);
    std::iota(order.begin(), order.end(), Word{0});
    std::shuffle(order.begin(), order.end(), gen);

    std::vector<Word> pending_resend;
    std::set<Word> delivered;
    std::optional<Verdict> verdict;
    std::size_t verdict_at = 0;
    std::size_t duplicates = 0;
    std::size_t drops = 0;

    auto deliver = [&](Word c) {
        queue.report(c);
        const auto v = tracker.drain();
        delivered.insert(c);
        const auto& led = tracker.ledger();
        if (led.viable_count() + delivered.size() != 256 || !led.chain_consistent())
            o.require(false, fmt::format("ledger identity broken after {} distinct", delivered.size()));
        if (v && !verdict) {
            verdict = v;
            verdict_at = delivered.size();
        }
    };

    std::bernoulli_distribution drop(0.10), dup(0.30);
    for (Word c : order) {
        if (drop(gen)) {
            ++drops;
            pending_resend.push_back(c);
        } else {
            deliver(c);
        }
        if (!delivered.empty() && dup(gen)) {
            ++duplicates;
            auto it = delivered.begin();
            std::advance(it, static_cast<long>(gen() % delivered.size()));
            deliver(*it);
        }
        if (!pending_resend.empty() && gen() % 4 == 0) {
            deliver(pending_resend.back());
            pending_resend.pop_back();
        }
    }
    while (!pending_resend.empty()) {
        deliver(pending_resend.back());
        pending_resend.pop_back();
    }
    o.require(verdict && verdict->answer == Answer::Unsat, "no unsat verdict");
    o.require(verdict_at == 256, fmt::format("verdict at distinct mark {}", verdict_at));
    o.require(tracker.stats().duplicate_failures == duplicates,
              fmt::format("duplicates counted {} injected {}", tracker.stats().duplicate_failures, duplicates));
    o.detail += fmt::format("{}{} duplicates, {} drops re-sent", o.detail.empty() ? "" : "; ", duplicates, drops);
    return o;
}

Outcome ac7()
{
    Outcome o;
    for (unsigned n : {4u, 10u, 20u}) {
        const Probability p = prob_sequential(1, (Word{1} << n) - 2, n);
        o.require(p.numerator == 1 && p.denominator == 2, fmt::format("n={} gives {}/{}", n, p.numerator, p.denominator));
    }
    std::size_t points = 0;
    std::mt19937_64 gen(7);
    while (points < 10000) {
        const unsigned n = 2 + gen() % 40;
        const unsigned p = gen() % (n - 1);
        const Word space = Word{1} << n;
        const Word s = 1 + gen() % std::min<Word>(space / 2, 1000);
        const Word kmax = (space - s) >> (p + 1);
        const Word k = kmax == 0 ? 0 : gen() % (kmax + 1);
        const Probability seq = prob_sequential(s, k, n);
        const Probability rnd = prob_random_engine(s, k, n, p);
        const Probability trk = prob_tracker(s, k, n, p);
        if (!(seq <= rnd && rnd <= trk))
            o.require(false, fmt::format("ordering fails at s={} k={} n={} p={}", s, k, n, p));
        ++points;
    }
    o.detail += fmt::format("{}{} grid points", o.detail.empty() ? "" : "; ", points);
    return o;
}

Outcome ac8()
{
    Outcome o;
    const auto t0 = Clock::now();
    const HitHistogram h = empirical_hit_histogram(16, 0, 100, 8);
    const double expected = (65536.0 + 1.0) / 2.0;
    o.require(h.exhausted == 0, "a satisfiable trial exhausted");
    o.require(std::abs(h.mean - expected) <= 0.15 * expected,
              fmt::format("mean {:.1f} outside {:.1f} +/- 15%", h.mean, expected));

    NullSink sink;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Instance none = ImplicitFormula(16, std::nullopt);
        RandomConfig cfg;
        cfg.prefix_bits = 0;
        cfg.seed = seed;
        const Verdict v = RandomEngine(none, sink, nullptr, cfg).run({});
        if (v.answer != Answer::Unsat || v.stats.evaluations != 65536)
            o.require(false, fmt::format("unsat seed {} exhausted after {} tests", seed, v.stats.evaluations));
    }
    const double secs = seconds_since(t0);
    o.require(secs < 120.0, fmt::format("took {:.1f}s", secs));
    o.detail += fmt::format("{}mean hit {:.1f} (expected {:.1f}), {:.1f}s", o.detail.empty() ? "" : "; ", h.mean,
                            expected, secs);
    return o;
}

// Unsatisfiable, no board ever blocks, and so every clause is read.
Formula unblocked_unsat_base()
{
    for (std::uint64_t seed = 0;; ++seed) {
        const Formula f = random_formula(12, 100, WidthDistribution::fixed(3), seed);
        if (!brute_force(f).empty())
            continue;
        const BoardSet boards = ingest_everything(f);
        const bool blocked = std::any_of(boards.boards().begin(), boards.boards().end(),
                                         [](const auto& kv) { return kv.second.blocked(); });
        if (!blocked)
            return f;
    }
}

double read_time(const Formula& f)
{
    double best = 1e9;
    for (int rep = 0; rep < 15; ++rep) {
        NullSink sink;
        DeterministicEngine engine(f, sink, {static_cast<std::uint64_t>(rep)});
        while (engine.reading())
            if (engine.step())
                break;
        best = std::min(best, engine.stats().read_seconds);
    }
    return best;
}

Outcome ac9()
{
    Outcome o;
    const Formula base = unblocked_unsat_base();
    auto repeated = [&](int times) {
        std::vector<Clause> clauses;
        for (int r = 0; r < times; ++r)
            clauses.insert(clauses.end(), base.clauses().begin(), base.clauses().end());
        return Formula(12, std::move(clauses));
    };
    const Formula m1 = repeated(10);
    const Formula m2 = repeated(20);
    const double t1 = read_time(m1);
    const double t2 = read_time(m2);
    const double ratio = t2 / t1;
    o.require(ratio <= 3.0, fmt::format("ratio {:.2f}", ratio));
    o.detail += fmt::format("{}m=1000 {:.1f}us, m=2000 {:.1f}us, ratio {:.2f}", o.detail.empty() ? "" : "; ",
                            t1 * 1e6, t2 * 1e6, ratio);
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "worked examples", ac1},
        {"AC2", "oracle equivalence", ac2},
        {"AC3", "full-width expansion truth tables", ac3},
        {"AC4", "subset id bijection", ac4},
        {"AC5", "permutation completeness", ac5},
        {"AC6", "tracker exhaustion", ac6},
        {"AC7", "probability model", ac7},
        {"AC8", "hidden-witness statistics", ac8},
        {"AC9", "clause reading linearity", ac9},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::cout << fmt::format("[{}] {} {}{}{}\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                                 o.detail.empty() ? "" : ": ", o.detail)
                  << std::flush;
    }
    std::cout << "[N/A ] AC10 overall linear-time claim: not reproducible, the join can grow exponentially; "
                 "join_rows_peak is reported in stats\n";
    std::cout << fmt::format("{} of {} criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
