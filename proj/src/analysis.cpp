#include "boardsat/analysis.hpp"

#include "boardsat/error.hpp"
#include "boardsat/oracle.hpp"
#include "boardsat/random_engine.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace boardsat {
namespace {

__extension__ typedef unsigned __int128 Wide;

Probability make_fraction(Word s, Wide den, bool approximate)
{
    const auto d = static_cast<Word>(den);
    const Word g = s == 0 ? d : std::gcd(s, d);
    return {s / g, d / g, approximate};
}

Probability fraction_with_step(Word s, Word k, unsigned n, unsigned step_bits, bool approximate)
{
    if (n > kMaxVariables)
        throw InvalidInput(fmt::format("n = {} exceeds {}", n, kMaxVariables));
    const Wide space = Wide{1} << n;
    if (s > space)
        throw InvalidInput(fmt::format("s = {} exceeds 2^{}", s, n));
    if (step_bits >= 64)
        throw InvalidInput("step width out of range");
    const Wide cleared = Wide{k} << step_bits;
    if (cleared > space - s)
        throw InvalidInput(fmt::format("k = {} out of domain for s = {}, n = {}, 2^{} per step", k, s, n, step_bits));
    const Wide den = space - cleared;
    if (den == 0)
        return {0, 1, approximate}; // s = 0 and the space is exhausted
    return make_fraction(s, den, approximate);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

bool operator<(const Probability& a, const Probability& b) noexcept
{
    return Wide{a.numerator} * b.denominator < Wide{b.numerator} * a.denominator;
}

Probability prob_sequential(Word s, Word k, unsigned n)
{
    return fraction_with_step(s, k, n, 0, false);
}

Probability prob_random_engine(Word s, Word k, unsigned n, unsigned p)
{
    return fraction_with_step(s, k, n, p, false);
}

Probability prob_tracker(Word s, Word k, unsigned n, unsigned p)
{
    return fraction_with_step(s, k, n, p + 1, true);
}

std::string_view to_string(ProbModel m) noexcept
{
    switch (m) {
    case ProbModel::Sequential: return "sequential";
    case ProbModel::RandomEngine: return "random";
    case ProbModel::Tracker: return "tracker_approx";
    }
    return "?";
}

ProbPoint prob_point(ProbModel model, Word s, Word k, unsigned n, unsigned p)
{
    ProbPoint point{k, s, n, p, model, {}};
    switch (model) {
    case ProbModel::Sequential: point.value = prob_sequential(s, k, n); break;
    case ProbModel::RandomEngine: point.value = prob_random_engine(s, k, n, p); break;
    case ProbModel::Tracker: point.value = prob_tracker(s, k, n, p); break;
    }
    return point;
}

std::string to_csv_row(const ProbPoint& point)
{
    return fmt::format("{},{},{},{},{},{},{},{}", point.k, point.s, point.n, point.p, to_string(point.model),
                       point.value.numerator, point.value.denominator, point.value.value());
}

HitHistogram empirical_hit_histogram(unsigned n, unsigned p, std::uint64_t trials, std::uint64_t seed,
                                     bool satisfiable)
{
    HitHistogram h;
    h.n = n;
    h.p = p;
    h.trials = trials;
    h.iterations.reserve(trials);
    NullSink sink;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Instance instance = extreme_instance(n, mix_seed(seed, 2 * t), satisfiable);
        RandomConfig cfg;
        cfg.prefix_bits = p;
        cfg.seed = mix_seed(seed, 2 * t + 1);
        RandomEngine engine(instance, sink, nullptr, cfg);
        const Verdict v = engine.run({});
        if (v.answer != Answer::Sat)
            ++h.exhausted;
        h.iterations.push_back(v.stats.iterations);
        ++h.counts[v.stats.iterations];
    }
    if (trials > 0) {
        double sum = 0.0;
        for (auto it : h.iterations)
            sum += static_cast<double>(it);
        h.mean = sum / static_cast<double>(trials);
        double sq = 0.0;
        for (auto it : h.iterations)
            sq += (static_cast<double>(it) - h.mean) * (static_cast<double>(it) - h.mean);
        h.stddev = trials > 1 ? std::sqrt(sq / static_cast<double>(trials - 1)) : 0.0;
    }
    return h;
}

} // namespace boardsat
