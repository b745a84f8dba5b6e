#include "boardsat/oracle.hpp"

#include "boardsat/boards.hpp"
#include "boardsat/error.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>
#include <omp.h>

namespace boardsat {
namespace {

void check_width(const Instance& instance, unsigned cap)
{
    if (instance.variable_count() > cap)
        throw ResourceLimit(fmt::format("brute force over n = {} exceeds cap {}", instance.variable_count(), cap));
}

} // namespace

std::vector<Assignment> brute_force_serial(const Instance& instance, unsigned cap)
{
    check_width(instance, cap);
    const unsigned n = instance.variable_count();
    std::vector<Assignment> out;
    for (Word a = 0; a <= low_mask(n); ++a)
        if (instance.satisfied_by(a))
            out.push_back({n, a});
    return out;
}

std::vector<Assignment> brute_force(const Instance& instance, unsigned cap)
{
    check_width(instance, cap);
    const unsigned n = instance.variable_count();
    const auto total = static_cast<std::int64_t>(Word{1} << n);
    std::vector<std::vector<Word>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));

#pragma omp parallel
    {
        auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::int64_t a = 0; a < total; ++a)
            if (instance.satisfied_by(static_cast<Word>(a)))
                local.push_back(static_cast<Word>(a));
    }

    std::vector<Assignment> out;
    for (const auto& local : per_thread)
        for (Word a : local)
            out.push_back({n, a});
    std::sort(out.begin(), out.end(), [](const Assignment& x, const Assignment& y) { return x.bits < y.bits; });
    return out;
}

ImplicitFormula extreme_instance(unsigned n, std::uint64_t seed, bool satisfiable)
{
    if (!satisfiable)
        return {n, std::nullopt};
    Rng rng(seed);
    return {n, rng() & low_mask(n)};
}

Formula to_cnf(const ImplicitFormula& f, unsigned limit)
{
    const unsigned n = f.variable_count();
    if (n > limit)
        throw ResourceLimit(fmt::format("explicit expansion of n = {} needs 2^{} clauses (limit 2^{})", n, n, limit));
    const VarSet full = VarSet::full(n);
    std::vector<Clause> clauses;
    clauses.reserve(Word{1} << n);
    const std::optional<Word> keep = f.witness() ? std::optional<Word>(complement(*f.witness(), n)) : std::nullopt;
    for (Word b = 0; b <= low_mask(n); ++b)
        if (b != keep)
            clauses.emplace_back(PartialAssignment{full, b});
    return {n, std::move(clauses)};
}

Formula random_formula(unsigned n, std::size_t m, WidthDistribution widths, std::uint64_t seed)
{
    if (n == 0)
        throw InvalidInput("random_formula needs at least one variable");
    if (widths.min_width > widths.max_width)
        throw InvalidInput(fmt::format("width range [{}, {}] is empty", widths.min_width, widths.max_width));
    Rng rng(seed);
    const unsigned lo = std::min(widths.min_width, n);
    const unsigned hi = std::min(widths.max_width, n);
    std::uniform_int_distribution<unsigned> width_dist(lo, hi);

    std::vector<unsigned> pool(n);
    std::vector<Clause> clauses;
    clauses.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const unsigned k = width_dist(rng);
        std::iota(pool.begin(), pool.end(), 0u);
        std::vector<Literal> lits;
        lits.reserve(k);
        // Partial Fisher-Yates over the variable indices.
        for (unsigned j = 0; j < k; ++j) {
            const unsigned pick = std::uniform_int_distribution<unsigned>(j, n - 1)(rng);
            std::swap(pool[j], pool[pick]);
            lits.push_back({pool[j], (rng() & 1) != 0});
        }
        clauses.emplace_back(n, lits);
    }
    return {n, std::move(clauses)};
}

} // namespace boardsat
