#include "boardsat/theta_join.hpp"

#include "boardsat/error.hpp"
#include "boardsat/subset_id.hpp"

#include <algorithm>
#include <unordered_map>

#include <fmt/format.h>

namespace boardsat {

Relation::Relation(VarSet vars, std::vector<Word> rows) : vars_(vars), rows_(std::move(rows))
{
    const Word limit = low_mask(vars_.size());
    for (Word r : rows_)
        if (r > limit)
            throw InvalidInput(fmt::format("row {} does not fit {}", r, vars_.to_string()));
    std::sort(rows_.begin(), rows_.end());
    rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

bool Relation::contains(Word row) const
{
    return std::binary_search(rows_.begin(), rows_.end(), row);
}

namespace {

// Rows of `r` projected onto `shared` (global mask), as local values of `shared`.
Word project(const Relation& r, Word row, Word shared)
{
    return extract_bits(deposit_bits(row, r.vars().mask()), shared);
}

std::unordered_multimap<Word, Word> index_by(const Relation& r, Word shared)
{
    std::unordered_multimap<Word, Word> index;
    index.reserve(r.size());
    for (Word row : r.rows())
        index.emplace(project(r, row, shared), deposit_bits(row, r.vars().mask()));
    return index;
}

} // namespace

JoinCase classify_join(const Relation& a, const Relation& b)
{
    const Word shared = a.vars().mask() & b.vars().mask();
    if (shared == 0)
        return JoinCase::CrossProduct;
    const Relation& small = a.size() <= b.size() ? a : b;
    const Relation& large = a.size() <= b.size() ? b : a;
    std::vector<Word> keys;
    keys.reserve(small.size());
    for (Word row : small.rows())
        keys.push_back(project(small, row, shared));
    std::sort(keys.begin(), keys.end());
    for (Word row : large.rows())
        if (std::binary_search(keys.begin(), keys.end(), project(large, row, shared)))
            return JoinCase::NaturalJoin;
    return JoinCase::Incompatible;
}

Relation theta_join(const Relation& a, const Relation& b, std::size_t row_cap)
{
    if (a.vars().universe() != b.vars().universe())
        throw InvalidInput("theta_join operands over different universes");

    const VarSet joined = a.vars().united(b.vars());
    const Word shared = a.vars().mask() & b.vars().mask();
    const Relation& small = a.size() <= b.size() ? a : b;
    const Relation& large = a.size() <= b.size() ? b : a;

    if (shared == 0 && a.size() * b.size() > row_cap)
        throw ResourceLimit(fmt::format("join blow-up: {} x {} rows over {} and {} exceeds cap {}", a.size(),
                                        b.size(), a.vars().to_string(), b.vars().to_string(), row_cap));

    const auto index = index_by(small, shared);
    std::vector<Word> rows;
    for (Word row : large.rows()) {
        const Word global = deposit_bits(row, large.vars().mask());
        const auto [lo, hi] = index.equal_range(extract_bits(global, shared));
        for (auto it = lo; it != hi; ++it) {
            rows.push_back(extract_bits(global | it->second, joined.mask()));
            if (rows.size() > row_cap)
                throw ResourceLimit(fmt::format("join blow-up: {} and {} produce more than {} rows",
                                                a.vars().to_string(), b.vars().to_string(), row_cap));
        }
    }
    return {joined, std::move(rows)};
}

Relation fold_theta(std::vector<Relation> relations, unsigned universe, std::size_t row_cap, FoldStats* stats,
                    std::stop_token stop)
{
    std::stable_sort(relations.begin(), relations.end(),
                     [](const Relation& x, const Relation& y) { return x.size() < y.size(); });
    Relation acc = Relation::unit(universe);
    FoldStats local;
    local.rows_peak = acc.size();
    for (const Relation& r : relations) {
        if (stop.stop_requested())
            throw FoldCancelled{};
        if (r.vars().universe() != universe)
            throw InvalidInput("fold_theta operand over a different universe");
        acc = theta_join(acc, r, row_cap);
        ++local.joins;
        local.rows_peak = std::max(local.rows_peak, acc.size());
        if (acc.empty())
            break;
    }
    if (stats)
        *stats = local;
    return acc;
}

std::vector<Assignment> expand_rows(const Relation& r, unsigned n, std::size_t cap)
{
    if (r.vars().universe() != n)
        throw InvalidInput("expand_rows: universe mismatch");
    const Word free_mask = low_mask(n) & ~r.vars().mask();
    const unsigned free_count = static_cast<unsigned>(std::popcount(free_mask));
    if (free_count >= 63 || (r.size() != 0 && (Word{1} << free_count) > cap / r.size()))
        throw ResourceLimit(fmt::format("expansion of {} rows over {} free variables exceeds cap {}", r.size(),
                                        free_count, cap));
    std::vector<Assignment> out;
    out.reserve(r.size() << free_count);
    for (Word row : r.rows()) {
        const Word fixed = deposit_bits(row, r.vars().mask());
        for (Word f = 0; f < (Word{1} << free_count); ++f)
            out.push_back({n, fixed | deposit_bits(f, free_mask)});
    }
    std::sort(out.begin(), out.end(), [](const Assignment& x, const Assignment& y) { return x.bits < y.bits; });
    return out;
}

} // namespace boardsat
