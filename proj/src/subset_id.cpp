#include "boardsat/subset_id.hpp"

#include "boardsat/error.hpp"

#include <array>

#include <fmt/format.h>

namespace boardsat {
namespace {

using PascalTable = std::array<std::array<Word, 64>, 64>;

constexpr PascalTable make_pascal()
{
    PascalTable t{};
    for (unsigned n = 0; n < 64; ++n) {
        t[n][0] = 1;
        for (unsigned k = 1; k <= n; ++k)
            t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
}

constexpr PascalTable kPascal = make_pascal();

Word size_block_start(unsigned n, unsigned size)
{
    Word base = 0;
    for (unsigned j = 0; j < size; ++j)
        base += kPascal[n][j];
    return base;
}

} // namespace

Word binomial(unsigned n, unsigned k) noexcept
{
    if (n >= 64 || k > n)
        return 0;
    return kPascal[n][k];
}

SubsetId idss(const VarSet& s)
{
    const unsigned n = s.universe();
    Word rank = 0;
    unsigned position = 0;
    for (Word m = s.mask(); m != 0; m &= m - 1, ++position)
        rank += binomial(static_cast<unsigned>(std::countr_zero(m)), position + 1);
    return {size_block_start(n, s.size()) + rank};
}

VarSet idss_inverse(SubsetId id, unsigned n)
{
    if (n > kMaxVariables || id.value > low_mask(n))
        throw InvalidInput(fmt::format("subset id {} out of range for n = {}", id.value, n));

    unsigned size = 0;
    Word remaining = id.value;
    while (remaining >= kPascal[n][size]) {
        remaining -= kPascal[n][size];
        ++size;
    }

    // Greedy unranking in the combinatorial number system, largest member first.
    Word mask = 0;
    unsigned upper = n;
    for (unsigned position = size; position > 0; --position) {
        unsigned d = position - 1;
        while (d + 1 < upper && binomial(d + 1, position) <= remaining)
            ++d;
        remaining -= binomial(d, position);
        mask |= Word{1} << d;
        upper = d;
    }
    return {n, mask};
}

} // namespace boardsat
