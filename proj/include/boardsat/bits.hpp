#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace boardsat {

using Word = std::uint64_t;

// Widest formula the 64-bit assignment encoding supports.
inline constexpr unsigned kMaxVariables = 62;

constexpr Word low_mask(unsigned width) noexcept
{
    return width >= 64 ? ~Word{0} : (Word{1} << width) - 1;
}

// Scatter the low bits of `value` into the set positions of `mask`, lowest first.
constexpr Word deposit_bits(Word value, Word mask) noexcept
{
    Word out = 0;
    for (Word bit = 1; mask != 0; bit <<= 1) {
        const Word lowest = mask & (~mask + 1);
        if (value & bit)
            out |= lowest;
        mask &= mask - 1;
    }
    return out;
}

// Gather the bits of `value` at the set positions of `mask` into the low bits.
constexpr Word extract_bits(Word value, Word mask) noexcept
{
    Word out = 0;
    for (Word bit = 1; mask != 0; bit <<= 1) {
        const Word lowest = mask & (~mask + 1);
        if (value & lowest)
            out |= bit;
        mask &= mask - 1;
    }
    return out;
}

// Renders the low `width` bits most-significant first, e.g. (9, 4) -> "1001".
inline std::string to_bitstring(Word value, unsigned width)
{
    std::string s(width, '0');
    for (unsigned i = 0; i < width; ++i)
        if ((value >> i) & 1)
            s[width - 1 - i] = '1';
    return s;
}

} // namespace boardsat
