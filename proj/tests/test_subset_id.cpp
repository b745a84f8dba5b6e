#include "boardsat/error.hpp"
#include "boardsat/subset_id.hpp"
#include "doctest.h"
#include "rank_oracle.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace boardsat;
using namespace boardsat::testing;

namespace {

VarSet set_of(unsigned n, std::vector<unsigned> idx)
{
    return VarSet::from_indices(n, idx);
}

} // namespace

TEST_CASE("idss matches the subset table")
{
    CHECK(idss(VarSet::empty(4)).value == 0);
    CHECK(idss(set_of(4, {0})).value == 1);
    CHECK(idss(set_of(4, {1})).value == 2);
    CHECK(idss(set_of(4, {1, 0})).value == 5);
    CHECK(idss(set_of(4, {2, 0})).value == 6);
    CHECK(idss(VarSet::full(4)).value == 15);
}

TEST_CASE("idss_inverse")
{
    CHECK(idss_inverse({0}, 5) == VarSet::empty(5));
    CHECK(idss_inverse({31}, 5) == VarSet::full(5));
    CHECK_THROWS_AS(idss_inverse({32}, 5), InvalidInput);
    for (unsigned n = 0; n <= 6; ++n)
        for (Word id = 0; id < (Word{1} << n); ++id)
            CHECK(idss(idss_inverse({id}, n)).value == id);
}

TEST_CASE("closed-form rank equals the increment loop for n <= 6")
{
    for (unsigned n = 1; n <= 6; ++n)
        for (Word mask = 0; mask < (Word{1} << n); ++mask) {
            const VarSet s(n, mask);
            CHECK(idss(s).value == increment_loop_rank(s));
        }
}

TEST_CASE("idss is a bijection with contiguous size blocks")
{
    for (unsigned n = 1; n <= 12; ++n) {
        std::vector<Word> seen(Word{1} << n, 0);
        Word block_start = 0;
        for (unsigned k = 0; k <= n; ++k) {
            const Word block_end = block_start + binomial(n, k);
            for (Word mask = 0; mask < (Word{1} << n); ++mask) {
                if (static_cast<unsigned>(std::popcount(mask)) != k)
                    continue;
                const Word id = idss(VarSet(n, mask)).value;
                CHECK(id >= block_start);
                CHECK(id < block_end);
                ++seen[id];
            }
            block_start = block_end;
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](Word c) { return c == 1; }));
    }
}

TEST_CASE("wide universes stay in range")
{
    CHECK(idss(VarSet::full(62)).value == low_mask(62));
    const VarSet s = set_of(62, {61, 40, 3});
    CHECK(idss_inverse(idss(s), 62) == s);
}
