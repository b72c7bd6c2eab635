#include <doctest.h>

#include <numeric>

#include "linkcert/errors.hpp"
#include "linkcert/selectors.hpp"

using namespace linkcert;

namespace {

long long mod_pos(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

// Validity predicate used as the oracle: nonempty proper consecutive cyclic
// block, sum 0 mod m, nonzero integrally.
void check_selection(const std::vector<long long>& values, long long m,
                     const BlockSelection& sel) {
    const int t = static_cast<int>(values.size());
    REQUIRE(sel.selected.length >= 1);
    REQUIRE(sel.selected.length <= t - 1);
    const long long sum = range_sum(values, sel.selected);
    CHECK(mod_pos(sum, m) == 0);
    CHECK(sum != 0);
    CHECK(sum == sel.block_sum);
}

}  // namespace

TEST_CASE("zero_block_select on the worked examples") {
    {
        std::vector<long long> v{1, 1, 1, 1, 2};
        auto sel = zero_block_select(v, 2);
        CHECK(sel.selected.first == 0);
        CHECK(sel.selected.length == 2);
        CHECK(sel.block_sum == 2);
        CHECK_FALSE(sel.is_complement);
        check_selection(v, 2, sel);
    }
    {
        // Prefix (3,-3) vanishes integrally; the complement carries the sum.
        std::vector<long long> v{3, -3, 2, 2, 2};
        auto sel = zero_block_select(v, 2);
        CHECK(sel.is_complement);
        CHECK(sel.selected.first == 2);
        CHECK(sel.selected.length == 3);
        CHECK(sel.block_sum == 6);
        check_selection(v, 2, sel);
    }
    {
        std::vector<long long> v{1, 1, 1, 1};
        CHECK_THROWS_AS(zero_block_select(v, 3), PreconditionError);
        std::vector<long long> zero{1, -1, 2, -2};
        CHECK_THROWS_AS(zero_block_select(zero, 2), PreconditionError);
        std::vector<long long> tooshort{2, 2};
        CHECK_THROWS_AS(zero_block_select(tooshort, 2), PreconditionError);
    }
}

TEST_CASE("zero_block_select matches the oracle on a moderate exhaustive slice") {
    // Full exhaustive range runs in the acceptance suite; here lengths <= 6,
    // entries in [-3,3].
    for (long long m : {2, 3, 4}) {
        for (int len = static_cast<int>(m) + 1; len <= 6; ++len) {
            std::vector<long long> v(len, -3);
            while (true) {
                const long long total = std::accumulate(v.begin(), v.end(), 0LL);
                if (total != 0 && mod_pos(total, m) == 0)
                    check_selection(v, m, zero_block_select(v, m));
                int i = len - 1;
                while (i >= 0 && v[i] == 3) v[i--] = -3;
                if (i < 0) break;
                ++v[i];
            }
        }
    }
}

TEST_CASE("select_zero_subsequence_mod2 scan order") {
    {
        auto run = select_zero_subsequence_mod2(std::vector<long long>{1, 1, 0});
        CHECK(run.first == 0);
        CHECK(run.length == 2);
    }
    {
        auto run = select_zero_subsequence_mod2(std::vector<long long>{0, 1, 1});
        CHECK(run.first == 0);
        CHECK(run.length == 1);
    }
    CHECK_THROWS_AS(select_zero_subsequence_mod2(std::vector<long long>{1, 1}),
                    PreconditionError);
    CHECK_THROWS_AS(select_zero_subsequence_mod2(std::vector<long long>{1, 1, 1}),
                    PreconditionError);
}

TEST_CASE("select_zero_subsequence_mod2: proper even run exists and is first in scan order") {
    for (int len = 3; len <= 7; ++len) {
        std::vector<long long> v(len, -2);
        while (true) {
            const long long total = std::accumulate(v.begin(), v.end(), 0LL);
            if (mod_pos(total, 2) == 0) {
                auto run = select_zero_subsequence_mod2(v);
                REQUIRE(run.length >= 1);
                CHECK(run.first + run.length <= len);
                CHECK_FALSE((run.first == 0 && run.length == len));
                CHECK(mod_pos(range_sum(v, run), 2) == 0);
                // Nothing earlier in scan order qualifies.
                bool earlier = false;
                for (int s = 0; s <= run.first && !earlier; ++s) {
                    const int last_e = s < run.first ? len - 1 : run.first + run.length - 2;
                    long long acc = 0;
                    for (int e = s; e <= last_e; ++e) {
                        acc += v[e];
                        if (s == 0 && e == len - 1) continue;
                        if (mod_pos(acc, 2) == 0) {
                            earlier = true;
                            break;
                        }
                    }
                }
                CHECK_FALSE(earlier);
            }
            int i = len - 1;
            while (i >= 0 && v[i] == 2) v[i--] = -2;
            if (i < 0) break;
            ++v[i];
        }
    }
}

namespace {

int oracle_max_blocks(const std::vector<long long>& v, long long m, int rotation) {
    const int t = static_cast<int>(v.size());
    int blocks = 0;
    long long acc = 0;
    for (int i = 0; i < t; ++i) {
        acc += v[(rotation + i) % t];
        if (mod_pos(acc, m) == 0) {
            ++blocks;
            acc = 0;
        }
    }
    return acc == 0 ? blocks : 0;  // acc always 0 at the end (total == 0 mod m)
}

}  // namespace

TEST_CASE("max_block_decompose: worked examples") {
    {
        auto dec = max_block_decompose(std::vector<long long>{1, 1, 1, 1, 1, 1}, 2);
        CHECK(dec.blocks.size() == 3);
        for (const auto& b : dec.blocks) CHECK(b.length == 2);
    }
    {
        auto dec = max_block_decompose(std::vector<long long>{0, 0, 0}, 2);
        CHECK(dec.blocks.size() == 3);
    }
    {
        std::vector<long long> v{1, 3, 1, 1};
        auto dec = max_block_decompose(v, 2);
        CHECK(dec.blocks.size() == 2);
        CHECK(dec.rotation == 0);
        CHECK(range_sum(v, dec.blocks[0]) == 4);
        CHECK(range_sum(v, dec.blocks[1]) == 2);
    }
    CHECK_THROWS_AS(max_block_decompose(std::vector<long long>{1, 1, 1}, 2), PreconditionError);
}

TEST_CASE("max_block_decompose maximizes over rotations; smallest rotation wins") {
    for (long long m : {2, 3}) {
        for (int len = 2; len <= 6; ++len) {
            std::vector<long long> v(len, -2);
            while (true) {
                const long long total = std::accumulate(v.begin(), v.end(), 0LL);
                if (mod_pos(total, m) == 0) {
                    auto dec = max_block_decompose(v, m);
                    int best = 0;
                    for (int rot = 0; rot < len; ++rot)
                        best = std::max(best, oracle_max_blocks(v, m, rot));
                    CHECK(static_cast<int>(dec.blocks.size()) == best);
                    CHECK(oracle_max_blocks(v, m, dec.rotation) == best);
                    for (int rot = 0; rot < dec.rotation; ++rot)
                        CHECK(oracle_max_blocks(v, m, rot) < best);
                    int covered = 0;
                    for (const auto& b : dec.blocks) {
                        CHECK(mod_pos(range_sum(v, b), m) == 0);
                        covered += b.length;
                    }
                    CHECK(covered == len);
                }
                int i = len - 1;
                while (i >= 0 && v[i] == 2) v[i--] = -2;
                if (i < 0) break;
                ++v[i];
            }
        }
    }
}

TEST_CASE("every even-sum binary cyclic sequence of length 6 splits into >= 3 blocks") {
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<long long> v(6);
        int ones = 0;
        for (int i = 0; i < 6; ++i) {
            v[i] = (mask >> i) & 1;
            ones += v[i];
        }
        if (ones % 2 != 0) continue;
        auto dec = max_block_decompose(v, 2);
        CHECK(dec.blocks.size() >= 3);
    }
}

TEST_CASE("binary zero-sum sequences of length 3*2^(k-1) survive k-1 decompositions") {
    // Simulate the level structure: decompose, then assign fresh parities to
    // the fused blocks and decompose again; at least 3 remain at the end.
    std::uint64_t state = 12345;
    auto rnd = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int k = 2; k <= 4; ++k) {
        for (int trial = 0; trial < 200; ++trial) {
            int len = 3 * (1 << (k - 1));
            for (int level = 0; level + 1 < k; ++level) {
                std::vector<long long> v(len);
                long long parity = 0;
                for (int i = 0; i + 1 < len; ++i) {
                    v[i] = rnd() & 1;
                    parity ^= v[i];
                }
                v[len - 1] = parity;  // force zero sum mod 2
                auto dec = max_block_decompose(v, 2);
                CHECK(static_cast<int>(dec.blocks.size()) >= (len + 1) / 2);
                len = static_cast<int>(dec.blocks.size());
            }
            CHECK(len >= 3);
        }
    }
}

TEST_CASE("three_range_split partitions (m+1)^2 values into three 0 mod m ranges") {
    std::uint64_t state = 777;
    auto rnd = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (long long m : {2, 4}) {
        const int t = static_cast<int>((m + 1) * (m + 1));
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<long long> v(t);
            long long acc = 0;
            for (int i = 0; i + 1 < t; ++i) {
                v[i] = static_cast<long long>(rnd() % 11) - 5;
                acc += v[i];
            }
            long long last = -acc % m;
            v[t - 1] = last + static_cast<long long>(rnd() % 3) * m;
            auto ranges = three_range_split(v, m);
            int covered = 0;
            for (const auto& r : ranges) {
                CHECK(r.length >= 1);
                CHECK(mod_pos(range_sum(v, r), m) == 0);
                covered += r.length;
            }
            CHECK(covered == t);
            CHECK((ranges[1].first) == (ranges[0].first + ranges[0].length) % t);
            CHECK((ranges[2].first) == (ranges[1].first + ranges[1].length) % t);
        }
    }
    CHECK_THROWS_AS(three_range_split(std::vector<long long>(8, 0), 2), PreconditionError);
}
