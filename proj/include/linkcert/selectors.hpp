#pragma once

#include <array>
#include <span>
#include <vector>

namespace linkcert {

// Consecutive run of positions in a cyclic sequence, wrapping allowed.
struct CyclicRange {
    int first = 0;
    int length = 0;

    bool contains(int idx, int size) const;
};

CyclicRange complement_range(const CyclicRange& r, int size);
long long range_sum(std::span<const long long> values, const CyclicRange& r);

// Nonempty proper consecutive block (or complement of one) whose sum is 0
// mod m and nonzero integrally. Found via partial sums S_1..S_{t-1}: a prefix
// that is 0 mod m, else the first pair of equal residues. Requires length >=
// m+1, total == 0 mod m, total != 0.
struct BlockSelection {
    long long modulus = 0;
    CyclicRange selected;
    bool is_complement = false;
    long long block_sum = 0;
    std::vector<long long> prefix_sums;
};

BlockSelection zero_block_select(std::span<const long long> values, long long m);

// First proper consecutive run (scan order: start, then end) with even sum.
// Requires length >= 3 and even total; the complement then also has even sum.
CyclicRange select_zero_subsequence_mod2(std::span<const long long> values);

// Cuts the cyclic sequence into the maximum number of consecutive blocks each
// summing to 0 mod m, rotating first when that helps; the rotation achieving
// the maximum with the smallest starting index wins. Requires total == 0 mod m.
struct BlockDecomposition {
    int rotation = 0;  // blocks start right after original position rotation-1
    std::vector<CyclicRange> blocks;
};

BlockDecomposition max_block_decompose(std::span<const long long> values, long long m);

// Splits a cyclic sequence of length (m+1)^2 into three consecutive ranges,
// each summing to 0 mod m: alternate groups of m values with single skipped
// positions, take each group's zero block, absorb everything between two
// chosen blocks, and let the remainder be the third range. Requires
// total == 0 mod m.
std::array<CyclicRange, 3> three_range_split(std::span<const long long> values, long long m);

}  // namespace linkcert
