#include "linkcert/selectors.hpp"

#include <numeric>
#include <string>

#include "linkcert/errors.hpp"

namespace linkcert {

namespace {

long long mod_pos(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

bool CyclicRange::contains(int idx, int size) const {
    const int rel = ((idx - first) % size + size) % size;
    return rel < length;
}

CyclicRange complement_range(const CyclicRange& r, int size) {
    return {(r.first + r.length) % size, size - r.length};
}

long long range_sum(std::span<const long long> values, const CyclicRange& r) {
    const int t = static_cast<int>(values.size());
    long long s = 0;
    for (int i = 0; i < r.length; ++i) s += values[(r.first + i) % t];
    return s;
}

BlockSelection zero_block_select(std::span<const long long> values, long long m) {
    const int t = static_cast<int>(values.size());
    if (m < 1) throw PreconditionError("precondition violated: modulus must be positive");
    if (t < m + 1)
        throw PreconditionError("precondition violated: need at least m+1 values, got " +
                                std::to_string(t));
    const long long total = std::accumulate(values.begin(), values.end(), 0LL);
    if (mod_pos(total, m) != 0)
        throw PreconditionError("precondition violated: total sum is not 0 mod m");
    if (total == 0) throw PreconditionError("precondition violated: total sum is zero integrally");

    BlockSelection out;
    out.modulus = m;
    out.prefix_sums.resize(t - 1);
    long long run = 0;
    for (int i = 0; i < t - 1; ++i) {
        run += values[i];
        out.prefix_sums[i] = run;
    }

    auto finish = [&](CyclicRange block, long long sum) {
        if (sum != 0) {
            out.selected = block;
            out.is_complement = false;
            out.block_sum = sum;
        } else {
            out.selected = complement_range(block, t);
            out.is_complement = true;
            out.block_sum = total;
        }
        return out;
    };

    for (int i = 0; i < t - 1; ++i)
        if (mod_pos(out.prefix_sums[i], m) == 0)
            return finish({0, i + 1}, out.prefix_sums[i]);

    for (int j = 1; j < t - 1; ++j)
        for (int i = 0; i < j; ++i)
            if (mod_pos(out.prefix_sums[i], m) == mod_pos(out.prefix_sums[j], m))
                return finish({i + 1, j - i}, out.prefix_sums[j] - out.prefix_sums[i]);

    // Pigeonhole over the first m partial sums guarantees we never get here.
    throw InternalCheckError("zero_block_select found no block despite valid preconditions");
}

CyclicRange select_zero_subsequence_mod2(std::span<const long long> values) {
    const int t = static_cast<int>(values.size());
    if (t < 3) throw PreconditionError("precondition violated: need at least 3 values");
    long long total = std::accumulate(values.begin(), values.end(), 0LL);
    if (mod_pos(total, 2) != 0)
        throw PreconditionError("precondition violated: total sum is odd");

    for (int start = 0; start < t; ++start) {
        long long run = 0;
        for (int end = start; end < t; ++end) {
            run += values[end];
            if (start == 0 && end == t - 1) break;  // proper runs only
            if (mod_pos(run, 2) == 0) return {start, end - start + 1};
        }
    }
    throw InternalCheckError("no proper even-sum run despite valid preconditions");
}

BlockDecomposition max_block_decompose(std::span<const long long> values, long long m) {
    const int t = static_cast<int>(values.size());
    if (m < 1) throw PreconditionError("precondition violated: modulus must be positive");
    if (t < 1) throw PreconditionError("precondition violated: empty sequence");
    std::vector<long long> prefix(t + 1, 0);
    for (int i = 0; i < t; ++i) prefix[i + 1] = mod_pos(prefix[i] + values[i], m);
    if (prefix[t] != 0)
        throw PreconditionError("precondition violated: total sum is not 0 mod m");

    // A rotation starting after position p cuts wherever the running sum
    // returns to prefix[p]'s residue; block count = frequency of that residue.
    std::vector<int> freq(m, 0);
    for (int i = 1; i <= t; ++i) ++freq[prefix[i]];
    int best_rot = 0, best_count = freq[0];
    for (int p = 1; p < t; ++p) {
        if (freq[prefix[p]] > best_count) {
            best_count = freq[prefix[p]];
            best_rot = p;
        }
    }

    BlockDecomposition out;
    out.rotation = best_rot;
    const long long cls = prefix[best_rot];
    int block_start = best_rot;
    for (int step = 1; step <= t; ++step) {
        const int pos = (best_rot + step - 1) % t;  // original index of this value
        if (prefix[pos + 1] == cls) {
            int len = pos >= block_start ? pos - block_start + 1 : pos + t - block_start + 1;
            out.blocks.push_back({block_start, len});
            block_start = (pos + 1) % t;
        }
    }
    return out;
}

namespace {

// Nonempty consecutive run with sum 0 mod m inside values[first..first+count),
// found by the partial-sum pigeonhole. Works for any count >= m.
CyclicRange zero_run_within(std::span<const long long> values, int first, int count, long long m,
                            int t) {
    std::vector<long long> pre(count);
    long long run = 0;
    for (int i = 0; i < count; ++i) {
        run += values[(first + i) % t];
        pre[i] = mod_pos(run, m);
    }
    for (int i = 0; i < count; ++i)
        if (pre[i] == 0) return {first, i + 1};
    for (int j = 1; j < count; ++j)
        for (int i = 0; i < j; ++i)
            if (pre[i] == pre[j]) return {(first + i + 1) % t, j - i};
    throw InternalCheckError("pigeonhole failed in zero_run_within");
}

}  // namespace

std::array<CyclicRange, 3> three_range_split(std::span<const long long> values, long long m) {
    const int t = static_cast<int>(values.size());
    if (m < 1) throw PreconditionError("precondition violated: modulus must be positive");
    if (t != static_cast<int>((m + 1) * (m + 1)))
        throw PreconditionError("precondition violated: need exactly (m+1)^2 values");
    long long total = 0;
    for (long long v : values) total += v;
    if (mod_pos(total, m) != 0)
        throw PreconditionError("precondition violated: total sum is not 0 mod m");

    const int groups = static_cast<int>(m) + 1;
    std::vector<CyclicRange> zeros(groups);
    for (int g = 0; g < groups; ++g)
        zeros[g] = zero_run_within(values, g * (static_cast<int>(m) + 1), static_cast<int>(m), m, t);

    // Separator g runs from the end of zero g to just before zero g+1.
    std::vector<CyclicRange> seps(groups);
    std::vector<long long> sep_sums(groups);
    for (int g = 0; g < groups; ++g) {
        const int from = (zeros[g].first + zeros[g].length) % t;
        const int next = zeros[(g + 1) % groups].first;
        const int len = ((next - from) % t + t) % t;
        if (len == 0) throw InternalCheckError("empty separator in three_range_split");
        seps[g] = {from, len};
        sep_sums[g] = range_sum(values, seps[g]);
    }

    // Proper run of separators summing to 0 mod m, again by pigeonhole.
    int ga = -1, gb = -1;
    {
        std::vector<long long> pre(groups);
        long long run = 0;
        for (int i = 0; i < groups; ++i) {
            run += sep_sums[i];
            pre[i] = mod_pos(run, m);
        }
        for (int i = 0; i + 1 < groups && ga < 0; ++i)
            if (pre[i] == 0) ga = 0, gb = i;
        if (ga < 0)
            for (int j = 1; j < groups && ga < 0; ++j)
                for (int i = 0; i < j && ga < 0; ++i)
                    if (pre[i] == pre[j]) ga = i + 1, gb = j;
        if (ga < 0) throw InternalCheckError("pigeonhole failed over separators");
    }

    // Second range: separators ga..gb plus the zero blocks between them.
    CyclicRange a1 = zeros[ga];
    const int a2_first = seps[ga].first;
    const int a2_last = (seps[gb].first + seps[gb].length - 1) % t;
    CyclicRange a2{a2_first, ((a2_last - a2_first) % t + t) % t + 1};
    const int used = a1.length + a2.length;
    CyclicRange a3{(a2_first + a2.length) % t, t - used};
    if (a3.length <= 0) throw InternalCheckError("empty remainder in three_range_split");
    if ((a3.first + a3.length) % t != a1.first)
        throw InternalCheckError("three_range_split ranges are not contiguous");
    return {a1, a2, a3};
}

}  // namespace linkcert
