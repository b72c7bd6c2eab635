#include "linkcert/enumerate.hpp"

#include <algorithm>

#include "linkcert/errors.hpp"

namespace linkcert {

CycleStream::CycleStream(std::vector<Vertex> pool, int min_len, int max_len)
    : pool_(std::move(pool)), min_len_(min_len), max_len_(max_len) {
    std::sort(pool_.begin(), pool_.end());
    if (min_len_ < 3) throw PreconditionError("cycle length must be at least 3");
    k_ = min_len_;
    if (min_len_ > max_len_ || max_len_ > static_cast<int>(pool_.size())) done_ = true;
}

bool CycleStream::open_combination() {
    comb_.resize(k_);
    for (int i = 0; i < k_; ++i) comb_[i] = i;
    return true;
}

bool CycleStream::advance_combination() {
    const int n = static_cast<int>(pool_.size());
    int i = k_ - 1;
    while (i >= 0 && comb_[i] == n - k_ + i) --i;
    if (i < 0) {
        if (++k_ > max_len_) return false;
        return open_combination();
    }
    ++comb_[i];
    for (int j = i + 1; j < k_; ++j) comb_[j] = comb_[j - 1] + 1;
    return true;
}

std::optional<OrientedCycle> CycleStream::next() {
    while (!done_) {
        if (need_comb_) {
            const bool ok = comb_.empty() ? open_combination() : advance_combination();
            if (!ok) {
                done_ = true;
                break;
            }
            rest_.clear();
            for (int i = 1; i < k_; ++i) rest_.push_back(pool_[comb_[i]]);
            need_comb_ = false;
            fresh_perm_ = true;
        }
        while (true) {
            if (!fresh_perm_ && !std::next_permutation(rest_.begin(), rest_.end())) {
                need_comb_ = true;
                break;
            }
            fresh_perm_ = false;
            if (rest_.front() > rest_.back()) continue;  // mirror image already yielded
            std::vector<Vertex> verts;
            verts.reserve(k_);
            verts.push_back(pool_[comb_[0]]);
            verts.insert(verts.end(), rest_.begin(), rest_.end());
            return OrientedCycle(std::move(verts));
        }
    }
    return std::nullopt;
}

DisjointTupleStream::DisjointTupleStream(std::vector<Vertex> pool, std::vector<int> sizes)
    : pool_(std::move(pool)), sizes_(std::move(sizes)) {
    std::sort(pool_.begin(), pool_.end());
    if (sizes_.empty()) throw PreconditionError("tuple arity must be at least 1");
    long long need = 0;
    for (int s : sizes_) {
        if (s < 3) throw PreconditionError("component size must be at least 3");
        need += s;
    }
    if (need > static_cast<long long>(pool_.size())) done_ = true;
    current_.resize(sizes_.size());
}

bool DisjointTupleStream::open_level(int level) {
    std::vector<Vertex> remaining;
    if (level == 0) {
        remaining = pool_;
    } else {
        std::vector<char> used(pool_.size(), 0);
        for (int l = 0; l < level; ++l)
            for (Vertex v : current_[l].vertices())
                used[std::lower_bound(pool_.begin(), pool_.end(), v) - pool_.begin()] = 1;
        for (size_t i = 0; i < pool_.size(); ++i)
            if (!used[i]) remaining.push_back(pool_[i]);
    }
    if (static_cast<int>(streams_.size()) <= level) streams_.resize(level + 1, CycleStream({}, 3, 0));
    streams_[level] = CycleStream(std::move(remaining), sizes_[level], sizes_[level]);
    return true;
}

std::optional<std::vector<OrientedCycle>> DisjointTupleStream::next() {
    if (done_) return std::nullopt;
    const int arity = static_cast<int>(sizes_.size());
    int level = primed_ ? arity - 1 : 0;
    if (!primed_) {
        open_level(0);
        primed_ = true;
    }
    while (level >= 0) {
        auto cand = streams_[level].next();
        if (!cand) {
            --level;  // exhausted: backtrack
            continue;
        }
        // Unordered output: equal-size positions must ascend canonically.
        if (level > 0 && sizes_[level] == sizes_[level - 1] &&
            cand->vertices() < current_[level - 1].vertices()) {
            continue;
        }
        current_[level] = std::move(*cand);
        if (level == arity - 1) return current_;
        ++level;
        open_level(level);
    }
    done_ = true;
    return std::nullopt;
}

BigInt count_cycles(int p, int k) {
    if (k < 3 || k > p) return 0;
    BigInt binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (p - i) / (i + 1);
    BigInt fact = 1;
    for (int i = 2; i <= k - 1; ++i) fact *= i;
    return binom * fact / 2;
}

}  // namespace linkcert
