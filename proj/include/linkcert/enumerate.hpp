#pragma once

#include <optional>
#include <vector>

#include "linkcert/cycles.hpp"
#include "linkcert/exact.hpp"

namespace linkcert {

// Streams every undirected cycle over the pool exactly once, in canonical
// orientation (smallest vertex first, smaller neighbor second). Order:
// increasing length, then combinations of the sorted pool in lex order, then
// permutations in lex order. Lazy and restartable.
class CycleStream {
  public:
    CycleStream(std::vector<Vertex> pool, int min_len, int max_len);

    std::optional<OrientedCycle> next();

  private:
    bool open_combination();
    bool advance_combination();

    std::vector<Vertex> pool_;
    int min_len_, max_len_;
    int k_ = 0;
    std::vector<int> comb_;
    std::vector<Vertex> rest_;
    bool need_comb_ = true;
    bool fresh_perm_ = true;
    bool done_ = false;
};

// Streams tuples of pairwise vertex-disjoint cycles with the given component
// sizes, each unordered tuple exactly once: positions with equal sizes are
// forced into increasing canonical order. Deterministic lexicographic order,
// outer position slowest.
class DisjointTupleStream {
  public:
    DisjointTupleStream(std::vector<Vertex> pool, std::vector<int> sizes);

    std::optional<std::vector<OrientedCycle>> next();

  private:
    bool open_level(int level);

    std::vector<Vertex> pool_;
    std::vector<int> sizes_;
    std::vector<CycleStream> streams_;
    std::vector<OrientedCycle> current_;
    bool done_ = false;
    bool primed_ = false;
};

// (p choose k) * (k-1)! / 2 — cycles of length k over a p-vertex pool.
BigInt count_cycles(int p, int k);

}  // namespace linkcert
