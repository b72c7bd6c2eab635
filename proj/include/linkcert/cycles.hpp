#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace linkcert {

using Vertex = int;

// Cycle in K_n given by its vertex sequence; orientation is the sequence
// order. At least 3 distinct vertices; consecutive pairs (and last->first)
// are the edges.
class OrientedCycle {
  public:
    OrientedCycle() = default;
    explicit OrientedCycle(std::vector<Vertex> verts);

    int size() const { return static_cast<int>(verts_.size()); }
    const std::vector<Vertex>& vertices() const { return verts_; }
    Vertex at(int i) const;  // cyclic indexing

    bool contains(Vertex v) const;
    bool disjoint_from(const OrientedCycle& other) const;

    OrientedCycle reversed() const;

    // Smallest vertex first, then the smaller of its two neighbors second.
    OrientedCycle canonical() const;

    // Vertices from position i to position j inclusive, following the
    // cycle orientation (positions, not vertex ids).
    std::vector<Vertex> arc(int i, int j) const;

    std::string to_string() const;

    bool operator==(const OrientedCycle& o) const { return verts_ == o.verts_; }

  private:
    std::vector<Vertex> verts_;
};

// Formal sum of oriented edges with integer multiplicities. An edge (u,v)
// and its reverse (v,u) carry negated multiplicities: internally the key is
// (min,max) and the stored value counts min->max traversals.
class OrientedChain {
  public:
    void add_edge(Vertex u, Vertex v, long long mult = 1);

    static OrientedChain of_cycle(const OrientedCycle& c);

    OrientedChain& operator+=(const OrientedChain& o);
    friend OrientedChain operator+(OrientedChain a, const OrientedChain& b) {
        a += b;
        return a;
    }

    bool is_zero() const { return mult_.empty(); }
    long long multiplicity(Vertex u, Vertex v) const;
    const std::map<std::pair<Vertex, Vertex>, long long>& edges() const { return mult_; }

    // Succeeds iff the support is a single simple closed curve; the returned
    // cycle's orientation agrees with the stored edge orientations.
    std::optional<OrientedCycle> as_simple_cycle(std::string* why = nullptr) const;

  private:
    std::map<std::pair<Vertex, Vertex>, long long> mult_;
};

OrientedChain chain_of(const OrientedCycle& c);
OrientedChain chain_add(const OrientedChain& a, const OrientedChain& b);

// chain_add over several cycles followed by as_simple_cycle; throws
// InternalCheckError when the sum is not a simple cycle.
OrientedCycle fuse_cycles(std::span<const OrientedCycle> parts);

}  // namespace linkcert
