#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "linkcert/cycles.hpp"
#include "linkcert/exact.hpp"
#include "linkcert/geometry.hpp"

namespace linkcert {

// Sheared orthographic projection (x,y,z) -> (x + a z, y + b z), with z
// retained as the height of a strand over the image plane.
struct ProjectionDirection {
    BigRat a, b;

    bool operator==(const ProjectionDirection& o) const { return a == o.a && b == o.b; }
    std::string to_string() const;
};

// Deterministic candidate sequence; attempt 0 is the plain projection (0,0),
// later attempts draw integer shears from a seeded hash over a growing range.
ProjectionDirection direction_candidate(long long seed, int attempt);

// Integer coordinates of the projected vertices. Scaling each image axis by
// the (positive) shear denominator keeps everything in BigInt without
// changing any orientation sign.
class ProjectedView {
  public:
    ProjectedView(const Embedding& emb, const ProjectionDirection& dir);

    const BigInt& u(Vertex i) const { return u_[i]; }
    const BigInt& v(Vertex i) const { return v_[i]; }
    const BigInt& z(Vertex i) const { return emb_->coords[i].z; }
    const Embedding& embedding() const { return *emb_; }

    // det of [q-p, r-p] in the image plane.
    BigInt orient(Vertex p, Vertex q, Vertex r) const;

  private:
    const Embedding* emb_;
    std::vector<BigInt> u_, v_;
};

struct GenericityCheck {
    bool ok = true;
    std::string issue;
};

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// The five genericity predicates over the given vertices/edges: distinct
// vertex images, no vertex image in an open edge image, no overlapping edge
// images, no triple crossing point, distinct strand heights at crossings.
// `full` additionally runs the quadratic overlap/triple-point scans; the
// reduced form checks only the first two (sufficient for signed crossing
// counts, see Projector).
GenericityCheck check_direction(const ProjectedView& view, const std::vector<Vertex>& verts,
                                const EdgeList& edges, bool full);

EdgeList all_edges(int n);
EdgeList cycle_edges(const OrientedCycle& c);

// First direction from the seeded candidate sequence that passes all five
// predicates on the whole embedding. Fails loudly after max_attempts.
ProjectionDirection generic_direction(const Embedding& emb, long long seed,
                                      int max_attempts = 64);

}  // namespace linkcert
