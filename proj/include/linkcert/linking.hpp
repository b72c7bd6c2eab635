#pragma once

#include <memory>

#include "linkcert/projection.hpp"

namespace linkcert {

struct Crossing {
    int a_edge = 0;  // index into A's edge list (edge i runs A[i] -> A[i+1])
    int b_edge = 0;
    int sign = 0;       // orientation of the (over tangent, under tangent) frame
    bool a_over = false;
    BigRat param_a, param_b;  // crossing position within each edge, in (0,1)
};

struct CrossingDiagram {
    std::vector<Crossing> crossings;

    BigInt over_sum_a() const;   // sum of signs where A passes over B
    BigInt signed_total() const;
};

// All transversal inter-cycle crossings of the projected images. Requires a
// direction that is generic for the queried configuration; throws
// DegenerateDirectionError otherwise and NotDisjointError when A, B share a
// vertex.
CrossingDiagram crossing_diagram(const Embedding& emb, const OrientedCycle& A,
                                 const OrientedCycle& B, const ProjectionDirection& dir);

// Reusable projection context for many linking-number queries against one
// embedding. Construction picks the first seeded candidate direction whose
// image has pairwise-distinct vertex images and no vertex image inside an
// open edge image; those two facts make the strict-sign segment tests below
// decisive for every vertex-disjoint edge pair, and strand heights at a
// transversal crossing differ automatically in a valid embedding.
class Projector {
  public:
    explicit Projector(const Embedding& emb, long long seed = 0, int max_attempts = 64);
    Projector(const Embedding& emb, const ProjectionDirection& dir);

    const ProjectionDirection& direction() const { return dir_; }
    const Embedding& embedding() const { return view_.embedding(); }

    // Signed count of crossings where A passes over B.
    BigInt lk(const OrientedCycle& A, const OrientedCycle& B) const;

  private:
    ProjectionDirection dir_;
    ProjectedView view_;
};

BigInt linking_number(const Embedding& emb, const OrientedCycle& A, const OrientedCycle& B);

// Gauss linking integral of the two polygons, summed per segment pair as the
// signed solid angle of the spherical quadrilateral of directions. Numerical
// oracle for tests only.
double gauss_estimate(const Embedding& emb, const OrientedCycle& A, const OrientedCycle& B);

}  // namespace linkcert
