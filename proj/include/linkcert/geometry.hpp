#pragma once

#include <string>
#include <vector>

#include "linkcert/exact.hpp"

namespace linkcert {

struct Point3 {
    BigInt x, y, z;

    bool operator==(const Point3& o) const { return x == o.x && y == o.y && z == o.z; }
};

// Straight-line embedding of the complete graph K_n: vertex i sits at
// coords[i], every pair of vertices is an edge.
struct Embedding {
    std::vector<Point3> coords;

    int n() const { return static_cast<int>(coords.size()); }

    std::string to_json() const;
    static Embedding from_json(const std::string& text);
};

// det of [b-a, c-a, d-a]; zero iff the four points are coplanar.
BigInt orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

bool collinear(const Point3& a, const Point3& b, const Point3& c);

struct ValidationIssue {
    enum Kind { DuplicateVertices, CollinearTriple, CoplanarQuadruple };
    Kind kind;
    std::vector<int> vertices;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

// Checks the three general-position invariants: distinct vertices, no
// collinear triple, no coplanar quadruple. Stops after max_issues findings.
ValidationReport validate_embedding(const Embedding& emb, int max_issues = 8);

// Incremental variant used by the random generator: assumes coords[0..k-1]
// already form a valid embedding and checks vertex k against them.
bool new_point_keeps_valid(const std::vector<Point3>& coords, int k);

}  // namespace linkcert
