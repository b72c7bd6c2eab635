#include "linkcert/linking.hpp"

#include <cmath>

#include "linkcert/errors.hpp"

namespace linkcert {

BigInt CrossingDiagram::over_sum_a() const {
    BigInt s = 0;
    for (const auto& c : crossings)
        if (c.a_over) s += c.sign;
    return s;
}

BigInt CrossingDiagram::signed_total() const {
    BigInt s = 0;
    for (const auto& c : crossings) s += c.sign;
    return s;
}

namespace {

struct EdgeHit {
    bool proper = false;
    BigInt o1, o2, o3, o4;
};

EdgeHit hit(const ProjectedView& view, Vertex e1, Vertex e2, Vertex f1, Vertex f2) {
    EdgeHit h;
    h.o1 = view.orient(e1, e2, f1);
    h.o2 = view.orient(e1, e2, f2);
    if (h.o1.sign() * h.o2.sign() >= 0) return h;
    h.o3 = view.orient(f1, f2, e1);
    h.o4 = view.orient(f1, f2, e2);
    if (h.o3.sign() * h.o4.sign() >= 0) return h;
    h.proper = true;
    return h;
}

// Sign of h_e - h_f, the strand height difference at the crossing.
int height_cmp(const ProjectedView& view, const EdgeHit& h, Vertex e1, Vertex e2, Vertex f1,
               Vertex f2) {
    const BigInt de = h.o3 - h.o4, df = h.o1 - h.o2;
    const BigInt num =
        (h.o3 * view.z(e2) - h.o4 * view.z(e1)) * df - (h.o1 * view.z(f2) - h.o2 * view.z(f1)) * de;
    return num.sign() * de.sign() * df.sign();
}

int frame_sign(const ProjectedView& view, Vertex e1, Vertex e2, Vertex f1, Vertex f2) {
    const BigInt cross = (view.u(e2) - view.u(e1)) * (view.v(f2) - view.v(f1)) -
                         (view.v(e2) - view.v(e1)) * (view.u(f2) - view.u(f1));
    return cross.sign();
}

void require_disjoint(const OrientedCycle& A, const OrientedCycle& B) {
    if (!A.disjoint_from(B)) throw NotDisjointError();
}

std::vector<Vertex> union_vertices(const OrientedCycle& A, const OrientedCycle& B) {
    std::vector<Vertex> verts = A.vertices();
    verts.insert(verts.end(), B.vertices().begin(), B.vertices().end());
    return verts;
}

}  // namespace

CrossingDiagram crossing_diagram(const Embedding& emb, const OrientedCycle& A,
                                 const OrientedCycle& B, const ProjectionDirection& dir) {
    require_disjoint(A, B);
    ProjectedView view(emb, dir);

    EdgeList edges = cycle_edges(A);
    const EdgeList eb = cycle_edges(B);
    edges.insert(edges.end(), eb.begin(), eb.end());
    auto check = check_direction(view, union_vertices(A, B), edges, /*full=*/true);
    if (!check.ok) throw DegenerateDirectionError("degenerate direction: " + check.issue);

    CrossingDiagram diagram;
    for (int i = 0; i < A.size(); ++i) {
        const Vertex e1 = A.at(i), e2 = A.at(i + 1);
        for (int j = 0; j < B.size(); ++j) {
            const Vertex f1 = B.at(j), f2 = B.at(j + 1);
            EdgeHit h = hit(view, e1, e2, f1, f2);
            if (!h.proper) continue;
            Crossing c;
            c.a_edge = i;
            c.b_edge = j;
            const int cmp = height_cmp(view, h, e1, e2, f1, f2);
            if (cmp == 0) throw InternalCheckError("equal strand heights in a valid embedding");
            c.a_over = cmp > 0;
            const int fs = frame_sign(view, e1, e2, f1, f2);
            c.sign = c.a_over ? fs : -fs;
            c.param_a = make_rat(h.o3, h.o3 - h.o4);
            c.param_b = make_rat(h.o1, h.o1 - h.o2);
            diagram.crossings.push_back(std::move(c));
        }
    }
    return diagram;
}

Projector::Projector(const Embedding& emb, long long seed, int max_attempts)
    : dir_(), view_(emb, dir_) {
    std::vector<Vertex> verts(emb.n());
    for (int i = 0; i < emb.n(); ++i) verts[i] = i;
    const EdgeList edges = all_edges(emb.n());
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        ProjectionDirection cand = direction_candidate(seed, attempt);
        ProjectedView view(emb, cand);
        if (check_direction(view, verts, edges, /*full=*/false).ok) {
            dir_ = std::move(cand);
            view_ = std::move(view);
            return;
        }
    }
    throw DegenerateDirectionError("no usable projection direction for this embedding");
}

Projector::Projector(const Embedding& emb, const ProjectionDirection& dir)
    : dir_(dir), view_(emb, dir) {
    std::vector<Vertex> verts(emb.n());
    for (int i = 0; i < emb.n(); ++i) verts[i] = i;
    auto check = check_direction(view_, verts, all_edges(emb.n()), /*full=*/false);
    if (!check.ok) throw DegenerateDirectionError("degenerate direction: " + check.issue);
}

BigInt Projector::lk(const OrientedCycle& A, const OrientedCycle& B) const {
    require_disjoint(A, B);
    BigInt sum = 0;
    for (int i = 0; i < A.size(); ++i) {
        const Vertex e1 = A.at(i), e2 = A.at(i + 1);
        for (int j = 0; j < B.size(); ++j) {
            const Vertex f1 = B.at(j), f2 = B.at(j + 1);
            EdgeHit h = hit(view_, e1, e2, f1, f2);
            if (!h.proper) continue;
            const int cmp = height_cmp(view_, h, e1, e2, f1, f2);
            if (cmp == 0) throw InternalCheckError("equal strand heights in a valid embedding");
            if (cmp > 0) sum += frame_sign(view_, e1, e2, f1, f2);
        }
    }
    return sum;
}

BigInt linking_number(const Embedding& emb, const OrientedCycle& A, const OrientedCycle& B) {
    return Projector(emb).lk(A, B);
}

namespace {

struct Vec3 {
    double x, y, z;
};

Vec3 unit_diff(const Point3& p, const Point3& q) {
    Vec3 d{static_cast<double>(p.x - q.x), static_cast<double>(p.y - q.y),
           static_cast<double>(p.z - q.z)};
    const double len = std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
    return {d.x / len, d.y / len, d.z / len};
}

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double triple(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
           a.z * (b.x * c.y - b.y * c.x);
}

// Signed solid angle of the spherical triangle on unit vectors.
double solid_tri(const Vec3& a, const Vec3& b, const Vec3& c) {
    return 2.0 * std::atan2(triple(a, b, c), 1.0 + dot(a, b) + dot(b, c) + dot(c, a));
}

}  // namespace

double gauss_estimate(const Embedding& emb, const OrientedCycle& A, const OrientedCycle& B) {
    require_disjoint(A, B);
    double total = 0.0;
    for (int i = 0; i < A.size(); ++i) {
        const Point3& p1 = emb.coords[A.at(i)];
        const Point3& p2 = emb.coords[A.at(i + 1)];
        for (int j = 0; j < B.size(); ++j) {
            const Point3& q1 = emb.coords[B.at(j)];
            const Point3& q2 = emb.coords[B.at(j + 1)];
            const Vec3 u11 = unit_diff(p1, q1);
            const Vec3 u21 = unit_diff(p2, q1);
            const Vec3 u22 = unit_diff(p2, q2);
            const Vec3 u12 = unit_diff(p1, q2);
            total -= solid_tri(u11, u21, u22) + solid_tri(u11, u22, u12);
        }
    }
    return total / (4.0 * M_PI);
}

}  // namespace linkcert
