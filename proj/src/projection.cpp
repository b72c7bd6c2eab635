#include "linkcert/projection.hpp"

#include <map>

#include "linkcert/errors.hpp"

namespace linkcert {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

long long ranged(uint64_t h, long long radius) {
    return static_cast<long long>(h % (2 * static_cast<uint64_t>(radius) + 1)) - radius;
}

}  // namespace

std::string ProjectionDirection::to_string() const {
    return "(" + a.str() + ", " + b.str() + ")";
}

ProjectionDirection direction_candidate(long long seed, int attempt) {
    if (attempt <= 0) return {BigRat(0), BigRat(0)};
    const long long radius = 8LL << std::min(40, (attempt - 1) / 3);
    const uint64_t base = splitmix64(static_cast<uint64_t>(seed) * 0x51cf3f1ab393c21bULL +
                                     static_cast<uint64_t>(attempt));
    ProjectionDirection d;
    d.a = BigRat(ranged(splitmix64(base ^ 0xa1f5e02cULL), radius));
    d.b = BigRat(ranged(splitmix64(base ^ 0x3c6ef372ULL), radius));
    return d;
}

ProjectedView::ProjectedView(const Embedding& emb, const ProjectionDirection& dir) : emb_(&emb) {
    const BigInt an = numerator(dir.a), ad = denominator(dir.a);
    const BigInt bn = numerator(dir.b), bd = denominator(dir.b);
    u_.reserve(emb.coords.size());
    v_.reserve(emb.coords.size());
    for (const auto& p : emb.coords) {
        u_.push_back(ad * p.x + an * p.z);
        v_.push_back(bd * p.y + bn * p.z);
    }
}

BigInt ProjectedView::orient(Vertex p, Vertex q, Vertex r) const {
    return (u_[q] - u_[p]) * (v_[r] - v_[p]) - (v_[q] - v_[p]) * (u_[r] - u_[p]);
}

EdgeList all_edges(int n) {
    EdgeList edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return edges;
}

EdgeList cycle_edges(const OrientedCycle& c) {
    EdgeList edges;
    for (int i = 0; i < c.size(); ++i) edges.emplace_back(c.at(i), c.at(i + 1));
    return edges;
}

namespace {

// w strictly between p and q on their common line (images).
bool strictly_inside(const ProjectedView& view, Vertex p, Vertex q, Vertex w) {
    if (view.orient(p, q, w) != 0) return false;
    const BigInt du = view.u(q) - view.u(p), dv = view.v(q) - view.v(p);
    const BigInt t = (view.u(w) - view.u(p)) * du + (view.v(w) - view.v(p)) * dv;
    return t > 0 && t < du * du + dv * dv;
}

struct CrossData {
    bool proper = false;
    BigInt o1, o2, o3, o4;  // f1,f2 against line e; e1,e2 against line f
};

CrossData proper_crossing(const ProjectedView& view, Vertex e1, Vertex e2, Vertex f1, Vertex f2) {
    CrossData c;
    c.o1 = view.orient(e1, e2, f1);
    c.o2 = view.orient(e1, e2, f2);
    if (c.o1.sign() * c.o2.sign() >= 0) return c;
    c.o3 = view.orient(f1, f2, e1);
    c.o4 = view.orient(f1, f2, e2);
    if (c.o3.sign() * c.o4.sign() >= 0) return c;
    c.proper = true;
    return c;
}

}  // namespace

GenericityCheck check_direction(const ProjectedView& view, const std::vector<Vertex>& verts,
                                const EdgeList& edges, bool full) {
    GenericityCheck out;
    auto fail = [&](std::string why) {
        out.ok = false;
        out.issue = std::move(why);
        return out;
    };

    std::map<std::pair<BigInt, BigInt>, Vertex> images;
    for (Vertex v : verts) {
        auto [it, fresh] = images.emplace(std::make_pair(view.u(v), view.v(v)), v);
        if (!fresh)
            return fail("coincident vertex images (" + std::to_string(it->second) + "," +
                        std::to_string(v) + ")");
    }

    for (const auto& [p, q] : edges)
        for (Vertex w : verts) {
            if (w == p || w == q) continue;
            if (strictly_inside(view, p, q, w))
                return fail("vertex " + std::to_string(w) + " inside edge image (" +
                            std::to_string(p) + "," + std::to_string(q) + ")");
        }

    if (!full) return out;

    // Overlaps, triple points, and height separation need every edge pair.
    std::map<std::pair<BigRat, BigRat>, std::pair<size_t, size_t>> seen_points;
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const auto [p1, p2] = edges[i];
            const auto [q1, q2] = edges[j];
            const BigInt a1 = view.orient(p1, p2, q1);
            const BigInt a2 = view.orient(p1, p2, q2);
            if (a1 == 0 && a2 == 0) {
                // Same image line; reject any overlap longer than a point.
                const BigInt du = view.u(p2) - view.u(p1), dv = view.v(p2) - view.v(p1);
                auto pos = [&](Vertex w) { return (view.u(w) - view.u(p1)) * du +
                                                  (view.v(w) - view.v(p1)) * dv; };
                BigInt lo1(0), hi1 = du * du + dv * dv;
                BigInt lo2 = pos(q1), hi2 = pos(q2);
                if (lo2 > hi2) std::swap(lo2, hi2);
                if (max(lo1, lo2) < min(hi1, hi2))
                    return fail("edge images overlap along a segment");
                continue;
            }
            const bool share = p1 == q1 || p1 == q2 || p2 == q1 || p2 == q2;
            if (share) continue;
            auto cd = proper_crossing(view, p1, p2, q1, q2);
            if (!cd.proper) continue;
            const BigInt den = cd.o3 - cd.o4;
            BigRat px = make_rat(cd.o3 * view.u(p2) - cd.o4 * view.u(p1), den);
            BigRat py = make_rat(cd.o3 * view.v(p2) - cd.o4 * view.v(p1), den);
            auto [it, fresh] = seen_points.emplace(std::make_pair(px, py), std::make_pair(i, j));
            if (!fresh) return fail("three edge images through a common point");
            // Strand heights at the crossing must differ.
            const BigInt he_num = cd.o3 * view.z(p2) - cd.o4 * view.z(p1);
            const BigInt hf_num = cd.o1 * view.z(q2) - cd.o2 * view.z(q1);
            if (he_num * (cd.o1 - cd.o2) == hf_num * (cd.o3 - cd.o4))
                return fail("equal strand heights at a crossing");
        }
    }
    return out;
}

ProjectionDirection generic_direction(const Embedding& emb, long long seed, int max_attempts) {
    std::vector<Vertex> verts(emb.n());
    for (int i = 0; i < emb.n(); ++i) verts[i] = i;
    const EdgeList edges = all_edges(emb.n());
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        ProjectionDirection dir = direction_candidate(seed, attempt);
        ProjectedView view(emb, dir);
        if (check_direction(view, verts, edges, /*full=*/true).ok) return dir;
    }
    throw DegenerateDirectionError("no generic direction found within " +
                                   std::to_string(max_attempts) + " attempts");
}

}  // namespace linkcert
