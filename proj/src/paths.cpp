#include "linkcert/paths.hpp"

#include <algorithm>

#include "linkcert/errors.hpp"
#include "linkcert/selectors.hpp"

namespace linkcert {

PathSystem choose_path_system(const OrientedCycle& Z, const OrientedCycle& W, int t) {
    if (t < 2) throw PreconditionError("path system needs at least 2 bridges");
    if (!Z.disjoint_from(W)) throw NotDisjointError();
    if (Z.size() < t)
        throw TooFewVerticesError("too few vertices: source cycle has " +
                                  std::to_string(Z.size()) + " < " + std::to_string(t));
    if (W.size() < t)
        throw TooFewVerticesError("too few vertices: target cycle has " +
                                  std::to_string(W.size()) + " < " + std::to_string(t));
    PathSystem ps{Z, W, {}};
    ps.bridges.reserve(t);
    for (int j = 0; j < t; ++j) {
        // Evenly spaced: ascending along W, descending along Z.
        const int wpos = static_cast<int>(static_cast<long long>(j) * W.size() / t);
        const int zpos = static_cast<int>(static_cast<long long>(t - 1 - j) * Z.size() / t);
        ps.bridges.emplace_back(Z.vertices()[zpos], W.vertices()[wpos]);
    }
    return ps;
}

namespace {

int position_of(const OrientedCycle& c, Vertex v) {
    const auto& verts = c.vertices();
    const auto it = std::find(verts.begin(), verts.end(), v);
    return it == verts.end() ? -1 : static_cast<int>(it - verts.begin());
}

}  // namespace

bool check_path_system(const PathSystem& ps, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int t = ps.size();
    if (t < 2) return fail("fewer than 2 bridges");
    std::vector<int> wpos(t), zpos(t);
    std::vector<Vertex> seen;
    for (int j = 0; j < t; ++j) {
        const auto [zv, wv] = ps.bridges[j];
        zpos[j] = position_of(ps.source, zv);
        wpos[j] = position_of(ps.target, wv);
        if (zpos[j] < 0 || wpos[j] < 0) return fail("bridge endpoint not on its cycle");
        seen.push_back(zv);
        seen.push_back(wv);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        return fail("bridge endpoints are not distinct");
    // Ascending along W: exactly one wraparound in the cyclic position list.
    int w_desc = 0, z_asc = 0;
    for (int j = 0; j < t; ++j) {
        if (wpos[(j + 1) % t] <= wpos[j]) ++w_desc;
        if (zpos[(j + 1) % t] >= zpos[j]) ++z_asc;
    }
    if (w_desc != 1) return fail("target endpoints not in ascending cyclic order");
    if (z_asc != 1) return fail("source endpoints not in descending cyclic order");
    return true;
}

BridgeFamily build_bridge_family(const Projector& proj, const OrientedCycle& L,
                                 const OrientedCycle& Z, const OrientedCycle& W,
                                 const PathSystem& ps) {
    if (!L.disjoint_from(Z) || !L.disjoint_from(W)) throw NotDisjointError();
    std::string why;
    if (!check_path_system(ps, &why)) throw PreconditionError("invalid path system: " + why);

    const int t = ps.size();
    BridgeFamily family{ps, {}, {}};
    family.cycles.reserve(t);
    for (int i = 0; i < t; ++i) {
        const int next = (i + 1) % t;
        const int wp_i = position_of(W, ps.bridges[i].second);
        const int wp_n = position_of(W, ps.bridges[next].second);
        const int zp_i = position_of(Z, ps.bridges[i].first);
        const int zp_n = position_of(Z, ps.bridges[next].first);
        // Bridge i up, along W to bridge i+1, back down, along Z home.
        std::vector<Vertex> verts = W.arc(wp_i, wp_n);
        std::vector<Vertex> back = Z.arc(zp_n, zp_i);
        verts.insert(verts.end(), back.begin(), back.end());
        family.cycles.push_back(OrientedCycle(std::move(verts)));
    }

    OrientedChain sum;
    for (const auto& c : family.cycles) sum += chain_of(c);
    sum += chain_of(Z.reversed());
    sum += chain_of(W.reversed());
    if (!sum.is_zero())
        throw InternalCheckError("bridge family chains do not sum to chain(Z) + chain(W)");

    BigInt total = 0;
    for (const auto& c : family.cycles) {
        family.classes.push_back(proj.lk(c, L));
        total += family.classes.back();
    }
    if (total != proj.lk(Z, L) + proj.lk(W, L))
        throw InternalCheckError("bridge family classes do not sum to lk(Z,L) + lk(W,L)");
    return family;
}

OrientedCycle fuse_family_range(const BridgeFamily& family, const CyclicRange& range) {
    const int t = static_cast<int>(family.cycles.size());
    if (range.length < 1 || range.length >= t)
        throw PreconditionError("family fusion needs a nonempty proper run");
    std::vector<OrientedCycle> parts;
    parts.reserve(range.length);
    for (int i = 0; i < range.length; ++i)
        parts.push_back(family.cycles[(range.first + i) % t]);
    return fuse_cycles(parts);
}

}  // namespace linkcert
