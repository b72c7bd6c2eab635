#pragma once

#include "linkcert/linking.hpp"
#include "linkcert/selectors.hpp"

namespace linkcert {

// t single-edge bridges from Z to W: endpoints on W in ascending cyclic
// order along W's orientation, endpoints on Z in descending cyclic order,
// all 2t endpoints distinct. Bridges are oriented Z -> W.
struct PathSystem {
    OrientedCycle source;  // Z
    OrientedCycle target;  // W
    std::vector<std::pair<Vertex, Vertex>> bridges;  // (z endpoint, w endpoint)

    int size() const { return static_cast<int>(bridges.size()); }
};

// Evenly spaced attachment vertices: position floor(j*|W|/t) on W for bridge
// j, and the mirrored descending choice on Z. Throws TooFewVerticesError
// naming the short cycle.
PathSystem choose_path_system(const OrientedCycle& Z, const OrientedCycle& W, int t);

// Independent validator of the cyclic-order invariants.
bool check_path_system(const PathSystem& ps, std::string* why = nullptr);

// Cycles A_i built from consecutive bridges: bridge i forward, W-arc forward
// to bridge i+1, bridge i+1 backward, Z-arc forward back to bridge i. The
// chain sum over the family equals chain(Z) + chain(W), and the classes
// lk(A_i, L) sum to lk(Z,L) + lk(W,L).
struct BridgeFamily {
    PathSystem paths;
    std::vector<OrientedCycle> cycles;
    std::vector<BigInt> classes;  // lk(A_i, L)
};

BridgeFamily build_bridge_family(const Projector& proj, const OrientedCycle& L,
                                 const OrientedCycle& Z, const OrientedCycle& W,
                                 const PathSystem& ps);

// Fuses a consecutive run of family cycles into one simple cycle via chain
// addition (interior bridges cancel in pairs).
OrientedCycle fuse_family_range(const BridgeFamily& family, const CyclicRange& range);

}  // namespace linkcert
