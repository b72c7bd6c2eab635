#pragma once

#include <vector>

#include "linkcert/geometry.hpp"
#include "linkcert/cycles.hpp"

namespace fixtures {

using linkcert::Embedding;
using linkcert::OrientedCycle;
using linkcert::Point3;

inline Embedding embedding_of(std::initializer_list<std::array<long long, 3>> pts) {
    Embedding emb;
    for (const auto& p : pts)
        emb.coords.push_back(Point3{linkcert::BigInt(p[0]), linkcert::BigInt(p[1]),
                                    linkcert::BigInt(p[2])});
    return emb;
}

// Two triangles forming a Hopf link: B pierces A's spanning disk exactly
// once, downward through the plane z=0 at (0,1,0), so lk(A,B) = -1 for the
// listed orientations (A is counterclockwise seen from +z).
inline Embedding hopf_embedding() {
    return embedding_of({{5, 0, 0},
                         {-5, 3, 0},
                         {-5, -3, 0},
                         {0, 0, 5},
                         {0, 2, -5},
                         {1, -6, -5}});
}

inline OrientedCycle hopf_a() { return OrientedCycle({0, 1, 2}); }
inline OrientedCycle hopf_b() { return OrientedCycle({3, 4, 5}); }

// Split pair: two triangles separated by the plane z = 0 and projected apart.
inline Embedding split_embedding() {
    return embedding_of({{0, 0, 7},
                         {10, 1, 8},
                         {1, 10, 9},
                         {100, 100, -7},
                         {110, 101, -8},
                         {101, 110, -9}});
}

// Four-component configuration with prescribed linking pattern:
//   L  (vertices 0-2):   large triangle around the origin, z near 0
//   W  (3-10):           coil passing twice downward through L's disk
//   Z1 (11-19), Z2 (20-28): coils passing twice upward through L's disk and
//                         once through a window of W
// giving lk(L,W) = -2, lk(L,Zi) = +2, lk(Zi,W) = +-1 (odd). Designed by
// tracking plane crossings; the tests recheck every value with both kernels.
struct CoilConfig {
    Embedding emb;
    OrientedCycle L, W, Z1, Z2;
    OrientedCycle Z3;  // third coil, y <= -400: split from W, lk(L,Z3) = +2
};

inline CoilConfig coil_configuration() {
    // Base layout at scale 10, plus small index-derived jitter to kill the
    // accidental coplanarities a regular grid produces. Jitter (< 5 units) is
    // far below every structural clearance (>= 100 units).
    static const std::array<std::array<long long, 3>, 38> base = {{
        // L
        {1000, 0, 0}, {-1000, 800, 10}, {-1000, -800, -10},
        // W: down at x~0, up at x~1500, down at x~300, up at x~-1500
        {0, 100, 600}, {0, 110, -600}, {1500, 90, -610}, {1500, 120, 610},
        {300, 80, 620}, {300, 130, -620}, {-1500, 70, -630}, {-1500, 140, 630},
        // Z1: threads W's (300,1500) window at z~300, two up-passes inside L
        {700, 1000, 300}, {700, -1000, 310}, {-300, -200, -360}, {-300, -210, 360},
        {-1700, -190, 370}, {-1700, -220, -370}, {-600, -180, -380}, {-600, -230, 380},
        {-550, -150, 950},
        // Z2: threads W's (-1500,0) window at z~250, two up-passes inside L
        {-700, 1000, 250}, {-700, -1000, 260}, {100, -300, -400}, {100, -310, 400},
        {-1750, -290, 410}, {-1750, -320, -410}, {-200, -280, -420}, {-200, -330, 420},
        {-150, -250, 1000},
        // Z3: stays in y <= -400 (split from W), two up-passes inside L
        {900, -400, 350}, {900, -410, -350}, {-100, -420, -360}, {-100, -430, 360},
        {-1900, -440, 370}, {-1900, -450, -370}, {-900, -460, -380}, {-900, -470, 380},
        {-850, -435, 990},
    }};
    auto jitter = [](int i, int axis) {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL * (i * 3 + axis + 11);
        h ^= h >> 29;
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 32;
        return static_cast<long long>(h % 9) - 4;
    };
    CoilConfig cfg;
    for (int i = 0; i < static_cast<int>(base.size()); ++i)
        cfg.emb.coords.push_back(Point3{linkcert::BigInt(base[i][0] + jitter(i, 0)),
                                        linkcert::BigInt(base[i][1] + jitter(i, 1)),
                                        linkcert::BigInt(base[i][2] + jitter(i, 2))});
    cfg.L = OrientedCycle({0, 1, 2});
    cfg.W = OrientedCycle({3, 4, 5, 6, 7, 8, 9, 10});
    cfg.Z1 = OrientedCycle({11, 12, 13, 14, 15, 16, 17, 18, 19});
    cfg.Z2 = OrientedCycle({20, 21, 22, 23, 24, 25, 26, 27, 28});
    cfg.Z3 = OrientedCycle({29, 30, 31, 32, 33, 34, 35, 36, 37});
    return cfg;
}

}  // namespace fixtures
