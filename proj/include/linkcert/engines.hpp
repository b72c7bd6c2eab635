#pragma once

#include <array>
#include <functional>
#include <optional>

#include "linkcert/certificate.hpp"
#include "linkcert/errors.hpp"
#include "linkcert/paths.hpp"
#include "linkcert/selectors.hpp"
#include "linkcert/sequences.hpp"

namespace linkcert {

enum class Parity { Nonzero, Odd };

struct SearchBudget {
    long long max_tuples = 100'000'000;  // tuples examined across one search
    int max_component_size = 10;
    long long time_cap_ms = 0;  // 0 = unlimited
};

struct EngineOptions {
    SearchBudget budget;
    long long seed = 0;        // recorded in certificates; engines are deterministic
    bool relax_sizes = false;  // skip top-level vertex-count preconditions (probe mode)
};

// Nontrivial two-component link by exhaustive scan, triangles first. On K_6
// triangle pairs a hit is guaranteed; exhaustion elsewhere raises
// SearchExhausted.
LinkCertificate find_nonsplit_pair(const Embedding& emb, Parity parity,
                                   const EngineOptions& opts = {});

// Triangle + m-cycle with nonzero linking number on the first m+3 vertices.
LinkCertificate find_triangle_cycle_link(const Embedding& emb, int m,
                                         const EngineOptions& opts = {});

// Three-component link with both hub linking numbers odd, scanned over
// disjoint cycle triples by total size (9, then 10) on the first 10 vertices.
LinkCertificate find_three_component_link(const Embedding& emb, const EngineOptions& opts = {});

// Two-component link with lk = k*2^(r+1), k != 0, from cycles Z, W that both
// link L with lk == 0 mod 2^r (orientations are flipped to make them
// positive first). Direct when one of them is already 0 mod 2^(r+1);
// otherwise 2^(r+1)+1 bridges and the zero-block selection.
LinkCertificate make_even_link(const Embedding& emb, const OrientedCycle& L,
                               const OrientedCycle& Z, const OrientedCycle& W, int r,
                               const EngineOptions& opts = {});

// n+1 components with every hub linking number nonzero (or odd), built by the
// recursive halving construction on the first alpha(n) vertices.
LinkCertificate find_hub_link(const Embedding& emb, int n, Parity parity,
                              const EngineOptions& opts = {});

struct RingLink {
    OrientedCycle hub;
    std::vector<OrientedCycle> keys;
};

// Finds a two-component link inside one block: (hub, key).
using BaseSearcher =
    std::function<std::pair<OrientedCycle, OrientedCycle>(const std::vector<Vertex>& block)>;

// Same recursion over disjoint vertex blocks, each hosting a copy of the base
// graph; needs at least alpha_prime(n) blocks.
LinkCertificate hub_link_over_blocks(const Embedding& emb,
                                     const std::vector<std::vector<Vertex>>& blocks, int n,
                                     Parity parity, const BaseSearcher& base,
                                     const EngineOptions& opts = {});

// Stage s = 1..r halves the 2^r keys: a pair member already 0 mod 2^s
// advances (the larger one when both qualify), otherwise 2^s+1 bridges merge
// the pair. Ends with one cycle, lk == 0 mod 2^r and nonzero.
LinkCertificate iterate_doubling(const Embedding& emb, const OrientedCycle& L,
                                 const std::vector<OrientedCycle>& keys, int r,
                                 const EngineOptions& opts = {});

// n+1 components with lk(L, Z_i) = k_i 2^r, k_i != 0. r=1,n=1 runs on the
// first 10 vertices; otherwise alpha_prime(n 2^r) blocks of K_{m+3} with
// m = max(gamma(r), 3), doubling each group of 2^r keys independently.
LinkCertificate find_hub_link_mod2r(const Embedding& emb, int n, int r,
                                    const EngineOptions& opts = {});

// Exhaustive K_10 scan for a pair with lk == 2 mod 4 (empirical verifier).
LinkCertificate find_pair_mod4(const Embedding& emb, const EngineOptions& opts = {});

// Three components L, W, A with lk(L,W), lk(L,A) nonzero multiples of 2^r and
// lk(W,A) even.
LinkCertificate find_three_component_mod2r(const Embedding& emb, int r,
                                           const EngineOptions& opts = {});

// n+1 components, all pairwise linking numbers even, non-split via
// lk(L, V_j) = 2 k_j != 0.
LinkCertificate find_all_even_link(const Embedding& emb, int n, const EngineOptions& opts = {});

// Two components with lk = 3k, k != 0, over five K_7 blocks.
LinkCertificate find_pair_mod3(const Embedding& emb, const EngineOptions& opts = {});

// n+1 components with lk(L, Z_i) = 3 k_i, k_i != 0, over alpha_prime(3n)
// K_7 blocks.
LinkCertificate find_hub_link_mod3(const Embedding& emb, int n, const EngineOptions& opts = {});

// Runs the engine selected by a theorem id ("mod3", "mod2-keys-n2-r1", ...).
LinkCertificate construct_by_id(const Embedding& emb, const std::string& theorem_id,
                                const EngineOptions& opts = {});

// Vertex count the engine for this id needs (engine precondition).
int required_vertices(const std::string& theorem_id);

namespace detail {

// Proof-step internals exposed for white-box tests.

// The even/odd inductive combine step: two hub links with n-1 keys each (plus
// the extra two-component pair in the odd case) become one with n keys.
RingLink combine_rings(const Projector& proj, int n, Parity parity, const RingLink& left,
                       const RingLink& right,
                       const std::optional<std::pair<OrientedCycle, OrientedCycle>>& extra,
                       std::vector<std::string>& trace);

// Theorem 4.1 casework: given hub L and three keys with nonzero hub linking,
// returns a cycle A with lk(A, L) == 0 mod 3 and nonzero.
OrientedCycle mod3_select(const Projector& proj, const OrientedCycle& L,
                          std::vector<OrientedCycle> keys, std::vector<std::string>& trace);

// Pure casework over the five-cycle classes [lens0, lens1, lens2, inner,
// outer]: picks a fusible subset whose class sum is 0 mod 3 and nonzero.
// Requires sum(w) == 0 mod 3 and != 0. Exhaustively testable.
struct Mod3Plan {
    std::string branch;
    std::vector<int> fuse;  // indices into the five cycles
};
Mod3Plan mod3_branch_plan(const std::array<long long, 5>& w);

// Theorem 3.1 finish: from L, W, Z_1, Z_2 with hub linking numbers that are
// nonzero multiples of 2^r, produce A completing the three-component link.
OrientedCycle three_component_finish(const Projector& proj, const OrientedCycle& L,
                                     const OrientedCycle& W, OrientedCycle Z1, OrientedCycle Z2,
                                     int r, std::vector<std::string>& trace);

// Theorem 3.2 merge: pair (Y, Y') with even nonzero lk against L and even lk
// against each cycle in `stack`, both odd against `target`; 3*2^(k-1) bridges
// (k = stack size + 2), block decompositions along the stack, then the final
// even selection against target. Returns a cycle even against everything,
// nonzero against L.
OrientedCycle all_even_merge(const Projector& proj, const OrientedCycle& L,
                             const std::vector<OrientedCycle>& stack, const OrientedCycle& target,
                             OrientedCycle Y1, OrientedCycle Y2, std::vector<std::string>& trace);

}  // namespace detail

}  // namespace linkcert
