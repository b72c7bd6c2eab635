#include "linkcert/engines.hpp"

#include <algorithm>
#include <chrono>

#include "linkcert/enumerate.hpp"
#include "linkcert/errors.hpp"

namespace linkcert {

namespace {

using Clock = std::chrono::steady_clock;

long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

bool satisfies(Parity parity, const BigInt& lk) {
    return parity == Parity::Odd ? lk % 2 != 0 : lk != 0;
}

const char* parity_name(Parity p) { return p == Parity::Odd ? "odd" : "nonzero"; }

struct BudgetGuard {
    const SearchBudget& budget;
    long long examined = 0;
    Clock::time_point start = Clock::now();

    void tick(const char* what) {
        ++examined;
        if (budget.max_tuples > 0 && examined > budget.max_tuples)
            throw SearchExhausted(std::string(what) + ": budget exhausted after " +
                                  std::to_string(examined - 1) + " tuples");
        if (budget.time_cap_ms > 0 && (examined & 1023) == 0) {
            const auto ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
            if (ms.count() > budget.time_cap_ms)
                throw SearchExhausted(std::string(what) + ": time cap exceeded");
        }
    }
};

struct Ctx {
    const Embedding& emb;
    Projector proj;
    EngineOptions opts;
    BudgetGuard guard;
    std::vector<std::string> trace;

    Ctx(const Embedding& e, const EngineOptions& o)
        : emb(e), proj(e), opts(o), guard{o.budget} {}

    void note(std::string line) { trace.push_back(std::move(line)); }
};

std::vector<Vertex> first_vertices(const Embedding& emb, int count, const char* need) {
    if (emb.n() < count)
        throw PreconditionError(std::string(need) + " requires at least " + std::to_string(count) +
                                " vertices, embedding has " + std::to_string(emb.n()));
    std::vector<Vertex> pool(count);
    for (int i = 0; i < count; ++i) pool[i] = i;
    return pool;
}

std::string lk_str(const BigInt& v) { return v.str(); }

// Flip cycle orientation so its linking with L is positive. Returns whether
// we flipped and leaves the (positive) value in q.
bool orient_positive(const Projector& proj, const OrientedCycle& L, OrientedCycle& C, BigInt& q) {
    q = proj.lk(L, C);
    if (q < 0) {
        C = C.reversed();
        q = -q;
        return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// exhaustive pair / triple searches

struct SizePair {
    int a, b;
};

std::vector<SizePair> size_pairs(int pool, int max_size) {
    std::vector<SizePair> out;
    for (int total = 6; total <= pool; ++total)
        for (int a = 3; a <= total - 3; ++a) {
            const int b = total - a;
            if (a > b || a > max_size || b > max_size) continue;
            out.push_back({a, b});
        }
    return out;
}

// First disjoint pair in scan order whose linking number satisfies the
// predicate; triangles first, then larger components.
std::pair<OrientedCycle, OrientedCycle> find_pair_in_pool(
    Ctx& ctx, const std::vector<Vertex>& pool, const char* what,
    const std::function<bool(const BigInt&)>& pred) {
    for (const auto& sz : size_pairs(static_cast<int>(pool.size()),
                                     ctx.opts.budget.max_component_size)) {
        DisjointTupleStream stream(pool, {sz.a, sz.b});
        while (auto tuple = stream.next()) {
            ctx.guard.tick(what);
            const BigInt lk = ctx.proj.lk((*tuple)[0], (*tuple)[1]);
            if (pred(lk)) return {(*tuple)[0], (*tuple)[1]};
        }
    }
    throw SearchExhausted(std::string(what) + ": scanned all disjoint pairs without a hit");
}

std::pair<OrientedCycle, OrientedCycle> find_base_pair(Ctx& ctx, const std::vector<Vertex>& pool,
                                                       Parity parity) {
    auto pred = [parity](const BigInt& lk) { return satisfies(parity, lk); };
    return find_pair_in_pool(ctx, pool, "nonsplit pair search", pred);
}

// Triangle + m-cycle pair with nonzero linking number inside the pool.
std::pair<OrientedCycle, OrientedCycle> find_triangle_cycle_pair(Ctx& ctx,
                                                                 const std::vector<Vertex>& pool,
                                                                 int m) {
    if (m < 3) throw PreconditionError("cycle length m must be at least 3 (cycles need 3 vertices)");
    if (static_cast<int>(pool.size()) < m + 3)
        throw PreconditionError("triangle + " + std::to_string(m) + "-cycle search needs " +
                                std::to_string(m + 3) + " vertices");
    DisjointTupleStream stream(pool, {3, m});
    while (auto tuple = stream.next()) {
        ctx.guard.tick("triangle-cycle search");
        if (ctx.proj.lk((*tuple)[0], (*tuple)[1]) != 0) return {(*tuple)[0], (*tuple)[1]};
    }
    throw SearchExhausted(
        "triangle-cycle search: no linked triangle + " + std::to_string(m) +
        "-cycle pair found (falsification candidate for the cited base theorem)");
}

// Three components, both hub linking numbers odd; iterative deepening by
// total size (9 vertices, then 10).
RingLink find_three_component_in_pool(Ctx& ctx, const std::vector<Vertex>& pool) {
    for (int total = 9; total <= std::min<int>(10, pool.size()); ++total) {
        for (int a = 3; 3 * a <= total; ++a) {  // size multisets a <= b <= c
            for (int b = a; a + 2 * b <= total; ++b) {
                const int c = total - a - b;
                if (c < b) continue;
                DisjointTupleStream stream(pool, {a, b, c});
                while (auto tuple = stream.next()) {
                    ctx.guard.tick("three-component search");
                    for (int hub = 0; hub < 3; ++hub) {
                        const auto& L = (*tuple)[hub];
                        const auto& z1 = (*tuple)[(hub + 1) % 3];
                        const auto& z2 = (*tuple)[(hub + 2) % 3];
                        if (ctx.proj.lk(L, z1) % 2 != 0 && ctx.proj.lk(L, z2) % 2 != 0)
                            return {L, {z1, z2}};
                    }
                }
            }
        }
    }
    throw SearchExhausted(
        "three-component search: exhausted disjoint triples on 9-10 vertices "
        "(falsification candidate for the cited K_10 theorem)");
}

}  // namespace

// ---------------------------------------------------------------------------
// combine step of the hub-link recursion

namespace detail {

namespace {

// Simple cycle through the first edges of the listed hubs: each hub
// contributes its first oriented edge reversed, consecutive hubs are joined
// by single edges. Fusing it with any subset of the hubs cancels the
// corresponding reversed edges.
OrientedCycle connector_cycle(const std::vector<const OrientedCycle*>& hubs) {
    std::vector<Vertex> verts;
    for (const auto* h : hubs) {
        verts.push_back(h->vertices()[1]);
        verts.push_back(h->vertices()[0]);
    }
    return OrientedCycle(std::move(verts));
}

OrientedCycle fuse_with(const OrientedCycle& v, const std::vector<const OrientedCycle*>& hubs) {
    std::vector<OrientedCycle> parts{v};
    for (const auto* h : hubs) parts.push_back(*h);
    return fuse_cycles(parts);
}

}  // namespace

RingLink combine_rings(const Projector& proj, int n, Parity parity, const RingLink& left,
                       const RingLink& right,
                       const std::optional<std::pair<OrientedCycle, OrientedCycle>>& extra,
                       std::vector<std::string>& trace) {
    if (static_cast<int>(left.keys.size()) != n - 1 ||
        static_cast<int>(right.keys.size()) != n - 1)
        throw PreconditionError("combine_rings expects two (n-1)-key links");
    if ((n % 2 == 0) == extra.has_value())
        throw PreconditionError("combine_rings: extra pair is for odd n only");

    const OrientedCycle& L = left.hub;
    const OrientedCycle& Lp = right.hub;
    auto P = [&](const BigInt& v) { return satisfies(parity, v); };

    // Cross linking: any hit finishes the step immediately.
    for (int i = 0; i < n - 1; ++i)
        if (P(proj.lk(left.keys[i], Lp))) {
            trace.push_back("combine n=" + std::to_string(n) + ": cross link lk(Z_" +
                            std::to_string(i) + ", L') hits; right hub adopted");
            RingLink out{Lp, right.keys};
            out.keys.push_back(left.keys[i]);
            return out;
        }
    for (int i = 0; i < n - 1; ++i)
        if (P(proj.lk(right.keys[i], L))) {
            trace.push_back("combine n=" + std::to_string(n) + ": cross link lk(Z'_" +
                            std::to_string(i) + ", L) hits; left hub adopted");
            RingLink out{L, left.keys};
            out.keys.push_back(right.keys[i]);
            return out;
        }
    if (extra) {
        const auto& [Lpp, T] = *extra;
        if (P(proj.lk(L, T))) {
            trace.push_back("combine n=" + std::to_string(n) + ": lk(L, T) hits");
            RingLink out{L, left.keys};
            out.keys.push_back(T);
            return out;
        }
        if (P(proj.lk(Lp, T))) {
            trace.push_back("combine n=" + std::to_string(n) + ": lk(L', T) hits");
            RingLink out{Lp, right.keys};
            out.keys.push_back(T);
            return out;
        }
    }

    // V joins an edge of L, an edge of L', and in the odd case an edge of
    // the extra block's hub, each traversed against its cycle's orientation.
    std::vector<const OrientedCycle*> routed{&L, &Lp};
    if (extra) routed.push_back(&extra->first);
    const OrientedCycle V = connector_cycle(routed);

    std::vector<const OrientedCycle*> all_keys;
    for (const auto& k : left.keys) all_keys.push_back(&k);
    for (const auto& k : right.keys) all_keys.push_back(&k);

    int hits_left = 0, hits_right = 0;
    for (int i = 0; i < n - 1; ++i) {
        if (P(proj.lk(V, left.keys[i]))) ++hits_left;
        if (P(proj.lk(V, right.keys[i]))) ++hits_right;
    }
    const int m = hits_left + hits_right;

    auto collect = [&](const OrientedCycle& hub, bool include_extra) -> RingLink {
        RingLink out{hub, {}};
        for (const auto* k : all_keys) {
            if (static_cast<int>(out.keys.size()) == n) break;
            if (P(proj.lk(hub, *k))) out.keys.push_back(*k);
        }
        if (include_extra && static_cast<int>(out.keys.size()) < n &&
            P(proj.lk(hub, extra->second)))
            out.keys.push_back(extra->second);
        if (static_cast<int>(out.keys.size()) != n)
            throw InternalCheckError("combine_rings: branch guarantee violated (needed " +
                                     std::to_string(n) + " keys, found " +
                                     std::to_string(out.keys.size()) + ")");
        return out;
    };

    if (m >= n) {
        trace.push_back("combine n=" + std::to_string(n) + ": V links " + std::to_string(m) +
                        " keys; V is the hub");
        return collect(V, false);
    }
    if (m <= n - 2) {
        trace.push_back("combine n=" + std::to_string(n) + ": V links only " + std::to_string(m) +
                        " keys; hub = L+V+L'");
        return collect(fuse_with(V, {&L, &Lp}), extra.has_value());
    }

    // m == n-1.
    if (!extra) {
        if (hits_left == hits_right)
            throw InternalCheckError("combine_rings: tie in the majority branch");
        const bool right_major = hits_right > hits_left;
        trace.push_back("combine n=" + std::to_string(n) + ": V links n-1 keys (" +
                        std::to_string(hits_left) + "/" + std::to_string(hits_right) +
                        "); hub = V+" + (right_major ? "L" : "L'"));
        return collect(fuse_with(V, {right_major ? &L : &Lp}), false);
    }

    const auto& [Lpp, T] = *extra;
    if (P(proj.lk(T, V))) {
        trace.push_back("combine n=" + std::to_string(n) +
                        ": V links n-1 keys and lk(T,V) hits; V is the hub");
        RingLink out{V, {}};
        for (const auto* k : all_keys)
            if (P(proj.lk(V, *k))) out.keys.push_back(*k);
        out.keys.push_back(T);
        if (static_cast<int>(out.keys.size()) != n)
            throw InternalCheckError("combine_rings: V+T branch key count mismatch");
        return out;
    }

    const OrientedCycle hub1 = fuse_with(V, {&Lpp});
    const OrientedCycle hub2 = fuse_with(V, {&L, &Lp, &Lpp});
    int c1 = P(proj.lk(hub1, T)) ? 1 : 0;
    int c2 = P(proj.lk(hub2, T)) ? 1 : 0;
    for (const auto* k : all_keys) {
        if (P(proj.lk(hub1, *k))) ++c1;
        if (P(proj.lk(hub2, *k))) ++c2;
    }
    trace.push_back("combine n=" + std::to_string(n) + ": counting branch, |V+L''| keys = " +
                    std::to_string(c1) + ", |V+L+L'+L''| keys = " + std::to_string(c2));
    if (c1 >= n) return collect(hub1, true);
    if (c2 >= n) return collect(hub2, true);
    throw InternalCheckError("combine_rings: neither counting hub reaches n keys");
}

}  // namespace detail

namespace {

// Recursive hub-link construction over contiguous vertex ranges (alpha
// budgets): split a pool into two halves plus a 6-vertex block when n is odd.
RingLink solve_ring(Ctx& ctx, const std::vector<Vertex>& pool, int n, Parity parity) {
    if (n == 1) {
        if (pool.size() < 6)
            throw PreconditionError("hub-link: block of 6 vertices needed for the base pair");
        std::vector<Vertex> six(pool.begin(), pool.begin() + 6);
        auto [hub, key] = find_base_pair(ctx, six, parity);
        return {hub, {key}};
    }
    if (n == 2) {
        if (pool.size() < 10)
            throw PreconditionError("hub-link: block of 10 vertices needed for the base triple");
        std::vector<Vertex> ten(pool.begin(), pool.begin() + 10);
        return find_three_component_in_pool(ctx, ten);
    }
    const int half = to_ll(seq::alpha(n - 1));
    if (static_cast<int>(pool.size()) < (n % 2 == 0 ? 2 * half : 2 * half + 6))
        throw PreconditionError("hub-link: pool too small for alpha(" + std::to_string(n) + ")");
    std::vector<Vertex> left_pool(pool.begin(), pool.begin() + half);
    std::vector<Vertex> right_pool(pool.begin() + half, pool.begin() + 2 * half);
    RingLink left = solve_ring(ctx, left_pool, n - 1, parity);
    RingLink right = solve_ring(ctx, right_pool, n - 1, parity);
    std::optional<std::pair<OrientedCycle, OrientedCycle>> extra;
    if (n % 2 == 1) {
        std::vector<Vertex> six(pool.begin() + 2 * half, pool.begin() + 2 * half + 6);
        auto base = find_base_pair(ctx, six, parity);
        extra = base;
    }
    return detail::combine_rings(ctx.proj, n, parity, left, right, extra, ctx.trace);
}

// Same recursion over caller-provided blocks; alpha_prime counts the blocks.
RingLink solve_star(Ctx& ctx, const std::vector<std::vector<Vertex>>& blocks, int lo, int n,
                    Parity parity, const BaseSearcher& base) {
    if (n == 1) {
        auto [hub, key] = base(blocks[lo]);
        return {hub, {key}};
    }
    const int half = to_ll(seq::alpha_prime(n - 1));
    RingLink left = solve_star(ctx, blocks, lo, n - 1, parity, base);
    RingLink right = solve_star(ctx, blocks, lo + half, n - 1, parity, base);
    std::optional<std::pair<OrientedCycle, OrientedCycle>> extra;
    if (n % 2 == 1) extra = base(blocks[lo + 2 * half]);
    return detail::combine_rings(ctx.proj, n, parity, left, right, extra, ctx.trace);
}

// ---------------------------------------------------------------------------
// even-link core (bridge family + zero block selection)

struct EvenLinkResult {
    OrientedCycle cycle;
    bool direct = false;
};

// Z, W must already be oriented with positive linking against L, both
// q_i == 0 mod 2^r. Produces A with lk(A, L) == 0 mod 2^(r+1), nonzero.
EvenLinkResult even_link_core(Ctx& ctx, const OrientedCycle& L, const OrientedCycle& Z,
                              const OrientedCycle& W, int r, const char* stage) {
    const BigInt q1 = ctx.proj.lk(L, Z);
    const BigInt q2 = ctx.proj.lk(L, W);
    const BigInt mod_next = BigInt(1) << (r + 1);
    if (q1 <= 0 || q2 <= 0 || !divisible(q1, BigInt(1) << r) || !divisible(q2, BigInt(1) << r))
        throw PreconditionError(std::string(stage) +
                                ": even_link_core needs positive multiples of 2^r");
    if (divisible(q1, mod_next)) {
        ctx.note(std::string(stage) + ": q1=" + lk_str(q1) + " already 0 mod " +
                 mod_next.str() + "; direct");
        return {Z, true};
    }
    if (divisible(q2, mod_next)) {
        ctx.note(std::string(stage) + ": q2=" + lk_str(q2) + " already 0 mod " +
                 mod_next.str() + "; direct");
        return {W, true};
    }
    const int t = static_cast<int>(to_ll(mod_next)) + 1;
    if (Z.size() < t)
        throw TooFewVerticesError(std::string(stage) + ": too few vertices in Z (" +
                                  std::to_string(Z.size()) + " < " + std::to_string(t) + ")");
    if (W.size() < t)
        throw TooFewVerticesError(std::string(stage) + ": too few vertices in W (" +
                                  std::to_string(W.size()) + " < " + std::to_string(t) + ")");
    PathSystem ps = choose_path_system(Z, W, t);
    BridgeFamily family = build_bridge_family(ctx.proj, L, Z, W, ps);
    std::vector<long long> values;
    for (const auto& v : family.classes) values.push_back(to_ll(v));
    BlockSelection sel = zero_block_select(values, to_ll(mod_next));
    OrientedCycle A = fuse_family_range(family, sel.selected);
    const BigInt got = ctx.proj.lk(L, A);
    if (got == 0 || !divisible(got, mod_next))
        throw InternalCheckError(std::string(stage) + ": fused block has lk " + lk_str(got));
    std::string vals;
    for (size_t i = 0; i < values.size(); ++i)
        vals += (i ? "," : "") + std::to_string(values[i]);
    ctx.note(std::string(stage) + ": q1=" + lk_str(q1) + " q2=" + lk_str(q2) + " t=" +
             std::to_string(t) + " classes=[" + vals + "] block=(" +
             std::to_string(sel.selected.first) + ",len" + std::to_string(sel.selected.length) +
             (sel.is_complement ? ",complement" : "") + ") lk=" + lk_str(got));
    return {A, false};
}

// One doubling cascade: 2^r keys with nonzero hub linking collapse to a
// single cycle with lk == 0 mod 2^r, nonzero.
OrientedCycle doubling_core(Ctx& ctx, const OrientedCycle& L, std::vector<OrientedCycle> keys,
                            int r) {
    if (static_cast<int>(keys.size()) != (1 << r))
        throw PreconditionError("doubling needs exactly 2^r cycles");
    for (auto& k : keys)
        if (ctx.proj.lk(L, k) == 0)
            throw PreconditionError("doubling needs nonzero hub linking for every cycle");
    for (int s = 1; s <= r; ++s) {
        const BigInt mod = BigInt(1) << s;
        std::vector<OrientedCycle> next;
        for (size_t p = 0; p + 1 < keys.size(); p += 2) {
            OrientedCycle& A = keys[p];
            OrientedCycle& B = keys[p + 1];
            const BigInt qa = ctx.proj.lk(L, A), qb = ctx.proj.lk(L, B);
            const bool a_ok = divisible(qa, mod), b_ok = divisible(qb, mod);
            if (a_ok || b_ok) {
                // A member already at the next modulus advances; prefer the
                // larger one to preserve vertex budgets.
                const bool pick_a = a_ok && (!b_ok || A.size() >= B.size());
                ctx.note("doubling stage " + std::to_string(s) + " pair (" + std::to_string(p) +
                         "," + std::to_string(p + 1) + "): advance " + (pick_a ? "first" : "second") +
                         " (lk " + lk_str(pick_a ? qa : qb) + ")");
                next.push_back(pick_a ? A : B);
                continue;
            }
            BigInt q1, q2;
            orient_positive(ctx.proj, L, A, q1);
            orient_positive(ctx.proj, L, B, q2);
            auto merged = even_link_core(ctx, L, A, B, s - 1,
                                         ("doubling stage " + std::to_string(s)).c_str());
            BigInt q;
            orient_positive(ctx.proj, L, merged.cycle, q);
            next.push_back(merged.cycle);
        }
        keys = std::move(next);
    }
    if (keys.size() != 1) throw InternalCheckError("doubling did not end with a single cycle");
    return keys[0];
}

std::vector<std::vector<Vertex>> contiguous_blocks(const Embedding& emb, int count, int size,
                                                   bool relax, const char* what) {
    long long need = static_cast<long long>(count) * size;
    int use_size = size;
    if (emb.n() < need) {
        if (!relax)
            throw PreconditionError(std::string(what) + " requires " + std::to_string(need) +
                                    " vertices (" + std::to_string(count) + " blocks of " +
                                    std::to_string(size) + "), embedding has " +
                                    std::to_string(emb.n()));
        use_size = emb.n() / count;
        if (use_size < 6)
            throw PreconditionError(std::string(what) +
                                    ": too few vertices even for relaxed 6-vertex blocks");
    }
    std::vector<std::vector<Vertex>> blocks(count);
    for (int b = 0; b < count; ++b) {
        blocks[b].resize(use_size);
        for (int i = 0; i < use_size; ++i) blocks[b][i] = b * use_size + i;
    }
    return blocks;
}

// Star recursion over K_{m+3} blocks with the triangle + m-cycle base.
RingLink star_over_triangle_blocks(Ctx& ctx, int key_count, int m, const char* what) {
    const int block_count = to_ll(seq::alpha_prime(key_count));
    auto blocks = contiguous_blocks(ctx.emb, block_count, m + 3, ctx.opts.relax_sizes, what);
    const int block_size = static_cast<int>(blocks[0].size());
    const int use_m = std::min(m, block_size - 3);
    BaseSearcher base = [&ctx, use_m](const std::vector<Vertex>& block) {
        return find_triangle_cycle_pair(ctx, block, use_m);
    };
    return solve_star(ctx, blocks, 0, key_count, Parity::Nonzero, base);
}

LinkCertificate finish(Ctx& ctx, const std::string& theorem, std::vector<OrientedCycle> comps,
                       std::vector<bool> flips = {}) {
    return make_certificate(ctx.proj, theorem, std::move(comps), std::move(ctx.trace),
                            std::move(flips), ctx.opts.seed);
}

}  // namespace

// ---------------------------------------------------------------------------
// public engines

LinkCertificate find_nonsplit_pair(const Embedding& emb, Parity parity,
                                   const EngineOptions& opts) {
    if (emb.n() < 6) throw PreconditionError("nonsplit pair search requires at least 6 vertices");
    Ctx ctx(emb, opts);
    auto [a, b] = find_base_pair(ctx, first_vertices(emb, emb.n(), "nonsplit"), parity);
    ctx.note(std::string("nonsplit pair found (") + parity_name(parity) + " mode) after " +
             std::to_string(ctx.guard.examined) + " pairs");
    return finish(ctx, parity == Parity::Odd ? "k6-nonsplit-odd" : "k6-nonsplit", {a, b});
}

LinkCertificate find_triangle_cycle_link(const Embedding& emb, int m, const EngineOptions& opts) {
    Ctx ctx(emb, opts);
    auto pool = first_vertices(emb, m + 3, "triangle-cycle");
    auto [tri, cyc] = find_triangle_cycle_pair(ctx, pool, m);
    ctx.note("triangle + " + std::to_string(m) + "-cycle pair found after " +
             std::to_string(ctx.guard.examined) + " pairs");
    return finish(ctx, "triangle-cycle-m" + std::to_string(m), {tri, cyc});
}

LinkCertificate find_three_component_link(const Embedding& emb, const EngineOptions& opts) {
    Ctx ctx(emb, opts);
    auto pool = first_vertices(emb, 10, "three-component base");
    RingLink ring = find_three_component_in_pool(ctx, pool);
    ctx.note("three-component link found after " + std::to_string(ctx.guard.examined) +
             " triples");
    return finish(ctx, "k10-three-component", {ring.hub, ring.keys[0], ring.keys[1]});
}

LinkCertificate make_even_link(const Embedding& emb, const OrientedCycle& L,
                               const OrientedCycle& Z, const OrientedCycle& W, int r,
                               const EngineOptions& opts) {
    if (r < 0) throw PreconditionError("even link requires r >= 0");
    Ctx ctx(emb, opts);
    OrientedCycle z = Z, w = W;
    BigInt q1, q2;
    const bool fz = orient_positive(ctx.proj, L, z, q1);
    const bool fw = orient_positive(ctx.proj, L, w, q2);
    if (q1 == 0 || q2 == 0)
        throw PreconditionError("even link requires nonzero lk(L,Z) and lk(L,W)");
    if (!divisible(q1, BigInt(1) << r) || !divisible(q2, BigInt(1) << r))
        throw PreconditionError("even link requires lk values divisible by 2^r");
    if (fz || fw) ctx.note(std::string("orientation flips: Z=") + (fz ? "yes" : "no") +
                           " W=" + (fw ? "yes" : "no"));
    auto result = even_link_core(ctx, L, z, w, r, "even-link");
    return finish(ctx, "even-link-r" + std::to_string(r), {L, result.cycle});
}

LinkCertificate find_hub_link(const Embedding& emb, int n, Parity parity,
                              const EngineOptions& opts) {
    if (n < 1) throw PreconditionError("hub link requires n >= 1");
    const int need = to_ll(seq::alpha(n));
    Ctx ctx(emb, opts);
    std::vector<Vertex> pool =
        first_vertices(emb, ctx.opts.relax_sizes ? std::min(need, emb.n()) : need, "hub-link");
    RingLink ring = solve_ring(ctx, pool, n, parity);
    std::vector<OrientedCycle> comps{ring.hub};
    comps.insert(comps.end(), ring.keys.begin(), ring.keys.end());
    return finish(ctx,
                  "hub-link-n" + std::to_string(n) + (parity == Parity::Odd ? "-odd" : ""),
                  std::move(comps));
}

LinkCertificate hub_link_over_blocks(const Embedding& emb,
                                     const std::vector<std::vector<Vertex>>& blocks, int n,
                                     Parity parity, const BaseSearcher& base,
                                     const EngineOptions& opts) {
    if (n < 1) throw PreconditionError("hub link requires n >= 1");
    const int need = to_ll(seq::alpha_prime(n));
    if (static_cast<int>(blocks.size()) < need)
        throw PreconditionError("hub link over blocks needs alpha_prime(n) = " +
                                std::to_string(need) + " blocks");
    Ctx ctx(emb, opts);
    RingLink ring = solve_star(ctx, blocks, 0, n, parity, base);
    std::vector<OrientedCycle> comps{ring.hub};
    comps.insert(comps.end(), ring.keys.begin(), ring.keys.end());
    return finish(ctx,
                  "hub-link-n" + std::to_string(n) + (parity == Parity::Odd ? "-odd" : ""),
                  std::move(comps));
}

LinkCertificate iterate_doubling(const Embedding& emb, const OrientedCycle& L,
                                 const std::vector<OrientedCycle>& keys, int r,
                                 const EngineOptions& opts) {
    if (r < 1) throw PreconditionError("doubling requires r >= 1");
    Ctx ctx(emb, opts);
    if (!ctx.opts.relax_sizes) {
        const BigInt need = seq::vertex_budget(r).front();
        for (const auto& k : keys)
            if (k.size() < need)
                throw TooFewVerticesError("doubling entry: component " + k.to_string() +
                                          " smaller than budget c_1 = " + need.str());
    }
    OrientedCycle A = doubling_core(ctx, L, keys, r);
    return finish(ctx, "mod2-r" + std::to_string(r), {L, A});
}

namespace {

// Shared pipeline for Theorem-2.5-style results: hub + n*2^r keys, then one
// doubling cascade per group of 2^r. m_override enlarges the per-component
// budget (Theorem 3.1 needs bigger final components).
RingLink hub_link_mod2r_impl(Ctx& ctx, int n, int r, int m_override, const char* what) {
    RingLink raw;
    if (r == 1 && n == 1 && m_override == 0) {
        auto pool = first_vertices(ctx.emb, 10, what);
        raw = find_three_component_in_pool(ctx, pool);
        ctx.note(std::string(what) + ": K_10 base link found");
    } else {
        const int m = m_override > 0 ? m_override : static_cast<int>(to_ll(seq::gamma_effective(r)));
        raw = star_over_triangle_blocks(ctx, n * (1 << r), m, what);
    }
    RingLink out{raw.hub, {}};
    for (int g = 0; g < n; ++g) {
        std::vector<OrientedCycle> group(raw.keys.begin() + g * (1 << r),
                                         raw.keys.begin() + (g + 1) * (1 << r));
        ctx.note(std::string(what) + ": doubling group " + std::to_string(g));
        out.keys.push_back(doubling_core(ctx, raw.hub, std::move(group), r));
    }
    return out;
}

}  // namespace

LinkCertificate find_hub_link_mod2r(const Embedding& emb, int n, int r,
                                    const EngineOptions& opts) {
    if (n < 1 || r < 0) throw PreconditionError("mod2 engine requires n >= 1, r >= 0");
    if (r > 20 || static_cast<long long>(n) << r > 1'000'000)
        throw PreconditionError("mod2 engine parameters out of supported range");
    if (r == 0) {
        // 2^0 = 1 divides everything: the plain hub link already qualifies.
        LinkCertificate base = find_hub_link(emb, n, Parity::Nonzero, opts);
        base.theorem = n == 1 ? "mod2-r0" : "mod2-keys-n" + std::to_string(n) + "-r0";
        auto check = verify_certificate(emb, base);
        if (!check.ok) throw InternalCheckError(check.detail);
        return base;
    }
    Ctx ctx(emb, opts);
    RingLink link = hub_link_mod2r_impl(ctx, n, r, 0, "mod2");
    std::vector<OrientedCycle> comps{link.hub};
    comps.insert(comps.end(), link.keys.begin(), link.keys.end());
    const std::string id = n == 1 ? "mod2-r" + std::to_string(r)
                                  : "mod2-keys-n" + std::to_string(n) + "-r" + std::to_string(r);
    return finish(ctx, id, std::move(comps));
}

LinkCertificate find_pair_mod4(const Embedding& emb, const EngineOptions& opts) {
    Ctx ctx(emb, opts);
    auto pool = first_vertices(emb, 10, "mod4 search");
    auto pred = [](const BigInt& lk) { return mod_reduce(lk, 4) == 2; };
    auto [a, b] = find_pair_in_pool(ctx, pool, "mod4 exhaustive search", pred);
    ctx.note("lk == 2 mod 4 pair found after " + std::to_string(ctx.guard.examined) + " pairs");
    return finish(ctx, "mod4-k10", {a, b});
}

// ---------------------------------------------------------------------------
// mod 3 machinery

namespace detail {

namespace {

struct Pentagon {
    // lens[k] joins key k to key k+1; inner and outer close the necklace.
    std::array<OrientedCycle, 3> lens;
    OrientedCycle inner, outer;

    const OrientedCycle& cycle(int idx) const {
        if (idx < 3) return lens[idx];
        return idx == 3 ? inner : outer;
    }
};

Pentagon build_pentagon(const std::vector<OrientedCycle>& keys) {
    std::array<std::array<int, 4>, 3> pos;  // attachment positions a,b,c,d per key
    for (int k = 0; k < 3; ++k) {
        const int sz = keys[k].size();
        if (sz < 4)
            throw TooFewVerticesError("pentagon construction needs 4 vertices per component");
        for (int j = 0; j < 4; ++j) pos[k][j] = j * sz / 4;
    }
    auto arc = [&](int k, int from, int to) { return keys[k].arc(pos[k][from], pos[k][to]); };
    auto append = [](std::vector<Vertex>& out, std::vector<Vertex> part) {
        out.insert(out.end(), part.begin(), part.end());
    };

    Pentagon p;
    for (int k = 0; k < 3; ++k) {
        std::vector<Vertex> verts = arc(k, 0, 1);         // a_k .. b_k
        append(verts, arc((k + 1) % 3, 2, 3));            // c_{k+1} .. d_{k+1}
        p.lens[k] = OrientedCycle(std::move(verts));
    }
    {
        std::vector<Vertex> verts = arc(0, 1, 2);  // b_0 .. c_0
        append(verts, arc(2, 1, 2));
        append(verts, arc(1, 1, 2));
        p.inner = OrientedCycle(std::move(verts));
    }
    {
        std::vector<Vertex> verts = arc(0, 3, 0);  // d_0 .. a_0 (wrap arc)
        append(verts, arc(1, 3, 0));
        append(verts, arc(2, 3, 0));
        p.outer = OrientedCycle(std::move(verts));
    }

    OrientedChain sum;
    for (int i = 0; i < 3; ++i) sum += chain_of(p.lens[i]);
    sum += chain_of(p.inner);
    sum += chain_of(p.outer);
    for (const auto& z : keys) sum += chain_of(z.reversed());
    if (!sum.is_zero())
        throw InternalCheckError("pentagon chain identity failed: sum A_i != sum Z_i");
    return p;
}

}  // namespace

Mod3Plan mod3_branch_plan(const std::array<long long, 5>& w) {
    const long long total = w[0] + w[1] + w[2] + w[3] + w[4];
    if (total == 0 || mod_reduce(BigInt(total), 3) != 0)
        throw PreconditionError("mod3_branch_plan needs a nonzero total that is 0 mod 3");
    auto zero_mod = [](long long v) { return v % 3 == 0; };

    // Hub cells first: their complements fuse to a single cycle.
    for (int i : {3, 4}) {
        if (!zero_mod(w[i])) continue;
        if (w[i] != 0) return {"hub cell " + std::to_string(i), {i}};
        if (i == 3) return {"complement of inner", {0, 1, 2, 4}};
        return {"complement of outer", {0, 1, 2, 3}};
    }
    // A lens cell at 0 mod 3: take it, or select within the remaining 4-ring.
    for (int k = 0; k < 3; ++k) {
        if (!zero_mod(w[k])) continue;
        if (w[k] != 0) return {"lens " + std::to_string(k), {k}};
        const std::array<int, 4> ring{3, (k + 1) % 3, 4, (k + 2) % 3};
        std::vector<long long> values;
        for (int idx : ring) values.push_back(w[idx]);
        BlockSelection sel = zero_block_select(values, 3);
        Mod3Plan plan{"4-ring selection after zero lens " + std::to_string(k), {}};
        for (int s = 0; s < sel.selected.length; ++s)
            plan.fuse.push_back(ring[(sel.selected.first + s) % 4]);
        return plan;
    }
    // All five nonzero mod 3: two lens classes agree; walk inner, lens, outer.
    int l = -1;
    for (int k = 0; k < 3; ++k)
        if (mod_reduce(BigInt(w[k]), 3) == mod_reduce(BigInt(w[(k + 1) % 3]), 3)) {
            l = k;
            break;
        }
    if (l < 0) throw InternalCheckError("mod3: no equal lens pair despite nonzero residues");
    const int l1 = (l + 1) % 3, l2 = (l + 2) % 3;
    const long long S1 = w[3];
    const long long S2 = S1 + w[l];
    const long long S3 = S2 + w[4];
    if (mod_reduce(BigInt(S1), 3) == mod_reduce(BigInt(S3), 3)) {
        if (w[l] + w[4] != 0) return {"S1==S3 difference", {l, 4}};
        return {"S1==S3 complement", {l1, l2, 3}};
    }
    if (zero_mod(S2)) {
        if (S2 != 0) return {"S2==0 mod 3", {3, l}};
        return {"S2==0 complement", {l1, l2, 4}};
    }
    if (zero_mod(S3)) {
        if (S3 != 0) return {"S3==0 mod 3", {3, l, 4}};
        // S3 == 0 integrally: then w[l2] + w[outer] == 0 mod 3.
        if (!zero_mod(w[l2] + w[4]))
            throw InternalCheckError("mod3 hard case: derived congruence failed");
        if (w[l2] + w[4] != 0) return {"hard case pair", {l2, 4}};
        return {"hard case complement", {l, l1, 3}};
    }
    throw InternalCheckError("mod3: S-chain pigeonhole failed");
}

OrientedCycle mod3_select(const Projector& proj, const OrientedCycle& L,
                          std::vector<OrientedCycle> keys, std::vector<std::string>& trace) {
    if (keys.size() != 3) throw PreconditionError("mod3_select needs exactly 3 keys");
    std::array<BigInt, 3> q;
    for (int i = 0; i < 3; ++i) {
        if (orient_positive(proj, L, keys[i], q[i]))
            trace.push_back("mod3: flipped key " + std::to_string(i));
        if (q[i] == 0) throw PreconditionError("mod3_select needs nonzero hub linking");
    }

    for (int i = 0; i < 3; ++i)
        if (divisible(q[i], 3)) {
            trace.push_back("mod3: q_" + std::to_string(i) + " = " + q[i].str() +
                            " already 0 mod 3");
            return keys[i];
        }

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j || mod_reduce(q[i], 3) != 1 || mod_reduce(q[j], 3) != 2) continue;
            trace.push_back("mod3: residues 1,2 at keys " + std::to_string(i) + "," +
                            std::to_string(j) + "; 4-bridge block selection");
            PathSystem ps = choose_path_system(keys[i], keys[j], 4);
            BridgeFamily family = build_bridge_family(proj, L, keys[i], keys[j], ps);
            std::vector<long long> values;
            for (const auto& v : family.classes) values.push_back(to_ll(v));
            BlockSelection sel = zero_block_select(values, 3);
            OrientedCycle A = fuse_family_range(family, sel.selected);
            const BigInt got = proj.lk(L, A);
            if (got == 0 || !divisible(got, 3))
                throw InternalCheckError("mod3 bridge selection produced lk " + got.str());
            return A;
        }

    // All residues equal: the five-cycle configuration over all three keys.
    trace.push_back("mod3: all residues equal (" + mod_reduce(q[0], 3).str() +
                    "); pentagon casework");
    Pentagon p = build_pentagon(keys);
    std::array<long long, 5> w;
    for (int i = 0; i < 5; ++i) w[i] = to_ll(proj.lk(p.cycle(i), L));
    {
        const BigInt total = BigInt(w[0]) + w[1] + w[2] + w[3] + w[4];
        if (total != q[0] + q[1] + q[2])
            throw InternalCheckError("pentagon classes do not sum to q1+q2+q3");
    }
    std::string ws;
    for (int i = 0; i < 5; ++i) ws += (i ? "," : "") + std::to_string(w[i]);
    trace.push_back("mod3: pentagon classes [" + ws + "]");

    Mod3Plan plan = mod3_branch_plan(w);
    std::vector<OrientedCycle> parts;
    for (int idx : plan.fuse) parts.push_back(p.cycle(idx));
    OrientedCycle A = parts.size() == 1 ? parts[0] : fuse_cycles(parts);
    const BigInt got = proj.lk(L, A);
    if (got == 0 || !divisible(got, 3))
        throw InternalCheckError("mod3 branch '" + plan.branch + "' produced lk " + got.str());
    trace.push_back("mod3: branch " + plan.branch + " lk=" + got.str());
    return A;
}

}  // namespace detail

LinkCertificate find_pair_mod3(const Embedding& emb, const EngineOptions& opts) {
    return find_hub_link_mod3(emb, 1, opts);
}

LinkCertificate find_hub_link_mod3(const Embedding& emb, int n, const EngineOptions& opts) {
    if (n < 1) throw PreconditionError("mod3 engine requires n >= 1");
    Ctx ctx(emb, opts);
    RingLink raw = star_over_triangle_blocks(ctx, 3 * n, 4, "mod3");
    std::vector<OrientedCycle> comps{raw.hub};
    for (int g = 0; g < n; ++g) {
        std::vector<OrientedCycle> group(raw.keys.begin() + 3 * g, raw.keys.begin() + 3 * g + 3);
        ctx.note("mod3: group " + std::to_string(g));
        comps.push_back(detail::mod3_select(ctx.proj, raw.hub, std::move(group), ctx.trace));
    }
    return finish(ctx, n == 1 ? "mod3" : "mod3-keys-n" + std::to_string(n), std::move(comps));
}

// ---------------------------------------------------------------------------
// Theorem 3.1 / 3.2 machinery

namespace detail {

OrientedCycle three_component_finish(const Projector& proj, const OrientedCycle& L,
                                     const OrientedCycle& W, OrientedCycle Z1, OrientedCycle Z2,
                                     int r, std::vector<std::string>& trace) {
    if (r < 1) throw PreconditionError("three_component_finish requires r >= 1");
    BigInt q1, q2;
    if (orient_positive(proj, L, Z1, q1)) trace.push_back("three-mod2: flipped Z1");
    if (orient_positive(proj, L, Z2, q2)) trace.push_back("three-mod2: flipped Z2");
    const BigInt mod = BigInt(1) << r;
    if (q1 == 0 || q2 == 0 || !divisible(q1, mod) || !divisible(q2, mod))
        throw PreconditionError("three_component_finish needs nonzero multiples of 2^r");

    for (int i = 0; i < 2; ++i) {
        const OrientedCycle& Z = i == 0 ? Z1 : Z2;
        if (proj.lk(Z, W) % 2 == 0) {
            trace.push_back("three-mod2: lk(Z_" + std::to_string(i + 1) +
                            ", W) already even; done");
            return Z;
        }
    }

    const int t = static_cast<int>(to_ll((mod + 1) * (mod + 1)));
    if (Z1.size() < t || Z2.size() < t)
        throw TooFewVerticesError("three-mod2 finish: components need (2^r+1)^2 = " +
                                  std::to_string(t) + " vertices");
    PathSystem ps = choose_path_system(Z1, Z2, t);
    BridgeFamily family = build_bridge_family(proj, L, Z1, Z2, ps);
    std::vector<long long> values_L;
    for (const auto& v : family.classes) values_L.push_back(to_ll(v));
    auto ranges = three_range_split(values_L, to_ll(mod));

    std::array<OrientedCycle, 3> parts{fuse_family_range(family, ranges[0]),
                                       fuse_family_range(family, ranges[1]),
                                       fuse_family_range(family, ranges[2])};
    std::string sums;
    for (int i = 0; i < 3; ++i) {
        const BigInt li = proj.lk(parts[i], L);
        if (!divisible(li, mod))
            throw InternalCheckError("three-mod2: fused range not 0 mod 2^r against L");
        sums += (i ? "," : "") + li.str();
    }
    trace.push_back("three-mod2: grouped " + std::to_string(t) + " bridge cycles into 3 ranges, L-classes [" +
                    sums + "]");

    std::array<BigInt, 3> wclass;
    BigInt wtotal = 0;
    for (int i = 0; i < 3; ++i) {
        wclass[i] = proj.lk(parts[i], W);
        wtotal += wclass[i];
    }
    if (wtotal % 2 != 0) throw InternalCheckError("three-mod2: W-classes have odd total");
    int pick = -1;
    for (int i = 0; i < 3; ++i)
        if (wclass[i] % 2 == 0) {
            pick = i;
            break;
        }
    if (pick < 0) throw InternalCheckError("three-mod2: no even W-class among three");

    const OrientedCycle& A = parts[pick];
    if (proj.lk(A, L) != 0) {
        trace.push_back("three-mod2: range " + std::to_string(pick) + " even against W, nonzero against L");
        return A;
    }
    // Complement of the chosen range: the other two ranges are consecutive.
    OrientedCycle Ap = fuse_family_range(family, complement_range(ranges[pick], t));
    trace.push_back("three-mod2: chosen range vanished against L; taking its complement");
    if (proj.lk(Ap, W) % 2 != 0 || proj.lk(Ap, L) == 0 || !divisible(proj.lk(Ap, L), mod))
        throw InternalCheckError("three-mod2: complement dichotomy failed");
    return Ap;
}

OrientedCycle all_even_merge(const Projector& proj, const OrientedCycle& L,
                             const std::vector<OrientedCycle>& stack, const OrientedCycle& target,
                             OrientedCycle Y1, OrientedCycle Y2, std::vector<std::string>& trace) {
    const int k = static_cast<int>(stack.size()) + 2;
    const int t = 3 * (1 << (k - 1));
    BigInt q1, q2;
    orient_positive(proj, L, Y1, q1);
    orient_positive(proj, L, Y2, q2);
    if (q1 <= 0 || q2 <= 0 || q1 % 2 != 0 || q2 % 2 != 0)
        throw PreconditionError("all_even_merge needs positive even linking against L");
    if (proj.lk(Y1, target) % 2 == 0 || proj.lk(Y2, target) % 2 == 0)
        throw PreconditionError("all_even_merge expects both members odd against the target");
    if (Y1.size() < t || Y2.size() < t)
        throw TooFewVerticesError("all_even_merge: members need " + std::to_string(t) +
                                  " vertices at step " + std::to_string(k));

    PathSystem ps = choose_path_system(Y1, Y2, t);
    BridgeFamily family = build_bridge_family(proj, L, Y1, Y2, ps);

    std::vector<CyclicRange> ranges(t);
    for (int i = 0; i < t; ++i) ranges[i] = {i, 1};

    auto class_sum = [&](const CyclicRange& range, const OrientedCycle& X) {
        OrientedCycle fused = fuse_family_range(family, range);
        return proj.lk(fused, X);
    };

    std::vector<const OrientedCycle*> reductions{&L};
    for (const auto& v : stack) reductions.push_back(&v);
    for (const auto* X : reductions) {
        std::vector<long long> vals;
        for (const auto& rg : ranges) vals.push_back(to_ll(class_sum(rg, *X)));
        BlockDecomposition dec = max_block_decompose(vals, 2);
        std::vector<CyclicRange> merged;
        const int cur = static_cast<int>(ranges.size());
        for (const auto& block : dec.blocks) {
            int len = 0;
            for (int s = 0; s < block.length; ++s) len += ranges[(block.first + s) % cur].length;
            merged.push_back({ranges[block.first % cur].first, len});
        }
        ranges = std::move(merged);
        trace.push_back("all-even merge step " + std::to_string(k) + ": fused to " +
                        std::to_string(ranges.size()) + " cycles, all even against one level");
    }
    if (ranges.size() < 3)
        throw InternalCheckError("all_even_merge: fewer than 3 cycles before the final selection");

    std::vector<long long> vals;
    for (const auto& rg : ranges) vals.push_back(to_ll(class_sum(rg, target)));
    CyclicRange sel = select_zero_subsequence_mod2(vals);

    auto fuse_runs = [&](int first, int len) {
        int start = ranges[first % ranges.size()].first;
        int total = 0;
        for (int s = 0; s < len; ++s) total += ranges[(first + s) % ranges.size()].length;
        return fuse_family_range(family, {start, total});
    };
    OrientedCycle W1 = fuse_runs(sel.first, sel.length);
    OrientedCycle W2 = fuse_runs((sel.first + sel.length) % static_cast<int>(ranges.size()),
                                 static_cast<int>(ranges.size()) - sel.length);

    for (OrientedCycle* cand : {&W1, &W2}) {
        if (proj.lk(*cand, target) % 2 != 0)
            throw InternalCheckError("all_even_merge: candidate odd against target");
        for (const auto* X : reductions)
            if (proj.lk(*cand, *X) % 2 != 0)
                throw InternalCheckError("all_even_merge: candidate odd against a level");
    }
    OrientedCycle out = proj.lk(W1, L) != 0 ? W1 : W2;
    if (proj.lk(out, L) == 0)
        throw InternalCheckError("all_even_merge: both candidates vanish against L");
    BigInt q;
    orient_positive(proj, L, out, q);
    trace.push_back("all-even merge step " + std::to_string(k) + ": selected cycle with lk " +
                    q.str() + " against L");
    return out;
}

}  // namespace detail

LinkCertificate find_three_component_mod2r(const Embedding& emb, int r,
                                           const EngineOptions& opts) {
    if (r < 1) throw PreconditionError("three-component mod engine requires r >= 1");
    Ctx ctx(emb, opts);
    const BigInt scale = (BigInt(1) << (2 * r - 1)) + (BigInt(1) << r);
    const int m = static_cast<int>(to_ll(scale * seq::gamma_effective(r)));
    RingLink link = hub_link_mod2r_impl(ctx, 3, r, m, "three-mod2");
    const OrientedCycle& L = link.hub;
    const OrientedCycle& W = link.keys[0];
    OrientedCycle A = detail::three_component_finish(ctx.proj, L, W, link.keys[1], link.keys[2],
                                                     r, ctx.trace);
    return finish(ctx, "three-mod2-r" + std::to_string(r), {L, W, A});
}

LinkCertificate find_all_even_link(const Embedding& emb, int n, const EngineOptions& opts) {
    if (n < 1) throw PreconditionError("all-even engine requires n >= 1");
    if (n == 1) {
        Ctx ctx(emb, opts);
        RingLink link = hub_link_mod2r_impl(ctx, 1, 1, 0, "all-even");
        return finish(ctx, "all-even-n1", {link.hub, link.keys[0]});
    }
    if (n == 2) {
        LinkCertificate base = find_three_component_mod2r(emb, 1, opts);
        base.theorem = "all-even-n2";
        auto check = verify_certificate(emb, base);
        if (!check.ok) throw InternalCheckError(check.detail);
        return base;
    }

    Ctx ctx(emb, opts);
    const int key_count = (1 << (n + 1)) - 2;
    const int m = static_cast<int>(to_ll(seq::gamma_prime(n)));
    RingLink raw = star_over_triangle_blocks(ctx, key_count, m, "all-even");
    for (auto& key : raw.keys) {
        BigInt q;
        orient_positive(ctx.proj, raw.hub, key, q);
    }

    std::vector<OrientedCycle> V;
    int consumed = 0;
    for (int j = 1; j <= n; ++j) {
        std::vector<OrientedCycle> group(raw.keys.begin() + consumed,
                                         raw.keys.begin() + consumed + (1 << j));
        consumed += 1 << j;
        ctx.note("all-even: group " + std::to_string(j) + " with " + std::to_string(group.size()) +
                 " cycles");
        for (int round = 1; round <= j; ++round) {
            const OrientedCycle& target = round == 1 ? raw.hub : V[round - 2];
            std::vector<OrientedCycle> next;
            for (size_t p = 0; p + 1 < group.size(); p += 2) {
                OrientedCycle& A = group[p];
                OrientedCycle& B = group[p + 1];
                const BigInt la = ctx.proj.lk(A, target), lb = ctx.proj.lk(B, target);
                const bool a_ok = la % 2 == 0, b_ok = lb % 2 == 0;
                if (a_ok || b_ok) {
                    const bool pick_a = a_ok && (!b_ok || A.size() >= B.size());
                    ctx.note("all-even: group " + std::to_string(j) + " round " +
                             std::to_string(round) + ": advance member");
                    next.push_back(pick_a ? A : B);
                    continue;
                }
                if (round == 1) {
                    BigInt qa, qb;
                    orient_positive(ctx.proj, raw.hub, A, qa);
                    orient_positive(ctx.proj, raw.hub, B, qb);
                    auto merged = even_link_core(ctx, raw.hub, A, B, 0, "all-even round 1");
                    BigInt q;
                    orient_positive(ctx.proj, raw.hub, merged.cycle, q);
                    next.push_back(merged.cycle);
                } else {
                    std::vector<OrientedCycle> stack(V.begin(), V.begin() + (round - 2));
                    next.push_back(detail::all_even_merge(ctx.proj, raw.hub, stack, target, A, B,
                                                          ctx.trace));
                }
            }
            group = std::move(next);
        }
        if (group.size() != 1)
            throw InternalCheckError("all-even: group did not reduce to a single cycle");
        V.push_back(group[0]);
    }
    std::vector<OrientedCycle> comps{raw.hub};
    comps.insert(comps.end(), V.begin(), V.end());
    return finish(ctx, "all-even-n" + std::to_string(n), std::move(comps));
}

// ---------------------------------------------------------------------------
// dispatch

LinkCertificate construct_by_id(const Embedding& emb, const std::string& theorem_id,
                                const EngineOptions& opts) {
    TheoremSpec spec = parse_theorem_id(theorem_id);
    const std::string& b = spec.base;
    if (b == "k6-nonsplit")
        return find_nonsplit_pair(emb, spec.odd ? Parity::Odd : Parity::Nonzero, opts);
    if (b == "triangle-cycle") {
        if (spec.m < 3) throw PreconditionError("triangle-cycle id needs -m<length>");
        return find_triangle_cycle_link(emb, spec.m, opts);
    }
    if (b == "k10-three-component") return find_three_component_link(emb, opts);
    if (b == "hub-link") {
        if (spec.n < 1) throw PreconditionError("hub-link id needs -n<count>");
        return find_hub_link(emb, spec.n, spec.odd ? Parity::Odd : Parity::Nonzero, opts);
    }
    if (b == "mod2") return find_hub_link_mod2r(emb, 1, spec.r < 0 ? 1 : spec.r, opts);
    if (b == "mod2-keys") {
        if (spec.n < 1 || spec.r < 0)
            throw PreconditionError("mod2-keys id needs -n<count> and -r<power>");
        return find_hub_link_mod2r(emb, spec.n, spec.r, opts);
    }
    if (b == "mod4-k10") return find_pair_mod4(emb, opts);
    if (b == "three-mod2") return find_three_component_mod2r(emb, spec.r < 1 ? 1 : spec.r, opts);
    if (b == "all-even") return find_all_even_link(emb, spec.n < 1 ? 1 : spec.n, opts);
    if (b == "mod3") return find_pair_mod3(emb, opts);
    if (b == "mod3-keys") {
        if (spec.n < 1) throw PreconditionError("mod3-keys id needs -n<count>");
        return find_hub_link_mod3(emb, spec.n, opts);
    }
    throw PreconditionError("unknown theorem id: " + theorem_id);
}

int required_vertices(const std::string& theorem_id) {
    TheoremSpec spec = parse_theorem_id(theorem_id);
    const std::string& b = spec.base;
    auto blocks_of = [](const BigInt& count, const BigInt& size) {
        return static_cast<int>(to_ll(count * size));
    };
    if (b == "k6-nonsplit") return 6;
    if (b == "triangle-cycle") return spec.m < 3 ? 6 : spec.m + 3;
    if (b == "k10-three-component" || b == "mod4-k10") return 10;
    if (b == "hub-link") return static_cast<int>(to_ll(seq::alpha(std::max(1, spec.n))));
    if (b == "mod2" || b == "mod2-keys") {
        const int n = std::max(1, spec.n);
        const int r = std::max(0, spec.r < 0 && b == "mod2" ? 1 : spec.r);
        if (r == 0) return static_cast<int>(to_ll(seq::alpha(n)));
        if (r == 1 && n == 1) return 10;
        return blocks_of(seq::alpha_prime(n * (1 << r)), seq::gamma_effective(r) + 3);
    }
    if (b == "three-mod2") {
        const int r = std::max(1, spec.r);
        const BigInt scale = (BigInt(1) << (2 * r - 1)) + (BigInt(1) << r);
        return blocks_of(seq::alpha_prime(3 * (1 << r)), scale * seq::gamma_effective(r) + 3);
    }
    if (b == "all-even") {
        const int n = std::max(1, spec.n);
        if (n == 1) return 10;
        if (n == 2) return required_vertices("three-mod2-r1");
        return blocks_of(seq::alpha_prime((1 << (n + 1)) - 2), seq::gamma_prime(n) + 3);
    }
    if (b == "mod3") return 35;
    if (b == "mod3-keys")
        return blocks_of(seq::alpha_prime(3 * std::max(1, spec.n)), 7);
    throw PreconditionError("unknown theorem id: " + theorem_id);
}

}  // namespace linkcert
