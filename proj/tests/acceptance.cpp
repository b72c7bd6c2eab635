// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <set>

#include "fixtures.hpp"
#include "linkcert/enumerate.hpp"
#include "linkcert/harness.hpp"

using namespace linkcert;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail, double secs) {
    std::printf("criterion %2d: %s  %s  (%.1fs)\n", criterion, ok ? "PASS" : "FAIL",
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

struct Timer {
    Clock::time_point t0 = Clock::now();
    double secs() const { return std::chrono::duration<double>(Clock::now() - t0).count(); }
};

// --- criterion 1: 100 K_6 embeddings, odd pair among triangles only --------
void criterion1() {
    Timer timer;
    int hits = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Embedding emb = random_embedding(6, trial_seed(1001, trial));
        EngineOptions opts;
        opts.budget.max_component_size = 3;
        auto cert = find_nonsplit_pair(emb, Parity::Odd, opts);
        if (cert.linking_matrix[0][1] % 2 != 0 && verify_certificate(emb, cert).ok) ++hits;
    }
    const double secs = timer.secs();
    report(1, hits == 100 && secs < 10.0,
           "conway-gordon triangles: " + std::to_string(hits) + "/100", secs);
}

// --- criterion 2: kernel vs gauss, direction invariance, antisymmetry ------
void criterion2() {
    Timer timer;
    bool ok = true;
    std::string detail;

    const Embedding hopf = fixtures::hopf_embedding();
    const auto A = fixtures::hopf_a(), B = fixtures::hopf_b();
    ok &= linking_number(hopf, A, B) == -1;
    ok &= std::abs(gauss_estimate(hopf, A, B) + 1.0) < 1e-6;
    if (!ok) detail = "hopf fixture mismatch; ";

    int checked = 0, agree = 0, invariant = 0, antisym = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const Embedding emb = random_embedding(10, trial_seed(2002, trial));
        Projector proj(emb);
        std::vector<ProjectionDirection> dirs;
        {
            std::vector<Vertex> verts(10);
            for (int i = 0; i < 10; ++i) verts[i] = i;
            const EdgeList edges = all_edges(10);
            std::set<std::pair<std::string, std::string>> seen;
            for (int attempt = 0; attempt < 400 && dirs.size() < 5; ++attempt) {
                auto dir = direction_candidate(17, attempt);
                if (!seen.insert({dir.a.str(), dir.b.str()}).second) continue;
                if (check_direction(ProjectedView(emb, dir), verts, edges, true).ok)
                    dirs.push_back(dir);
            }
        }
        std::vector<Projector> projs;
        for (const auto& dir : dirs) projs.emplace_back(emb, dir);

        std::uint64_t state = trial * 0x9e3779b97f4a7c15ULL + 7;
        auto rnd = [&state] {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int pair = 0; pair < 20; ++pair) {
            std::vector<Vertex> perm(10);
            for (int i = 0; i < 10; ++i) perm[i] = i;
            for (int i = 9; i > 0; --i) std::swap(perm[i], perm[rnd() % (i + 1)]);
            const int sa = 3 + static_cast<int>(rnd() % 3);
            const int sb = 3 + static_cast<int>(rnd() % std::min<std::uint64_t>(3, 10 - sa - 2));
            OrientedCycle X(std::vector<Vertex>(perm.begin(), perm.begin() + sa));
            OrientedCycle Y(std::vector<Vertex>(perm.begin() + sa, perm.begin() + sa + sb));
            ++checked;
            const BigInt lk = proj.lk(X, Y);
            const double gauss = gauss_estimate(emb, X, Y);
            if (std::abs(gauss - static_cast<double>(lk.convert_to<long long>())) < 1e-6)
                ++agree;
            bool inv = projs.size() == 5;
            for (const auto& p : projs) inv = inv && p.lk(X, Y) == lk;
            if (inv) ++invariant;
            if (proj.lk(X.reversed(), Y) == -lk && proj.lk(X, Y.reversed()) == -lk &&
                proj.lk(Y, X) == lk)
                ++antisym;
        }
    }
    ok = ok && checked == 200 && agree == 200 && invariant == 200 && antisym == 200;
    report(2, ok,
           "gauss agreement " + std::to_string(agree) + "/200, invariance " +
               std::to_string(invariant) + "/200, antisymmetry " + std::to_string(antisym) +
               "/200" + (detail.empty() ? "" : "; " + detail),
           timer.secs());
}

// --- criterion 3: selector vs brute-force oracles, exhaustive --------------
struct SelectorCounts {
    long long block_checked = 0, block_bad = 0;
    long long mod2_checked = 0, mod2_bad = 0;

    SelectorCounts& operator+=(const SelectorCounts& o) {
        block_checked += o.block_checked;
        block_bad += o.block_bad;
        mod2_checked += o.mod2_checked;
        mod2_bad += o.mod2_bad;
        return *this;
    }
};

SelectorCounts selector_chunk(int len, long long v0) {
    SelectorCounts counts;
    std::vector<long long> v(len, -5);
    v[0] = v0;
    long long total = v0 - 5LL * (len - 1);
    auto mod_pos = [](long long x, long long m) {
        long long r = x % m;
        return r < 0 ? r + m : r;
    };
    while (true) {
        for (long long m : {2LL, 3LL, 4LL}) {
            if (len < m + 1 || total == 0 || mod_pos(total, m) != 0) continue;
            ++counts.block_checked;
            auto sel = zero_block_select(v, m);
            const long long sum = range_sum(v, sel.selected);
            if (sel.selected.length < 1 || sel.selected.length > len - 1 || sum == 0 ||
                mod_pos(sum, m) != 0 || sum != sel.block_sum)
                ++counts.block_bad;
        }
        if (len >= 3 && mod_pos(total, 2) == 0) {
            ++counts.mod2_checked;
            auto run = select_zero_subsequence_mod2(v);
            // Oracle: first proper even run in scan order.
            int of = -1, ol = -1;
            for (int s = 0; s < len && of < 0; ++s) {
                long long acc = 0;
                for (int e = s; e < len; ++e) {
                    acc += v[e];
                    if (s == 0 && e == len - 1) break;
                    if (acc % 2 == 0) {
                        of = s;
                        ol = e - s + 1;
                        break;
                    }
                }
            }
            if (run.first != of || run.length != ol) ++counts.mod2_bad;
        }
        int i = len - 1;
        while (i >= 1 && v[i] == 5) {
            total -= 10;
            v[i--] = -5;
        }
        if (i < 1) break;
        ++v[i];
        ++total;
    }
    return counts;
}

void criterion3() {
    Timer timer;
    std::vector<std::future<SelectorCounts>> tasks;
    for (int len = 1; len <= 8; ++len)
        for (long long v0 = -5; v0 <= 5; ++v0)
            tasks.push_back(std::async(std::launch::async, selector_chunk, len, v0));
    SelectorCounts total;
    for (auto& t : tasks) total += t.get();
    const double secs = timer.secs();
    const bool ok = total.block_bad == 0 && total.mod2_bad == 0 && secs < 60.0 &&
                    total.block_checked > 100'000'000 && total.mod2_checked > 100'000'000;
    report(3, ok,
           "zero_block " + std::to_string(total.block_checked) + " checked (" +
               std::to_string(total.block_bad) + " bad), mod2 " +
               std::to_string(total.mod2_checked) + " checked (" +
               std::to_string(total.mod2_bad) + " bad)",
           secs);
}

// --- criterion 4: K_10 base + even link, exact bookkeeping -----------------
void criterion4() {
    Timer timer;
    int good = 0;
    for (int trial = 0; trial < 25; ++trial) {
        Embedding emb = random_embedding(10, trial_seed(4004, trial));
        auto base = find_three_component_link(emb);
        auto cert = make_even_link(emb, base.components[0], base.components[1],
                                   base.components[2], 0);
        const long long lk = cert.linking_matrix[0][1];
        bool ok = lk != 0 && lk % 2 == 0 && verify_certificate(emb, cert).ok;

        Projector proj(emb);
        OrientedCycle Z = base.components[1], W = base.components[2];
        BigInt q1 = proj.lk(base.components[0], Z);
        BigInt q2 = proj.lk(base.components[0], W);
        if (q1 < 0) Z = Z.reversed(), q1 = -q1;
        if (q2 < 0) W = W.reversed(), q2 = -q2;
        auto family =
            build_bridge_family(proj, base.components[0], Z, W, choose_path_system(Z, W, 3));
        BigInt class_sum = 0;
        for (const auto& c : family.classes) class_sum += c;
        ok = ok && class_sum == q1 + q2;
        if (ok) ++good;
    }
    report(4, good == 25, "K_10 base + even link with exact class sums: " +
                              std::to_string(good) + "/25", timer.secs());
}

// --- criterion 5: K_90 doubling to 0 mod 4 ---------------------------------
void criterion5() {
    Timer timer;
    int good = 0;
    for (int trial = 0; trial < 5; ++trial) {
        Embedding emb = random_embedding(90, trial_seed(5005, trial));
        auto cert = find_hub_link_mod2r(emb, 1, 2);
        const long long lk = cert.linking_matrix[0][1];
        if (lk != 0 && lk % 4 == 0 && verify_certificate(emb, cert).ok) ++good;
    }
    report(5, good == 5, "K_90 doubling, lk = 4k != 0: " + std::to_string(good) + "/5",
           timer.secs());
}

// --- criterion 6: K_35 mod 3 ------------------------------------------------
void criterion6() {
    Timer timer;
    int good = 0;
    for (int trial = 0; trial < 5; ++trial) {
        Embedding emb = random_embedding(35, trial_seed(6006, trial));
        auto cert = find_pair_mod3(emb);
        const long long lk = cert.linking_matrix[0][1];
        if (lk != 0 && lk % 3 == 0 && verify_certificate(emb, cert).ok) ++good;
    }
    report(6, good == 5, "K_35 mod-3 pair: " + std::to_string(good) + "/5", timer.secs());
}

// --- criterion 7: K_10 exhaustive lk == 2 mod 4 -----------------------------
void criterion7() {
    Timer timer;
    int good = 0;
    double worst = 0;
    for (int trial = 0; trial < 10; ++trial) {
        Timer one;
        Embedding emb = random_embedding(10, trial_seed(7007, trial));
        auto cert = find_pair_mod4(emb);
        long long v = cert.linking_matrix[0][1] % 4;
        if (v < 0) v += 4;
        if (v == 2 && verify_certificate(emb, cert).ok) ++good;
        worst = std::max(worst, one.secs());
    }
    report(7, good == 10 && worst < 300.0,
           "K_10 mod-4 pairs: " + std::to_string(good) + "/10, slowest trial " +
               std::to_string(worst).substr(0, 5) + "s",
           timer.secs());
}

// --- criterion 8: sequence tables -------------------------------------------
void criterion8() {
    Timer timer;
    using namespace seq;
    bool ok = alpha(1) == 6 && alpha(2) == 10 && alpha(3) == 26 && alpha(4) == 52 &&
              alpha(5) == 110;
    ok = ok && alpha_prime(1) == 1 && alpha_prime(3) == 5 && alpha_prime(5) == 21;
    ok = ok && beta(0) == 6 && beta(1) == 10;
    ok = ok && gamma(2) == 6 && gamma(3) == 30 && gamma(4) == 270;
    ok = ok && vertex_budget(3).front() == 27 && vertex_budget(4).front() == 261;
    report(8, ok, "alpha/alpha'/beta/gamma and budgets c_1(r=3)=27, c_1(r=4)=261", timer.secs());
}

// --- criterion 9: 500-certificate re-verification fuzz ----------------------
void criterion9() {
    Timer timer;
    struct Job {
        const char* theorem;
        int trials;
        int n;  // 0 = engine requirement
    };
    const Job jobs[] = {
        {"k6-nonsplit-odd", 80, 0},   {"k6-nonsplit", 60, 8},
        {"triangle-cycle-m3", 40, 0}, {"triangle-cycle-m4", 40, 0},
        {"triangle-cycle-m5", 20, 0}, {"triangle-cycle-m6", 20, 0},
        {"k10-three-component", 60, 0}, {"hub-link-n1-odd", 25, 0},
        {"hub-link-n2", 30, 0},       {"hub-link-n3", 5, 0},
        {"mod2-r1", 50, 0},           {"mod2-r2", 3, 0},
        {"mod2-keys-n2-r1", 4, 0},    {"mod4-k10", 20, 0},
        {"mod3", 20, 0},              {"mod3-keys-n2", 3, 0},
        {"all-even-n1", 20, 0},
    };
    int total = 0, verified = 0;
    std::string first_bad;
    for (const auto& job : jobs) {
        CampaignSpec spec;
        spec.theorem = job.theorem;
        spec.trials = job.trials;
        spec.n = job.n;
        spec.seed = 9009;
        auto rep = run_campaign(spec);  // re-verifies every certificate internally
        total += job.trials;
        verified += rep.certificates;
        if (rep.certificates != job.trials && first_bad.empty())
            first_bad = std::string(job.theorem) + ": " + rep.trials[0].detail;
    }
    report(9, verified == total && total >= 500,
           std::to_string(verified) + "/" + std::to_string(total) +
               " certificates re-verified" + (first_bad.empty() ? "" : "; first issue: " + first_bad),
           timer.secs());
}

// --- criterion 10: K_26 hub link with n = 3 ---------------------------------
void criterion10() {
    Timer timer;
    int good = 0;
    for (int trial = 0; trial < 3; ++trial) {
        Embedding emb = random_embedding(26, trial_seed(1010, trial));
        auto cert = find_hub_link(emb, 3, Parity::Nonzero);
        bool ok = cert.components.size() == 4 && verify_certificate(emb, cert).ok;
        for (int i = 1; i <= 3; ++i) ok = ok && cert.linking_matrix[0][i] != 0;
        if (ok) ++good;
    }
    report(10, good == 3, "K_26 four-component hub links: " + std::to_string(good) + "/3",
           timer.secs());
}

}  // namespace

int main() {
    Timer total;
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("acceptance: %s (%.1fs total)\n", failures == 0 ? "ALL PASS" : "FAILURES",
                total.secs());
    return failures == 0 ? 0 : 1;
}
