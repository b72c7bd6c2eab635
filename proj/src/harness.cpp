#include "linkcert/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "linkcert/errors.hpp"

namespace linkcert {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class SeededStream {
  public:
    explicit SeededStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Uniform in [0, bound) without modulo bias beyond 2^-64 scale; bound is
    // far below 2^64 in practice.
    BigInt below(const BigInt& bound) {
        // Draw enough 64-bit words to cover the bound.
        BigInt acc = 0;
        BigInt span = 1;
        while (span < bound * bound) {  // extra head-room keeps the bias negligible
            acc = (acc << 64) | BigInt(next());
            span <<= 64;
        }
        return acc % bound;
    }

  private:
    std::uint64_t state_;
};

}  // namespace

std::uint64_t trial_seed(std::uint64_t campaign_seed, int trial_index) {
    return splitmix64(campaign_seed ^ (0xb5ad4eceda1ce2a9ULL * (trial_index + 1)));
}

Embedding random_embedding(int n, std::uint64_t seed, const BigInt& range, int retry_cap) {
    if (n < 1) throw PreconditionError("random_embedding requires n >= 1");
    if (range < 1) throw PreconditionError("random_embedding requires a positive range");
    SeededStream rng(seed);
    Embedding emb;
    emb.coords.resize(n);
    int placed = 0;
    int failures = 0;
    while (placed < n) {
        emb.coords[placed] =
            Point3{rng.below(range), rng.below(range), rng.below(range)};
        if (new_point_keeps_valid(emb.coords, placed)) {
            ++placed;
            continue;
        }
        if (++failures > retry_cap)
            throw PreconditionError("random_embedding: retry cap exceeded (range too small)");
    }
    return emb;
}

namespace {

int resolve_workers(const CampaignSpec& spec) {
    if (spec.workers > 0) return spec.workers;
    if (const char* env = std::getenv("LINKCERT_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

TrialOutcome run_trial(const CampaignSpec& spec, int index) {
    TrialOutcome out;
    out.index = index;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const int n = spec.n > 0 ? spec.n : required_vertices(spec.theorem);
        EngineOptions opts;
        opts.budget = spec.budget;
        opts.seed = static_cast<long long>(trial_seed(spec.seed, index));
        opts.relax_sizes = spec.n > 0 && spec.n < required_vertices(spec.theorem);
        Embedding emb = random_embedding(n, trial_seed(spec.seed, index), spec.range);
        LinkCertificate cert = construct_by_id(emb, spec.theorem, opts);
        auto verdict = verify_certificate(emb, cert);
        if (!verdict.ok) {
            out.outcome = "error";
            out.detail = "re-verification failed: " + verdict.detail;
        } else {
            out.outcome = "certificate";
            if (!spec.out_dir.empty()) {
                namespace fs = std::filesystem;
                fs::create_directories(spec.out_dir);
                const std::string emb_path =
                    (fs::path(spec.out_dir) / ("embedding_" + std::to_string(index) + ".json"))
                        .string();
                const std::string cert_path =
                    (fs::path(spec.out_dir) / ("certificate_" + std::to_string(index) + ".json"))
                        .string();
                std::ofstream(emb_path) << emb.to_json() << "\n";
                std::ofstream(cert_path) << cert.to_json() << "\n";
                out.cert_path = cert_path;
            } else {
                out.certificate_json = cert.to_json();
            }
        }
    } catch (const SearchExhausted& e) {
        out.outcome = "exhausted";
        out.detail = e.what();
    } catch (const Error& e) {
        out.outcome = "error";
        out.detail = e.what();
    }
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count();
    return out;
}

}  // namespace

std::string CampaignReport::to_csv() const {
    std::ostringstream os;
    os << "index,outcome,millis,certPath\n";
    for (const auto& t : trials)
        os << t.index << "," << t.outcome << "," << t.millis << "," << t.cert_path << "\n";
    return os.str();
}

CampaignReport run_campaign(const CampaignSpec& spec) {
    if (spec.trials < 1) throw PreconditionError("campaign needs at least 1 trial");
    if (spec.theorem.empty()) throw PreconditionError("campaign needs a theorem id");
    (void)required_vertices(spec.theorem);  // reject unknown ids up front

    CampaignReport report;
    report.spec = spec;
    report.trials.resize(spec.trials);

    const int workers = std::min(resolve_workers(spec), spec.trials);
    std::atomic<int> cursor{0};
    auto worker = [&] {
        while (true) {
            const int idx = cursor.fetch_add(1);
            if (idx >= spec.trials) break;
            report.trials[idx] = run_trial(spec, idx);
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& t : report.trials) {
        if (t.outcome == "certificate") ++report.certificates;
        else if (t.outcome == "exhausted") ++report.exhausted;
        else ++report.errors;
    }
    return report;
}

}  // namespace linkcert
