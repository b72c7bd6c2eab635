#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "linkcert/harness.hpp"

namespace {

using namespace linkcert;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw PreconditionError("cannot write file: " + out_path);
        out << text << "\n";
    }
}

OrientedCycle parse_cycle(const std::string& csv) {
    std::vector<Vertex> verts;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            verts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw PreconditionError("bad cycle vertex: " + tok);
        }
    }
    return OrientedCycle(std::move(verts));
}

Embedding load_or_generate(const std::string& path, int n, long long seed,
                           const std::string& range) {
    if (!path.empty()) return Embedding::from_json(slurp(path));
    if (n <= 0) throw PreconditionError("either --embedding or --n is required");
    return random_embedding(n, static_cast<std::uint64_t>(seed), BigInt(range));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linkcert: certified links in straight-line embeddings of complete graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random general-position embedding");
    int gen_n = 6;
    long long gen_seed = 0;
    std::string gen_range = "1000000", gen_out;
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--range", gen_range, "coordinate range M (coords in [0,M)^3)");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // lk
    auto* lk = app.add_subcommand("lk", "linking number of two disjoint cycles");
    std::string lk_emb;
    std::vector<std::string> lk_cycles;
    lk->add_option("--embedding", lk_emb, "embedding JSON file")->required();
    lk->add_option("--cycle", lk_cycles, "cycle as comma-separated vertices (twice)")
        ->expected(2);

    // construct
    auto* con = app.add_subcommand("construct", "run a theorem engine, emit a certificate");
    std::string con_id, con_emb, con_out, con_range = "1000000", con_emit_emb;
    int con_n = 0;
    long long con_seed = 0;
    long long con_max_tuples = 0;
    con->add_option("theorem", con_id, "theorem id (e.g. k6-nonsplit-odd, mod3, mod2-keys-n2-r1)")
        ->required();
    con->add_option("--embedding", con_emb, "embedding JSON file (otherwise generated)");
    con->add_option("--n", con_n, "vertex count when generating (default: engine requirement)");
    con->add_option("--seed", con_seed, "seed for generation");
    con->add_option("--range", con_range, "coordinate range when generating");
    con->add_option("--max-tuples", con_max_tuples, "search budget (tuples examined)");
    con->add_option("-o,--output", con_out, "certificate output file (default stdout)");
    con->add_option("--emit-embedding", con_emit_emb, "also write the embedding JSON here");

    // verify
    auto* ver = app.add_subcommand("verify", "seeded verification campaign");
    std::string ver_id, ver_out_dir, ver_range = "1000000", ver_csv;
    int ver_n = 0, ver_trials = 10, ver_workers = 0;
    long long ver_seed = 0;
    ver->add_option("theorem", ver_id, "theorem id")->required();
    ver->add_option("--trials", ver_trials, "number of trials");
    ver->add_option("--n", ver_n, "vertex count (default: engine requirement)");
    ver->add_option("--seed", ver_seed, "campaign seed");
    ver->add_option("--range", ver_range, "coordinate range");
    ver->add_option("--out-dir", ver_out_dir, "directory for per-trial artifacts");
    ver->add_option("--workers", ver_workers, "worker threads (default: LINKCERT_WORKERS/auto)");
    ver->add_option("--csv", ver_csv, "write the report CSV here (default stdout)");

    // seq
    auto* sq = app.add_subcommand("seq", "sequence tables");
    std::string sq_name;
    int sq_index = 1, sq_index2 = 0;
    bool sq_json = false;
    sq->add_option("--name", sq_name,
                   "alpha | alpha-prime | beta | beta-prime | gamma | gamma-prime | delta | "
                   "epsilon | budget")
        ->required();
    sq->add_option("--index", sq_index, "index (n or r)")->required();
    sq->add_option("--index2", sq_index2, "second index (r for beta-prime, target for budget)");
    sq->add_flag("--json", sq_json, "print the full JSON row");

    // check-cert
    auto* chk = app.add_subcommand("check-cert", "re-verify a certificate file");
    std::string chk_emb, chk_cert;
    chk->add_option("--embedding", chk_emb, "embedding JSON file")->required();
    chk->add_option("--cert", chk_cert, "certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            Embedding emb = random_embedding(gen_n, static_cast<std::uint64_t>(gen_seed),
                                             BigInt(gen_range));
            emit(emb.to_json(), gen_out);
            return 0;
        }
        if (*lk) {
            Embedding emb = Embedding::from_json(slurp(lk_emb));
            const BigInt value =
                linking_number(emb, parse_cycle(lk_cycles[0]), parse_cycle(lk_cycles[1]));
            std::cout << value.str() << "\n";
            return 0;
        }
        if (*con) {
            EngineOptions opts;
            opts.seed = con_seed;
            if (con_max_tuples > 0) opts.budget.max_tuples = con_max_tuples;
            const int need = required_vertices(con_id);
            if (con_emb.empty() && con_n > 0 && con_n < need) {
                std::cerr << "warning: " << con_id << " expects " << need
                          << " vertices, proceeding with " << con_n << " (probe mode)\n";
                opts.relax_sizes = true;
            }
            Embedding emb = load_or_generate(con_emb, con_n > 0 ? con_n : need, con_seed,
                                             con_range);
            if (!con_emb.empty() && emb.n() < need) opts.relax_sizes = true;
            LinkCertificate cert = construct_by_id(emb, con_id, opts);
            auto verdict = verify_certificate(emb, cert);
            if (!verdict.ok) {
                std::cerr << "self-verification failed: " << verdict.detail << "\n";
                return 1;
            }
            if (!con_emit_emb.empty()) emit(emb.to_json(), con_emit_emb);
            emit(cert.to_json(), con_out);
            return 0;
        }
        if (*ver) {
            CampaignSpec spec;
            spec.theorem = ver_id;
            spec.trials = ver_trials;
            spec.n = ver_n;
            spec.seed = static_cast<std::uint64_t>(ver_seed);
            spec.range = BigInt(ver_range);
            spec.out_dir = ver_out_dir;
            spec.workers = ver_workers;
            CampaignReport report = run_campaign(spec);
            emit(report.to_csv(), ver_csv);
            std::cerr << report.certificates << "/" << spec.trials << " certificates, "
                      << report.exhausted << " exhausted, " << report.errors << " errors\n";
            return (report.exhausted == 0 && report.errors == 0) ? 0 : 1;
        }
        if (*sq) {
            const std::string row = seq::table_row_json(sq_name, sq_index, sq_index2);
            if (sq_json) {
                std::cout << row << "\n";
            } else {
                auto j = nlohmann::json::parse(row);
                std::cout << j["value"].get<std::string>() << "\n";
            }
            return 0;
        }
        if (*chk) {
            Embedding emb = Embedding::from_json(slurp(chk_emb));
            LinkCertificate cert = LinkCertificate::from_json(slurp(chk_cert));
            auto verdict = verify_certificate(emb, cert);
            if (verdict.ok) {
                std::cout << "certificate ok: " << cert.theorem << "\n";
                return 0;
            }
            std::cout << "certificate INVALID: " << verdict.detail << "\n";
            return 1;
        }
    } catch (const PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const SearchExhausted& e) {
        std::cerr << "search exhausted (falsification candidate): " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
