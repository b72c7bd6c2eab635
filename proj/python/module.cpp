#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linkcert/harness.hpp"

namespace py = pybind11;
using namespace linkcert;

namespace {

Embedding emb_from_json(const std::string& text) { return Embedding::from_json(text); }

py::object big_to_py(const BigInt& v) {
    // Route through the decimal string so unbounded values survive.
    return py::int_(py::str(v.str()));
}

EngineOptions options_from_kwargs(long long seed, long long max_tuples, bool relax) {
    EngineOptions opts;
    opts.seed = seed;
    if (max_tuples > 0) opts.budget.max_tuples = max_tuples;
    opts.relax_sizes = relax;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_linkcert, m) {
    m.doc() = "certified links in straight-line embeddings of complete graphs";

    py::register_exception<SearchExhausted>(m, "SearchExhausted");
    py::register_exception<PreconditionError>(m, "PreconditionError");

    m.def("random_embedding_json",
          [](int n, std::uint64_t seed, const std::string& range) {
              return random_embedding(n, seed, BigInt(range)).to_json();
          },
          py::arg("n"), py::arg("seed") = 0, py::arg("range") = "1000000");

    m.def("validate_embedding_json", [](const std::string& emb_json) {
        auto report = validate_embedding(emb_from_json(emb_json));
        return py::make_tuple(report.ok(), report.summary());
    });

    m.def("linking_number",
          [](const std::string& emb_json, const std::vector<int>& a, const std::vector<int>& b) {
              return big_to_py(
                  linking_number(emb_from_json(emb_json), OrientedCycle(a), OrientedCycle(b)));
          },
          py::arg("embedding_json"), py::arg("cycle_a"), py::arg("cycle_b"));

    m.def("gauss_estimate",
          [](const std::string& emb_json, const std::vector<int>& a, const std::vector<int>& b) {
              return gauss_estimate(emb_from_json(emb_json), OrientedCycle(a), OrientedCycle(b));
          });

    m.def("generic_direction_shears", [](const std::string& emb_json, long long seed) {
        auto dir = generic_direction(emb_from_json(emb_json), seed);
        return py::make_tuple(dir.a.str(), dir.b.str());
    }, py::arg("embedding_json"), py::arg("seed") = 0);

    m.def("construct",
          [](const std::string& emb_json, const std::string& theorem, long long seed,
             long long max_tuples, bool relax) {
              return construct_by_id(emb_from_json(emb_json), theorem,
                                     options_from_kwargs(seed, max_tuples, relax))
                  .to_json();
          },
          py::arg("embedding_json"), py::arg("theorem"), py::arg("seed") = 0,
          py::arg("max_tuples") = 0, py::arg("relax_sizes") = false);

    m.def("verify_certificate",
          [](const std::string& emb_json, const std::string& cert_json) {
              auto verdict = verify_certificate(emb_from_json(emb_json),
                                                LinkCertificate::from_json(cert_json));
              return py::make_tuple(verdict.ok, verdict.detail);
          });

    m.def("required_vertices", &required_vertices);

    auto s = m.def_submodule("seq", "sequence tables");
    s.def("alpha", [](int n) { return big_to_py(seq::alpha(n)); });
    s.def("alpha_prime", [](int n) { return big_to_py(seq::alpha_prime(n)); });
    s.def("beta", [](int r) { return big_to_py(seq::beta(r)); });
    s.def("beta_prime", [](int n, int r) { return big_to_py(seq::beta_prime(n, r)); });
    s.def("gamma", [](int r) { return big_to_py(seq::gamma(r)); });
    s.def("gamma_prime", [](int n) { return big_to_py(seq::gamma_prime(n)); });
    s.def("delta", [](int r) { return big_to_py(seq::delta(r)); });
    s.def("epsilon", [](int n) { return big_to_py(seq::epsilon(n)); });
    s.def("vertex_budget", [](int r, long long target) {
        py::list out;
        for (const auto& c : seq::vertex_budget(r, BigInt(target))) out.append(big_to_py(c));
        return out;
    }, py::arg("r"), py::arg("target_final") = 4);
}
