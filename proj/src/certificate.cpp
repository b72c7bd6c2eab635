#include "linkcert/certificate.hpp"

#include <nlohmann/json.hpp>

#include "linkcert/errors.hpp"

namespace linkcert {

std::string LinkCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    auto comps = nlohmann::ordered_json::array();
    for (const auto& c : components) comps.push_back(c.vertices());
    j["components"] = std::move(comps);
    j["linkingMatrix"] = linking_matrix;
    j["caseTrace"] = case_trace;
    j["orientationFlips"] = orientation_flips;
    j["seed"] = seed;
    return j.dump(2);
}

LinkCertificate LinkCertificate::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("certificate JSON parse error: ") + e.what());
    }
    LinkCertificate cert;
    try {
        cert.theorem = j.at("theorem").get<std::string>();
        for (const auto& comp : j.at("components"))
            cert.components.push_back(OrientedCycle(comp.get<std::vector<Vertex>>()));
        cert.linking_matrix = j.at("linkingMatrix").get<std::vector<std::vector<long long>>>();
        cert.case_trace = j.at("caseTrace").get<std::vector<std::string>>();
        cert.orientation_flips = j.at("orientationFlips").get<std::vector<bool>>();
        cert.seed = j.at("seed").get<long long>();
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("certificate JSON schema error: ") + e.what());
    }
    return cert;
}

TheoremSpec parse_theorem_id(const std::string& id) {
    TheoremSpec spec;
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : id) {
        if (ch == '-') {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    tokens.push_back(cur);

    auto numeric_suffix = [](const std::string& tok, char prefix, int& out) {
        if (tok.size() < 2 || tok[0] != prefix) return false;
        for (size_t i = 1; i < tok.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(tok[i]))) return false;
        out = std::stoi(tok.substr(1));
        return true;
    };

    std::string base;
    for (const auto& tok : tokens) {
        int value = 0;
        if (tok == "odd") {
            spec.odd = true;
        } else if (numeric_suffix(tok, 'n', value)) {
            spec.n = value;
        } else if (numeric_suffix(tok, 'r', value)) {
            spec.r = value;
        } else if (numeric_suffix(tok, 'm', value)) {
            spec.m = value;
        } else {
            if (!base.empty()) base += "-";
            base += tok;
        }
    }
    spec.base = base;
    return spec;
}

namespace {

bool matrix_shape_ok(const LinkCertificate& cert) {
    const size_t k = cert.components.size();
    if (cert.linking_matrix.size() != k) return false;
    for (const auto& row : cert.linking_matrix)
        if (row.size() != k) return false;
    return true;
}

// The modular / nonvanishing conditions each theorem id promises.
VerifyReport predicate_check(const TheoremSpec& spec, const LinkCertificate& cert) {
    const auto& m = cert.linking_matrix;
    const int k = static_cast<int>(cert.components.size());
    auto fail = [](std::string why) { return VerifyReport{false, std::move(why)}; };
    auto hub_all = [&](auto&& pred, const char* why) -> VerifyReport {
        for (int i = 1; i < k; ++i)
            if (!pred(m[0][i])) return {false, why + std::string(" violated at component ") +
                                                   std::to_string(i)};
        return {};
    };

    const std::string& b = spec.base;
    if (b == "k6" || b == "k6-nonsplit") {
        if (k != 2) return fail("expected 2 components");
        if (m[0][1] == 0) return fail("linking number is zero");
        if (spec.odd && m[0][1] % 2 == 0) return fail("linking number is even");
        return {};
    }
    if (b == "triangle-cycle") {
        if (k != 2) return fail("expected 2 components");
        if (cert.components[0].size() != 3) return fail("first component is not a triangle");
        if (spec.m > 0 && cert.components[1].size() != spec.m)
            return fail("second component has wrong length");
        if (m[0][1] == 0) return fail("linking number is zero");
        return {};
    }
    if (b == "k10-three-component") {
        if (k != 3) return fail("expected 3 components");
        if (m[0][1] % 2 == 0 || m[0][2] % 2 == 0) return fail("hub linking numbers must be odd");
        return {};
    }
    if (b == "even-link") {
        if (k != 2 || spec.r < 0) return fail("expected 2 components and r");
        const long long mod = 1LL << (spec.r + 1);
        if (m[0][1] == 0 || m[0][1] % mod != 0)
            return fail("lk must be nonzero and 0 mod 2^(r+1)");
        return {};
    }
    if (b == "hub-link") {
        if (spec.n < 1 || k != spec.n + 1) return fail("expected n+1 components");
        if (spec.odd)
            return hub_all([](long long v) { return v % 2 != 0; }, "odd hub linking");
        return hub_all([](long long v) { return v != 0; }, "nonzero hub linking");
    }
    if (b == "mod2") {
        if (k != 2 || spec.r < 0) return fail("expected 2 components and r");
        const long long mod = 1LL << spec.r;
        if (m[0][1] == 0 || m[0][1] % mod != 0) return fail("lk must be nonzero and 0 mod 2^r");
        return {};
    }
    if (b == "mod2-keys") {
        if (spec.n < 1 || spec.r < 0 || k != spec.n + 1) return fail("expected n+1 components");
        const long long mod = 1LL << spec.r;
        return hub_all([mod](long long v) { return v != 0 && v % mod == 0; },
                       "nonzero 0 mod 2^r hub linking");
    }
    if (b == "mod4-k10") {
        if (k != 2) return fail("expected 2 components");
        long long v = m[0][1] % 4;
        if (v < 0) v += 4;
        if (v != 2) return fail("lk must be 2 mod 4");
        return {};
    }
    if (b == "three-mod2") {
        if (k != 3 || spec.r < 0) return fail("expected 3 components and r");
        const long long mod = 1LL << spec.r;
        if (m[0][1] == 0 || m[0][1] % mod != 0) return fail("lk(L,W) must be nonzero, 0 mod 2^r");
        if (m[0][2] == 0 || m[0][2] % mod != 0) return fail("lk(L,A) must be nonzero, 0 mod 2^r");
        if (m[1][2] % 2 != 0) return fail("lk(W,A) must be even");
        return {};
    }
    if (b == "all-even") {
        if (spec.n < 1 || k != spec.n + 1) return fail("expected n+1 components");
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (m[i][j] % 2 != 0) return fail("pairwise linking numbers must all be even");
        return hub_all([](long long v) { return v != 0; }, "nonsplit witness");
    }
    if (b == "mod3") {
        if (k != 2) return fail("expected 2 components");
        if (m[0][1] == 0 || m[0][1] % 3 != 0) return fail("lk must be nonzero and 0 mod 3");
        return {};
    }
    if (b == "mod3-keys") {
        if (spec.n < 1 || k != spec.n + 1) return fail("expected n+1 components");
        return hub_all([](long long v) { return v != 0 && v % 3 == 0; },
                       "nonzero 0 mod 3 hub linking");
    }
    return fail("unknown theorem id: " + spec.base);
}

}  // namespace

VerifyReport verify_certificate(const Embedding& emb, const LinkCertificate& cert) {
    auto fail = [](std::string why) { return VerifyReport{false, std::move(why)}; };
    if (cert.components.size() < 2) return fail("certificate needs at least 2 components");
    if (!matrix_shape_ok(cert)) return fail("linking matrix shape mismatch");
    for (const auto& c : cert.components)
        for (Vertex v : c.vertices())
            if (v < 0 || v >= emb.n()) return fail("component vertex out of range");
    for (size_t i = 0; i < cert.components.size(); ++i)
        for (size_t j = i + 1; j < cert.components.size(); ++j)
            if (!cert.components[i].disjoint_from(cert.components[j]))
                return fail("components " + std::to_string(i) + "," + std::to_string(j) +
                            " share a vertex");

    Projector proj(emb);
    for (size_t i = 0; i < cert.components.size(); ++i) {
        for (size_t j = i; j < cert.components.size(); ++j) {
            const BigInt expect = i == j ? BigInt(0)
                                         : proj.lk(cert.components[i], cert.components[j]);
            if (BigInt(cert.linking_matrix[i][j]) != expect ||
                BigInt(cert.linking_matrix[j][i]) != expect)
                return fail("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") does not match recomputation");
        }
    }
    auto pred = predicate_check(parse_theorem_id(cert.theorem), cert);
    if (!pred.ok) return fail("theorem predicate failed: " + pred.detail);
    return {};
}

LinkCertificate make_certificate(const Projector& proj, const std::string& theorem,
                                 std::vector<OrientedCycle> components,
                                 std::vector<std::string> trace, std::vector<bool> flips,
                                 long long seed) {
    LinkCertificate cert;
    cert.theorem = theorem;
    cert.components = std::move(components);
    cert.case_trace = std::move(trace);
    if (flips.empty()) flips.assign(cert.components.size(), false);
    cert.orientation_flips = std::move(flips);
    cert.seed = seed;

    const int k = static_cast<int>(cert.components.size());
    cert.linking_matrix.assign(k, std::vector<long long>(k, 0));
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const BigInt v = proj.lk(cert.components[i], cert.components[j]);
            cert.linking_matrix[i][j] = v.convert_to<long long>();
            cert.linking_matrix[j][i] = cert.linking_matrix[i][j];
        }
    }
    auto pred = predicate_check(parse_theorem_id(cert.theorem), cert);
    if (!pred.ok)
        throw InternalCheckError("constructed certificate fails its own predicate (" +
                                 cert.theorem + "): " + pred.detail);
    return cert;
}

}  // namespace linkcert
