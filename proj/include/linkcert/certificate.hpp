#pragma once

#include <string>
#include <vector>

#include "linkcert/linking.hpp"

namespace linkcert {

// Self-contained, re-verifiable record of a constructed link: the components
// (distinguished component L first), the full pairwise linking matrix, the
// proof branch taken at each step, and which components were reversed along
// the way.
struct LinkCertificate {
    std::string theorem;
    std::vector<OrientedCycle> components;
    std::vector<std::vector<long long>> linking_matrix;
    std::vector<std::string> case_trace;
    std::vector<bool> orientation_flips;
    long long seed = 0;

    std::string to_json() const;
    static LinkCertificate from_json(const std::string& text);
};

// Engine parameters are carried in the theorem id, e.g. "mod2-keys-n2-r1".
struct TheoremSpec {
    std::string base;
    int n = -1;
    int r = -1;
    int m = -1;
    bool odd = false;
};

TheoremSpec parse_theorem_id(const std::string& id);

struct VerifyReport {
    bool ok = true;
    std::string detail;
};

// Recomputes every linking-matrix entry from coordinates alone, checks
// component disjointness, and evaluates the theorem predicate for the id.
VerifyReport verify_certificate(const Embedding& emb, const LinkCertificate& cert);

// Computes the matrix from scratch and self-verifies before returning;
// throws InternalCheckError when the predicate fails.
LinkCertificate make_certificate(const Projector& proj, const std::string& theorem,
                                 std::vector<OrientedCycle> components,
                                 std::vector<std::string> trace, std::vector<bool> flips,
                                 long long seed);

}  // namespace linkcert
