#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkcert/exact.hpp"

namespace linkcert {
namespace seq {

// alpha(1)=6, alpha(2)=10, alpha(2m+1)=2*alpha(2m)+6, alpha(2m+2)=2*alpha(2m+1).
BigInt alpha(int n);

// alpha_prime(1)=1, even n doubles, odd n doubles and adds one.
BigInt alpha_prime(int n);

// gamma(r) = prod_{i=0}^{r-1} (2^i + 1). The tables quote 3 for r=1 where the
// product gives 2; gamma_quoted carries that flagged value.
BigInt gamma(int r);
std::optional<BigInt> gamma_quoted(int r);

// Effective per-component budget used by the construction engines: cycles
// need at least 3 vertices.
BigInt gamma_effective(int r);

// gamma_prime(n) = prod_{i=1}^{n} 3*2^(i-1) = 3^n * 2^(n(n-1)/2).
BigInt gamma_prime(int n);

// beta(0)=6, beta(1)=10, beta(r)=alpha_prime(2^r)*(gamma(r)+3) for r>=2.
BigInt beta(int r);

// beta_prime(n,r) = alpha_prime(n*2^r)*(gamma(r)+3).
BigInt beta_prime(int n, int r);

// delta(r) = alpha_prime(3*2^r)*((2^(2r-1)+2^r)*gamma(r)+3), r >= 1.
BigInt delta(int r);

// epsilon(1)=10, epsilon(n)=alpha_prime(2^(n+1)-2)*(gamma_prime(n)+3).
BigInt epsilon(int n);

// Minimal component sizes c_1..c_{r+1} so that stage s of the doubling
// construction (2^s+1 bridges, floor division) keeps at least target_final
// vertices after the last stage: backward recursion
// c_s = (2^s+1) * max(1, ceil(c_{s+1}/2) - 1).
std::vector<BigInt> vertex_budget(int r, const BigInt& target_final = BigInt(4));

// Forward recursion c_{s+1} = 2*(floor(c_s/(2^s+1)) + 1) starting from c_1.
std::vector<BigInt> vertex_budget_forward(int r, const BigInt& c1);

// Row lookup for the CLI: name in {alpha, alpha-prime, beta, beta-prime,
// gamma, gamma-prime, delta, epsilon, budget}; returns a JSON object string.
std::string table_row_json(const std::string& name, int index, int index2);

}  // namespace seq
}  // namespace linkcert
