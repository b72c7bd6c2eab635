#include <doctest.h>

#include "linkcert/errors.hpp"
#include "linkcert/sequences.hpp"

using namespace linkcert;
using namespace linkcert::seq;

TEST_CASE("alpha: base values, recursion, odd closed form") {
    CHECK(alpha(1) == 6);
    CHECK(alpha(2) == 10);
    CHECK(alpha(3) == 26);
    CHECK(alpha(4) == 52);
    CHECK(alpha(5) == 110);
    // odd closed form: alpha(2m+1) = 6*sum_{j<=m} 4^j - 4^m
    for (int m = 1; m <= 10; ++m) {
        BigInt sum = 0, pow = 1;
        for (int j = 0; j <= m; ++j) {
            sum += pow;
            pow *= 4;
        }
        CHECK(alpha(2 * m + 1) == 6 * sum - (pow / 4));
    }
    CHECK_THROWS_AS(alpha(0), PreconditionError);
}

TEST_CASE("alpha_prime: values and odd closed form") {
    CHECK(alpha_prime(1) == 1);
    CHECK(alpha_prime(2) == 2);
    CHECK(alpha_prime(3) == 5);
    CHECK(alpha_prime(4) == 10);
    CHECK(alpha_prime(5) == 21);
    CHECK(alpha_prime(6) == 42);
    for (int m = 1; m <= 11; ++m) {
        BigInt pow = 1;
        for (int j = 0; j < m; ++j) pow *= 4;
        CHECK(alpha_prime(2 * m - 1) == (pow - 1) / 3);
    }
}

TEST_CASE("alpha vs alpha_prime: equality at 1, strict below 6x afterwards") {
    CHECK(alpha(1) == 6 * alpha_prime(1));
    for (int n = 2; n <= 20; ++n) CHECK(alpha(n) < 6 * alpha_prime(n));
}

TEST_CASE("gamma: formula values, quoted flag, telescoping") {
    CHECK(gamma(1) == 2);
    CHECK(gamma(2) == 6);
    CHECK(gamma(3) == 30);
    CHECK(gamma(4) == 270);
    REQUIRE(gamma_quoted(1).has_value());
    CHECK(*gamma_quoted(1) == 3);
    CHECK_FALSE(gamma_quoted(2).has_value());
    CHECK(gamma_effective(1) == 3);
    CHECK(gamma_effective(2) == 6);
    for (int r = 2; r <= 8; ++r) CHECK(gamma(r) == gamma(r - 1) * ((BigInt(1) << (r - 1)) + 1));
}

TEST_CASE("beta, beta_prime, gamma_prime, delta, epsilon") {
    CHECK(beta(0) == 6);
    CHECK(beta(1) == 10);
    CHECK(beta(2) == 90);  // alpha_prime(4) * (gamma(2)+3) = 10*9
    CHECK(beta_prime(1, 2) == 90);
    CHECK(beta_prime(2, 1) == alpha_prime(4) * (gamma(1) + 3));
    CHECK(gamma_prime(1) == 3);
    CHECK(gamma_prime(2) == 18);
    CHECK(gamma_prime(3) == 3 * 6 * 12);
    // closed form 3^n * 2^(n(n-1)/2)
    for (int n = 1; n <= 8; ++n) {
        BigInt expect = 1;
        for (int i = 1; i <= n; ++i) expect *= 3;
        expect <<= n * (n - 1) / 2;
        CHECK(gamma_prime(n) == expect);
    }
    CHECK(delta(1) == alpha_prime(6) * (4 * gamma(1) + 3));
    CHECK(epsilon(1) == 10);
    CHECK(epsilon(2) == alpha_prime(6) * (gamma_prime(2) + 3));
}

TEST_CASE("vertex budgets: quoted table values and forward consistency") {
    CHECK(vertex_budget(1, 4).front() == 3);
    CHECK(vertex_budget(2).front() == 6);
    CHECK(vertex_budget(3).front() == 27);
    CHECK(vertex_budget(4).front() == 261);

    for (int r = 1; r <= 4; ++r) {
        auto budget = vertex_budget(r);
        auto forward = vertex_budget_forward(r, budget.front());
        for (int s = 1; s <= r; ++s) {
            CHECK(forward[s - 1] >= (BigInt(1) << s) + 1);  // stage s feasible
            CHECK(forward[s] >= budget[s]);                 // never below the plan
        }
        CHECK(forward[r] >= 4);
    }
    // gamma is the padded variant of the same recursion, so it dominates.
    for (int r = 1; r <= 6; ++r) CHECK(gamma_effective(r) >= vertex_budget(r).front());
    CHECK_THROWS_AS(vertex_budget(0), PreconditionError);
    CHECK_THROWS_AS(vertex_budget(2, 3), PreconditionError);
}

TEST_CASE("table rows serialize") {
    CHECK(table_row_json("beta", 1, 0).find("\"10\"") != std::string::npos);
    CHECK(table_row_json("gamma", 1, 0).find("quotedValue") != std::string::npos);
    CHECK(table_row_json("budget", 3, 0).find("\"27\"") != std::string::npos);
    CHECK_THROWS_AS(table_row_json("nope", 1, 0), PreconditionError);
}
