#include "linkcert/sequences.hpp"

#include <map>
#include <mutex>

#include <nlohmann/json.hpp>

#include "linkcert/errors.hpp"

namespace linkcert {
namespace seq {

namespace {

std::mutex cache_mu;

BigInt pow2(int e) {
    BigInt r = 1;
    return r << e;
}

template <typename F>
BigInt memo(std::map<int, BigInt>& cache, int key, F&& compute) {
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    BigInt value = compute();
    std::lock_guard<std::mutex> lock(cache_mu);
    cache.emplace(key, value);
    return value;
}

}  // namespace

BigInt alpha(int n) {
    if (n < 1) throw PreconditionError("alpha requires n >= 1");
    static std::map<int, BigInt> cache;
    return memo(cache, n, [n] {
        if (n == 1) return BigInt(6);
        if (n == 2) return BigInt(10);
        if (n % 2 == 1) return 2 * alpha(n - 1) + 6;
        return 2 * alpha(n - 1);
    });
}

BigInt alpha_prime(int n) {
    if (n < 1) throw PreconditionError("alpha_prime requires n >= 1");
    static std::map<int, BigInt> cache;
    return memo(cache, n, [n] {
        if (n == 1) return BigInt(1);
        if (n % 2 == 0) return 2 * alpha_prime(n - 1);
        return 2 * alpha_prime(n - 1) + 1;
    });
}

BigInt gamma(int r) {
    if (r < 1) throw PreconditionError("gamma requires r >= 1");
    BigInt prod = 1;
    for (int i = 0; i < r; ++i) prod *= pow2(i) + 1;
    return prod;
}

std::optional<BigInt> gamma_quoted(int r) {
    if (r == 1) return BigInt(3);
    return std::nullopt;
}

BigInt gamma_effective(int r) {
    BigInt g = gamma(r);
    return g < 3 ? BigInt(3) : g;
}

BigInt gamma_prime(int n) {
    if (n < 1) throw PreconditionError("gamma_prime requires n >= 1");
    BigInt prod = 1;
    for (int i = 1; i <= n; ++i) prod *= 3 * pow2(i - 1);
    return prod;
}

BigInt beta(int r) {
    if (r < 0) throw PreconditionError("beta requires r >= 0");
    if (r == 0) return 6;
    if (r == 1) return 10;
    if (r > 24) throw PreconditionError("beta index too large");
    return alpha_prime(static_cast<int>(1 << r)) * (gamma(r) + 3);
}

BigInt beta_prime(int n, int r) {
    if (n < 1 || r < 0) throw PreconditionError("beta_prime requires n >= 1, r >= 0");
    if (n > 1000 || r > 24) throw PreconditionError("beta_prime index too large");
    return alpha_prime(n * static_cast<int>(1 << r)) * (gamma(r) + 3);
}

BigInt delta(int r) {
    if (r < 1) throw PreconditionError("delta requires r >= 1");
    if (r > 24) throw PreconditionError("delta index too large");
    return alpha_prime(3 * static_cast<int>(1 << r)) * ((pow2(2 * r - 1) + pow2(r)) * gamma(r) + 3);
}

BigInt epsilon(int n) {
    if (n < 1) throw PreconditionError("epsilon requires n >= 1");
    if (n == 1) return 10;
    if (n > 20) throw PreconditionError("epsilon index too large");
    return alpha_prime(static_cast<int>((1 << (n + 1)) - 2)) * (gamma_prime(n) + 3);
}

std::vector<BigInt> vertex_budget(int r, const BigInt& target_final) {
    if (r < 1) throw PreconditionError("vertex_budget requires r >= 1");
    if (target_final < 4)
        throw PreconditionError("vertex_budget requires target_final >= 4");
    std::vector<BigInt> c(r + 1);
    c[r] = target_final;  // c_{r+1}
    for (int s = r; s >= 1; --s) {
        const BigInt next = c[s];  // requirement on c_{s+1}
        BigInt half_up = (next + 1) / 2;
        BigInt factor = half_up - 1;
        if (factor < 1) factor = 1;
        c[s - 1] = (pow2(s) + 1) * factor;
    }
    return c;  // c[0] = c_1, ..., c[r] = c_{r+1}
}

std::vector<BigInt> vertex_budget_forward(int r, const BigInt& c1) {
    if (r < 1) throw PreconditionError("vertex_budget_forward requires r >= 1");
    std::vector<BigInt> c(r + 1);
    c[0] = c1;
    for (int s = 1; s <= r; ++s) {
        const BigInt t = pow2(s) + 1;
        c[s] = 2 * (c[s - 1] / t + 1);
    }
    return c;
}

std::string table_row_json(const std::string& name, int index, int index2) {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["index"] = index;
    auto put = [&](const BigInt& v) { j["value"] = v.str(); };
    if (name == "alpha") {
        put(alpha(index));
    } else if (name == "alpha-prime") {
        put(alpha_prime(index));
    } else if (name == "beta") {
        put(beta(index));
    } else if (name == "beta-prime") {
        j["r"] = index2;
        put(beta_prime(index, index2));
    } else if (name == "gamma") {
        put(gamma(index));
        if (auto q = gamma_quoted(index)) {
            j["quotedValue"] = q->str();
            j["flag"] = "table value differs from the product formula";
        }
    } else if (name == "gamma-prime") {
        put(gamma_prime(index));
    } else if (name == "delta") {
        put(delta(index));
    } else if (name == "epsilon") {
        put(epsilon(index));
    } else if (name == "budget") {
        auto budgets = vertex_budget(index, index2 >= 4 ? BigInt(index2) : BigInt(4));
        auto arr = nlohmann::ordered_json::array();
        for (const auto& b : budgets) arr.push_back(b.str());
        j["value"] = budgets.front().str();
        j["stages"] = std::move(arr);
    } else {
        throw PreconditionError("unknown sequence name: " + name);
    }
    return j.dump();
}

}  // namespace seq
}  // namespace linkcert
