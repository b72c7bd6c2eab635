#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace linkcert {

// All geometric predicates run on unbounded integers; rationals appear only
// in crossing parameters. No floating point outside the Gauss oracle.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& x) {
    return x.sign();
}

inline BigInt mod_reduce(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

inline bool divisible(const BigInt& x, const BigInt& m) {
    return x % m == 0;
}

// cpp_rational rejects negative denominators; normalize first.
inline BigRat make_rat(BigInt num, BigInt den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRat(num, den);
}

}  // namespace linkcert
