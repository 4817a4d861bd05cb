#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "weilad/errors.hpp"

namespace weilad {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational scalar. All ideal-theoretic
/// computation runs over this type; floating-point Groebner bases are
/// numerically unstable.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Multi-index factorial: product of the per-component factorials.
inline BigInt multi_factorial(const std::vector<int>& alpha) {
    BigInt r = 1;
    for (int a : alpha) r *= factorial(a);
    return r;
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

/// Parses "7", "-7", "3/4" or a decimal like "2.5" into an exact rational.
inline Rational rational_from_string(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        try {
            return Rational(text);
        } catch (const std::exception&) {
            throw domain_error("invalid rational literal: " + text);
        }
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty())
        throw domain_error("invalid rational literal: " + text);
    try {
        BigInt num(digits);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(num, den);
    } catch (const std::exception&) {
        throw domain_error("invalid rational literal: " + text);
    }
}

}  // namespace weilad
