#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "weilad/errors.hpp"

namespace weilad {

/// Exponent vector of a monomial. Length equals the ambient variable count
/// and is identical across all monomials of one polynomial; entries are
/// nonnegative.
using Exponents = std::vector<int>;

enum class MonomialOrder { degrevlex, lex, deglex };

inline int total_degree(const Exponents& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

inline bool is_unit_monomial(const Exponents& a) {
    return std::all_of(a.begin(), a.end(), [](int e) { return e == 0; });
}

/// Three-way comparison under a term order; variable 0 is the most
/// significant for lex/deglex ties. Returns <0, 0 or >0.
inline int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder ord) {
    if (a.size() != b.size())
        throw dimension_error("compare_monomials: exponent vectors of different length");
    auto lex_cmp = [&]() {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    };
    switch (ord) {
        case MonomialOrder::lex:
            return lex_cmp();
        case MonomialOrder::deglex: {
            int da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db ? -1 : 1;
            return lex_cmp();
        }
        case MonomialOrder::degrevlex: {
            int da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db ? -1 : 1;
            // Equal degree: the last nonzero entry of a-b decides,
            // negative meaning a is the larger monomial.
            for (std::size_t i = a.size(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
            }
            return 0;
        }
    }
    return 0;
}

/// Comparator object usable with standard algorithms.
struct MonomialLess {
    MonomialOrder order;
    bool operator()(const Exponents& a, const Exponents& b) const {
        return compare_monomials(a, b, order) < 0;
    }
};

inline bool monomial_divides(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size())
        throw dimension_error("monomial_divides: exponent vectors of different length");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents monomial_mul(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size())
        throw dimension_error("monomial_mul: exponent vectors of different length");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/// Quotient a/b; precondition b | a.
inline Exponents monomial_div(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size())
        throw dimension_error("monomial_div: exponent vectors of different length");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw domain_error("monomial_div: not divisible");
    }
    return r;
}

inline Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size())
        throw dimension_error("monomial_lcm: exponent vectors of different length");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool leq_componentwise(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents unit_monomial(int var_count) { return Exponents(var_count, 0); }

inline Exponents var_monomial(int var_count, int i, int power = 1) {
    Exponents e(var_count, 0);
    e.at(i) = power;
    return e;
}

/// "x^2 y" style rendering with the given variable names ("1" for the unit).
inline std::string monomial_to_string(const Exponents& a, std::span<const std::string> names) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (a[i] > 1) out += "^" + std::to_string(a[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace weilad
