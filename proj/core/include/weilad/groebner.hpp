#pragma once

#include <vector>

#include "weilad/polynomial.hpp"

namespace weilad {

/// Reduced Groebner basis: monic members, no monomial of any member
/// divisible by the leading monomial of another, sorted ascending by
/// leading monomial under `order`.
struct GroebnerBasis {
    std::vector<Polynomial<Rational>> polys;
    MonomialOrder order = MonomialOrder::degrevlex;
    int var_count = 0;
};

/// Buchberger's algorithm with the coprimality and chain criteria for
/// S-pair elimination; normal selection strategy (minimal lcm under the
/// active order, ties by generator index).
GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder ord = MonomialOrder::degrevlex);

/// Unique canonical representative of [f] in Q[X]/<G>.
Polynomial<Rational> normal_form(const Polynomial<Rational>& f, const GroebnerBasis& g);

/// Finiteness criterion: every variable has a pure power among the leading
/// monomials of G.
bool is_zero_dimensional(const GroebnerBasis& g);

/// Standard monomials (not divisible by any leading monomial of G), sorted
/// ascending by the basis order. Throws not_zero_dimensional otherwise.
std::vector<Exponents> quotient_monomial_basis(const GroebnerBasis& g);

/// Monic generator of I /\ Q[X_i], found as the minimal linear dependency
/// among normal forms of successive powers of X_i.
Polynomial<Rational> univariate_minimal_generator(const GroebnerBasis& g, int var);

}  // namespace weilad
