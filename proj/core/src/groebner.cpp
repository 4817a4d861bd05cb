#include "weilad/groebner.hpp"

#include <algorithm>

namespace weilad {

namespace {

Polynomial<Rational> make_monic(const Polynomial<Rational>& p, MonomialOrder ord) {
    auto [lm, lc] = p.leading_term(ord);
    return p.scaled(Rational(1) / lc);
}

Polynomial<Rational> s_polynomial(const Polynomial<Rational>& f, const Polynomial<Rational>& g,
                                  MonomialOrder ord) {
    auto [lmf, lcf] = f.leading_term(ord);
    auto [lmg, lcg] = g.leading_term(ord);
    Exponents l = monomial_lcm(lmf, lmg);
    auto uf = Polynomial<Rational>::monomial(monomial_div(l, lmf), Rational(1) / lcf);
    auto ug = Polynomial<Rational>::monomial(monomial_div(l, lmg), Rational(1) / lcg);
    return uf * f - ug * g;
}

Polynomial<Rational> reduce(const Polynomial<Rational>& f,
                            std::span<const Polynomial<Rational>> basis, MonomialOrder ord) {
    return divide_with_remainder(f, basis, ord).remainder;
}

struct Pair {
    std::size_t i, j;  // i < j
    Exponents lcm;
};

}  // namespace

GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder ord) {
    const int n = ideal.var_count;

    std::vector<Polynomial<Rational>> basis;
    for (const auto& g : ideal.generators)
        if (!g.is_zero()) basis.push_back(make_monic(g, ord));

    auto lm = [&](std::size_t i) { return basis[i].leading_term(ord).first; };

    std::vector<Pair> pending;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.push_back({i, j, monomial_lcm(lm(i), lm(j))});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!pending.empty()) {
        // Normal strategy: minimal lcm in the active order, ties by index.
        auto best = pending.begin();
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            int c = compare_monomials(it->lcm, best->lcm, ord);
            if (c < 0 || (c == 0 && std::pair(it->i, it->j) < std::pair(best->i, best->j)))
                best = it;
        }
        Pair p = *best;
        pending.erase(best);

        // Buchberger's first criterion: coprime leading monomials.
        if (monomial_mul(lm(p.i), lm(p.j)) == p.lcm) continue;

        // Chain criterion: some third generator divides the lcm with both
        // side lcms strictly smaller (strictness keeps discards acyclic).
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!monomial_divides(lm(k), p.lcm)) continue;
            if (monomial_lcm(lm(p.i), lm(k)) != p.lcm &&
                monomial_lcm(lm(p.j), lm(k)) != p.lcm)
                skip = true;
        }
        if (skip) continue;

        auto r = reduce(s_polynomial(basis[p.i], basis[p.j], ord), basis, ord);
        if (!r.is_zero()) {
            basis.push_back(make_monic(r, ord));
            push_pairs_for(basis.size() - 1);
        }
    }

    // Minimalize: drop members whose leading monomial another member divides.
    std::vector<Polynomial<Rational>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto lmi = basis[i].leading_term(ord).first;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            auto lmj = basis[j].leading_term(ord).first;
            if (monomial_divides(lmj, lmi) && (lmj != lmi || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Fully reduce each member's tail against the others.
    std::vector<Polynomial<Rational>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<Rational>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto r = others.empty() ? minimal[i] : reduce(minimal[i], others, ord);
        reduced.push_back(make_monic(r, ord));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
        return compare_monomials(a.leading_term(ord).first, b.leading_term(ord).first, ord) < 0;
    });

    return GroebnerBasis{std::move(reduced), ord, n};
}

Polynomial<Rational> normal_form(const Polynomial<Rational>& f, const GroebnerBasis& g) {
    if (f.var_count() != g.var_count)
        throw dimension_error("normal_form: variable count mismatch");
    if (f.is_zero()) return f;
    return divide_with_remainder(f, std::span<const Polynomial<Rational>>(g.polys), g.order)
        .remainder;
}

bool is_zero_dimensional(const GroebnerBasis& g) {
    for (int i = 0; i < g.var_count; ++i) {
        bool found = false;
        for (const auto& p : g.polys) {
            Exponents lm = p.leading_term(g.order).first;
            bool pure = true;
            for (int k = 0; k < g.var_count; ++k)
                if (k != i && lm[k] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::vector<Exponents> quotient_monomial_basis(const GroebnerBasis& g) {
    if (!is_zero_dimensional(g))
        throw not_zero_dimensional("quotient_monomial_basis: ideal is not zero-dimensional");

    const int n = g.var_count;
    std::vector<Exponents> lms;
    for (const auto& p : g.polys) lms.push_back(p.leading_term(g.order).first);

    // Box bound: the pure-power leading monomial of each variable caps its
    // exponent among standard monomials.
    Exponents bound(n, 0);
    for (int i = 0; i < n; ++i) {
        for (const auto& lm : lms) {
            bool pure = true;
            for (int k = 0; k < n; ++k)
                if (k != i && lm[k] != 0) pure = false;
            if (pure) {
                bound[i] = bound[i] == 0 ? lm[i] : std::min(bound[i], lm[i]);
            }
        }
    }

    std::vector<Exponents> standard;
    Exponents cur(n, 0);
    while (true) {
        bool divisible = false;
        for (const auto& lm : lms)
            if (monomial_divides(lm, cur)) {
                divisible = true;
                break;
            }
        if (!divisible) standard.push_back(cur);

        int i = n - 1;
        while (i >= 0) {
            if (++cur[i] < bound[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }

    std::sort(standard.begin(), standard.end(), MonomialLess{g.order});
    return standard;
}

Polynomial<Rational> univariate_minimal_generator(const GroebnerBasis& g, int var) {
    if (var < 0 || var >= g.var_count)
        throw dimension_error("univariate_minimal_generator: variable index out of range");
    if (!is_zero_dimensional(g))
        throw not_zero_dimensional("univariate_minimal_generator: ideal is not zero-dimensional");

    const int n = g.var_count;

    // Exact incremental Gaussian elimination. Rows are normal forms of
    // successive powers of X_var in echelon form; combos track how each row
    // was assembled from the original powers.
    struct Row {
        std::map<Exponents, Rational> vec;  // reduced normal form
        std::vector<Rational> combo;        // coefficients over powers 0..t
    };
    std::vector<Row> rows;

    for (int t = 0;; ++t) {
        auto nf = normal_form(Polynomial<Rational>::monomial(var_monomial(n, var, t), Rational(1)), g);
        std::map<Exponents, Rational> vec(nf.terms().begin(), nf.terms().end());
        std::vector<Rational> combo(static_cast<std::size_t>(t) + 1, Rational(0));
        combo[t] = 1;

        // Eliminate against existing rows (each row's pivot is its first
        // monomial in map order).
        for (const auto& row : rows) {
            if (vec.empty()) break;
            auto pivot = row.vec.begin();
            auto it = vec.find(pivot->first);
            if (it == vec.end()) continue;
            Rational factor = it->second / pivot->second;
            for (const auto& [m, c] : row.vec) {
                auto& slot = vec[m];
                slot -= factor * c;
                if (slot == 0) vec.erase(m);
            }
            for (std::size_t s = 0; s < row.combo.size(); ++s) combo[s] -= factor * row.combo[s];
        }

        if (vec.empty()) {
            // X_var^t is linearly dependent on the lower powers: the combo
            // gives the minimal monic annihilator.
            Polynomial<Rational> p(n);
            for (int s = 0; s <= t; ++s)
                if (combo[s] != 0) p.add_term(var_monomial(n, var, s), combo[s]);
            return p.scaled(Rational(1) / combo[t]);
        }
        rows.push_back(Row{std::move(vec), std::move(combo)});
    }
}

}  // namespace weilad
