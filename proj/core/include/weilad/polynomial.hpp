#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weilad/monomial.hpp"
#include "weilad/rational.hpp"

namespace weilad {

/// Sparse multivariate polynomial over an abstract scalar. Terms are keyed
/// by exponent vector; zero coefficients are never stored.
template <class S>
class Polynomial {
public:
    using TermMap = std::map<Exponents, S>;

    Polynomial() = default;
    explicit Polynomial(int var_count) : var_count_(var_count) {
        if (var_count < 0) throw dimension_error("Polynomial: negative variable count");
    }

    static Polynomial constant(int var_count, const S& c) {
        Polynomial p(var_count);
        p.add_term(unit_monomial(var_count), c);
        return p;
    }

    static Polynomial monomial(Exponents e, const S& c) {
        Polynomial p(static_cast<int>(e.size()));
        p.add_term(std::move(e), c);
        return p;
    }

    static Polynomial variable(int var_count, int i) {
        return monomial(var_monomial(var_count, i), S(1));
    }

    int var_count() const { return var_count_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    S coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? S(0) : it->second;
    }

    void add_term(Exponents e, const S& c) {
        if (static_cast<int>(e.size()) != var_count_)
            throw dimension_error("Polynomial: exponent vector length mismatch");
        for (int x : e)
            if (x < 0) throw dimension_error("Polynomial: negative exponent");
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) it->second += c;
        if (it->second == S(0)) terms_.erase(it);
    }

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    /// Leading term with respect to the given order.
    std::pair<Exponents, S> leading_term(MonomialOrder ord) const {
        if (terms_.empty()) throw domain_error("leading_term of the zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (compare_monomials(it->first, best->first, ord) > 0) best = it;
        return *best;
    }

    /// Terms sorted descending by the active order, for deterministic output.
    std::vector<std::pair<Exponents, S>> sorted_terms(MonomialOrder ord) const {
        std::vector<std::pair<Exponents, S>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
            return compare_monomials(a.first, b.first, ord) > 0;
        });
        return v;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, S(0) - c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial r(var_count_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, S(0) - c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial r(a.var_count_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(monomial_mul(ea, eb), ca * cb);
        return r;
    }

    Polynomial scaled(const S& c) const {
        Polynomial r(var_count_);
        if (c == S(0)) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, c * k);
        return r;
    }

    friend Polynomial operator*(const S& c, const Polynomial& p) { return p.scaled(c); }
    friend Polynomial operator*(const Polynomial& p, const S& c) { return p.scaled(c); }

    bool operator==(const Polynomial& o) const {
        return var_count_ == o.var_count_ && terms_ == o.terms_;
    }

private:
    void check_same(const Polynomial& o) const {
        if (var_count_ != o.var_count_)
            throw dimension_error("polynomial variable counts differ");
    }

    int var_count_ = 0;
    TermMap terms_;
};

template <class S>
struct DivisionResult {
    std::vector<Polynomial<S>> quotients;
    Polynomial<S> remainder;
};

/// Multivariate division: f = sum(quotients[i] * divisors[i]) + remainder,
/// with no monomial of the remainder divisible by any divisor's leading
/// monomial. Divisors are tried in list order, so the result is
/// deterministic.
template <class S>
DivisionResult<S> divide_with_remainder(const Polynomial<S>& f,
                                        std::span<const Polynomial<S>> divisors,
                                        MonomialOrder ord) {
    if (divisors.empty()) throw domain_error("divide_with_remainder: no divisors");
    const int n = f.var_count();
    for (const auto& g : divisors) {
        if (g.var_count() != n) throw dimension_error("divisor variable count mismatch");
        if (g.is_zero()) throw domain_error("divide_with_remainder: zero divisor");
    }

    std::vector<std::pair<Exponents, S>> lead;
    lead.reserve(divisors.size());
    for (const auto& g : divisors) lead.push_back(g.leading_term(ord));

    DivisionResult<S> out;
    out.quotients.assign(divisors.size(), Polynomial<S>(n));
    out.remainder = Polynomial<S>(n);

    Polynomial<S> p = f;
    while (!p.is_zero()) {
        auto [lm, lc] = p.leading_term(ord);
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!monomial_divides(lead[i].first, lm)) continue;
            S c = lc / lead[i].second;
            Exponents shift = monomial_div(lm, lead[i].first);
            auto factor = Polynomial<S>::monomial(shift, c);
            out.quotients[i] += factor;
            p -= factor * divisors[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder.add_term(lm, lc);
            auto t = Polynomial<S>::monomial(lm, lc);
            p -= t;
        }
    }
    return out;
}

/// Ideal of Q[X1..Xn], presented by generators with exact rational
/// coefficients.
struct Ideal {
    std::vector<Polynomial<Rational>> generators;
    int var_count = 0;

    Ideal(std::vector<Polynomial<Rational>> gens, int n)
        : generators(std::move(gens)), var_count(n) {
        if (generators.empty()) throw domain_error("Ideal: no generators");
        for (const auto& g : generators) {
            if (g.var_count() != var_count)
                throw dimension_error("Ideal: generator variable count mismatch");
            if (g.is_zero()) throw domain_error("Ideal: zero generator");
        }
    }
};

template <class S>
std::string to_string(const Polynomial<S>& p, MonomialOrder ord,
                      std::span<const std::string> names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.sorted_terms(ord)) {
        std::string cs;
        bool negative = c < S(0);
        S mag = negative ? S(S(0) - c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        using weilad::to_string;
        using std::to_string;
        if (is_unit_monomial(e)) {
            out += to_string(mag);
        } else {
            if (mag != S(1)) out += to_string(mag) + "*";
            out += monomial_to_string(e, names);
        }
    }
    return out;
}

}  // namespace weilad
