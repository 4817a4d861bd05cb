#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "weilad/expr.hpp"
#include "weilad/monomial.hpp"
#include "weilad/rules.hpp"

namespace weilad {

namespace detail {

inline std::size_t box_size(const std::vector<int>& caps) {
    std::size_t n = 1;
    for (int c : caps) n *= static_cast<std::size_t>(c) + 1;
    return n;
}

inline std::size_t box_index(const std::vector<int>& caps, const Exponents& alpha) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (alpha[i] < 0 || alpha[i] > caps[i])
            throw dimension_error("jet coefficient index outside caps");
        idx = idx * (static_cast<std::size_t>(caps[i]) + 1) + static_cast<std::size_t>(alpha[i]);
    }
    return idx;
}

/// Visits every multi-index alpha <= caps together with its flat row-major
/// position (variable 0 most significant).
template <class F>
void for_each_cell(const std::vector<int>& caps, F&& fn) {
    Exponents alpha(caps.size(), 0);
    std::size_t flat = 0;
    while (true) {
        fn(static_cast<const Exponents&>(alpha), flat);
        ++flat;
        int i = static_cast<int>(caps.size()) - 1;
        while (i >= 0) {
            if (++alpha[i] <= caps[i]) break;
            alpha[i] = 0;
            --i;
        }
        if (i < 0) return;
    }
}

}  // namespace detail

/// Truncated multivariate derivative tower: coefficient of alpha is
/// D^alpha(f) at the expansion point, stored densely for all alpha <= caps.
template <class S>
class TowerJet {
public:
    explicit TowerJet(std::vector<int> caps)
        : caps_(std::move(caps)), data_(detail::box_size(caps_), S(0)) {
        for (int c : caps_)
            if (c < 0) throw dimension_error("TowerJet: negative cap");
    }

    static TowerJet constant(std::vector<int> caps, S v) {
        TowerJet j(std::move(caps));
        j.data_[0] = std::move(v);
        return j;
    }

    static TowerJet from_value(S v) { return constant({}, std::move(v)); }

    /// a + X_i as a jet: value a, first derivative 1 in direction i.
    static TowerJet seed(std::vector<int> caps, S value, int i, S slope = S(1)) {
        TowerJet j = constant(std::move(caps), std::move(value));
        if (j.caps_.at(i) >= 1)
            j.set_coeff(var_monomial(j.var_count(), i), std::move(slope));
        return j;
    }

    int var_count() const { return static_cast<int>(caps_.size()); }
    const std::vector<int>& caps() const { return caps_; }
    const std::vector<S>& data() const { return data_; }
    const S& value() const { return data_[0]; }

    const S& coeff(const Exponents& alpha) const {
        check_len(alpha);
        return data_[detail::box_index(caps_, alpha)];
    }
    void set_coeff(const Exponents& alpha, S v) {
        check_len(alpha);
        data_[detail::box_index(caps_, alpha)] = std::move(v);
    }

    bool is_constant() const {
        for (std::size_t i = 1; i < data_.size(); ++i)
            if (!Carrier<S>::is_zero(data_[i])) return false;
        return true;
    }

    friend TowerJet operator+(const TowerJet& a, const TowerJet& b) {
        a.check_caps(b);
        TowerJet r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }
    friend TowerJet operator-(const TowerJet& a, const TowerJet& b) {
        a.check_caps(b);
        TowerJet r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
        return r;
    }
    TowerJet operator-() const {
        TowerJet r = *this;
        for (auto& c : r.data_) c = S(0) - c;
        return r;
    }
    TowerJet scaled(const S& k) const {
        TowerJet r = *this;
        for (auto& c : r.data_) c = c * k;
        return r;
    }

    /// Leibniz product in derivative semantics:
    /// D^g(uv) = sum over b <= g of C(g, b) D^b(u) D^(g-b)(v).
    friend TowerJet operator*(const TowerJet& a, const TowerJet& b) {
        a.check_caps(b);
        const auto& caps = a.caps_;
        TowerJet out(caps);

        int max_cap = 0;
        for (int c : caps) max_cap = std::max(max_cap, c);
        std::vector<std::vector<S>> choose(static_cast<std::size_t>(max_cap) + 1);
        for (int n = 0; n <= max_cap; ++n) {
            choose[n].reserve(n + 1);
            for (int k = 0; k <= n; ++k)
                choose[n].push_back(Carrier<S>::constant(a.data_[0], Rational(binomial(n, k))));
        }

        std::vector<Exponents> cells;
        cells.reserve(a.data_.size());
        detail::for_each_cell(caps, [&](const Exponents& e, std::size_t) { cells.push_back(e); });

        for (std::size_t ia = 0; ia < a.data_.size(); ++ia) {
            if (Carrier<S>::is_zero(a.data_[ia])) continue;
            for (std::size_t ib = 0; ib < b.data_.size(); ++ib) {
                if (Carrier<S>::is_zero(b.data_[ib])) continue;
                bool fits = true;
                std::size_t idx = 0;
                for (std::size_t v = 0; v < caps.size(); ++v) {
                    int g = cells[ia][v] + cells[ib][v];
                    if (g > caps[v]) {
                        fits = false;
                        break;
                    }
                    idx = idx * (static_cast<std::size_t>(caps[v]) + 1) + static_cast<std::size_t>(g);
                }
                if (!fits) continue;
                S term = a.data_[ia] * b.data_[ib];
                for (std::size_t v = 0; v < caps.size(); ++v)
                    term = term * choose[cells[ia][v] + cells[ib][v]][cells[ib][v]];
                out.data_[idx] += term;
            }
        }
        return out;
    }

    /// The jet with variable 0 retired: coefficients restricted to alpha0 = 0.
    TowerJet diff_other() const {
        if (var_count() == 0) throw dimension_error("diff_other on a zero-variable jet");
        TowerJet r(std::vector<int>(caps_.begin() + 1, caps_.end()));
        std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(r.data_.size()),
                  r.data_.begin());
        return r;
    }

    /// The derivative tower with respect to variable 0: coefficient of alpha
    /// is this jet's coefficient of alpha + e0. Requires caps[0] >= 1.
    TowerJet shift0() const {
        TowerJet r = lowered_caps0();
        std::copy(data_.begin() + static_cast<std::ptrdiff_t>(stride0()), data_.end(),
                  r.data_.begin());
        return r;
    }

    /// Truncation of variable 0's cap by one.
    TowerJet truncate0() const {
        TowerJet r = lowered_caps0();
        std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(r.data_.size()),
                  r.data_.begin());
        return r;
    }

    /// Writes an (n-1)-variable jet into the alpha0 = 0 slice.
    void assign_zero_slice(const TowerJet& sub) {
        std::copy(sub.data_.begin(), sub.data_.end(), data_.begin());
    }

    /// Writes a caps0-lowered jet into the alpha0 >= 1 tail.
    void assign_shifted(const TowerJet& prod) {
        std::copy(prod.data_.begin(), prod.data_.end(),
                  data_.begin() + static_cast<std::ptrdiff_t>(stride0()));
    }

    void check_caps(const TowerJet& o) const {
        if (caps_ != o.caps_) throw dimension_error("jet caps mismatch");
    }

private:
    void check_len(const Exponents& alpha) const {
        if (alpha.size() != caps_.size())
            throw dimension_error("jet multi-index length mismatch");
    }

    std::size_t stride0() const { return data_.size() / (static_cast<std::size_t>(caps_[0]) + 1); }

    TowerJet lowered_caps0() const {
        if (var_count() == 0 || caps_[0] < 1)
            throw dimension_error("jet has no derivative branch in variable 0");
        std::vector<int> caps = caps_;
        --caps[0];
        return TowerJet(std::move(caps));
    }

    std::vector<int> caps_;
    std::vector<S> data_;
};

template <class S>
TowerJet<S> diff_other(const TowerJet<S>& x) {
    return x.diff_other();
}

/// Truncated power series: same shape as a tower, but the coefficient of
/// X^alpha is the Taylor coefficient D^alpha(f)/alpha!.
template <class S>
class TaylorPoly {
public:
    explicit TaylorPoly(std::vector<int> caps)
        : caps_(std::move(caps)), data_(detail::box_size(caps_), S(0)) {}

    int var_count() const { return static_cast<int>(caps_.size()); }
    const std::vector<int>& caps() const { return caps_; }
    const std::vector<S>& data() const { return data_; }

    const S& coeff(const Exponents& alpha) const {
        return data_[detail::box_index(caps_, alpha)];
    }
    void set_coeff(const Exponents& alpha, S v) {
        data_[detail::box_index(caps_, alpha)] = std::move(v);
    }

private:
    std::vector<int> caps_;
    std::vector<S> data_;
};

/// Reciprocal factorial transform: divide each coefficient by alpha!.
template <class S>
TaylorPoly<S> rf(const TowerJet<S>& t) {
    TaylorPoly<S> p(t.caps());
    detail::for_each_cell(t.caps(), [&](const Exponents& alpha, std::size_t flat) {
        S fact = Carrier<S>::constant(t.value(), Rational(multi_factorial(alpha)));
        p.set_coeff(alpha, Carrier<S>::div(t.data()[flat], fact));
    });
    return p;
}

/// Inverse transform: multiply each coefficient by alpha!.
template <class S>
TowerJet<S> rf_inv(const TaylorPoly<S>& p) {
    TowerJet<S> t(p.caps());
    detail::for_each_cell(p.caps(), [&](const Exponents& alpha, std::size_t flat) {
        S fact = Carrier<S>::constant(p.data()[0], Rational(multi_factorial(alpha)));
        t.set_coeff(alpha, p.data()[flat] * fact);
    });
    return t;
}

/// Unary lift skeleton shared by the rule table and parameterized rules:
/// value branch applies `value_of`, the variable-0 derivative branch
/// multiplies the shifted tower by `deriv_at(truncated jet)`, and the
/// remaining branch recurses with variable 0 retired.
template <class S, class VF, class DF>
TowerJet<S> lift_unary_with(const VF& value_of, const DF& deriv_at, const TowerJet<S>& x) {
    if (x.var_count() == 0) return TowerJet<S>::from_value(value_of(x.value()));
    TowerJet<S> out(x.caps());
    out.assign_zero_slice(lift_unary_with(value_of, deriv_at, x.diff_other()));
    if (x.caps()[0] >= 1) {
        TowerJet<S> dfx = deriv_at(x.truncate0());
        out.assign_shifted(x.shift0() * dfx);
    }
    return out;
}

template <class S>
TowerJet<S> lift_unary(Func f, const TowerJet<S>& x);

template <class S>
struct Carrier<TowerJet<S>> {
    using J = TowerJet<S>;
    static J constant(const J& like, const Rational& r) {
        return J::constant(like.caps(), Carrier<S>::constant(like.value(), r));
    }
    static J pi(const J& like) {
        return J::constant(like.caps(), Carrier<S>::pi(like.value()));
    }
    static J euler(const J& like) {
        return J::constant(like.caps(), Carrier<S>::euler(like.value()));
    }
    static J symbol(const J& like, const std::string& name) {
        return J::constant(like.caps(), Carrier<S>::symbol(like.value(), name));
    }
    static J div(const J& a, const J& b) {
        if (b.is_constant()) {
            J r = a;
            J out(a.caps());
            detail::for_each_cell(a.caps(), [&](const Exponents& alpha, std::size_t) {
                out.set_coeff(alpha, Carrier<S>::div(a.coeff(alpha), b.value()));
            });
            return out;
        }
        return a * lift_unary(Func::recip, b);
    }
    static J pow_scalar(const J& x, const J& c) {
        if (!c.is_constant()) throw domain_error("pow exponent must be a constant jet");
        return weilad::pow_scalar(x, c.value());
    }
    static bool is_zero(const J& x) {
        for (const auto& c : x.data())
            if (!Carrier<S>::is_zero(c)) return false;
        return true;
    }
    static J apply(Func f, const J& x) { return lift_unary(f, x); }
};

template <class S>
TowerJet<S> lift_unary(Func f, const TowerJet<S>& x) {
    const DerivativeRule& rule = rule_for(f);
    auto value_of = [f](const S& v) { return Carrier<S>::apply(f, v); };
    auto deriv_at = [&rule](const TowerJet<S>& xt) {
        const TowerJet<S> args[1] = {xt};
        return eval_expr<TowerJet<S>>(rule.partials[0], std::span<const TowerJet<S>>(args), xt);
    };
    return lift_unary_with(value_of, deriv_at, x);
}

template <class S>
TowerJet<S> recip(const TowerJet<S>& x) {
    return lift_unary(Func::recip, x);
}

/// x^c for a scalar exponent, by the rule d/dx = c * x^(c-1).
template <class S>
TowerJet<S> pow_scalar(const TowerJet<S>& x, const S& c) {
    auto value_of = [&c](const S& v) { return Carrier<S>::pow_scalar(v, c); };
    auto deriv_at = [&c](const TowerJet<S>& xt) {
        S cm1 = c - Carrier<S>::constant(c, Rational(1));
        return pow_scalar(xt, cm1).scaled(c);
    };
    return lift_unary_with(value_of, deriv_at, x);
}

}  // namespace weilad
