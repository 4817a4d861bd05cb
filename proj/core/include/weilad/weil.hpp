#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weilad/groebner.hpp"
#include "weilad/monomial.hpp"
#include "weilad/rational.hpp"

namespace weilad {

/// Computable presentation of a Weil algebra W = R[X1..Xn]/I:
///  - `basis`:      monomial basis b_0..b_{l-1}, b_0 the unit, sorted
///                  ascending lexicographically (variable 0 most
///                  significant); this ordering is preserved by tensor
///                  products.
///  - `mult_table`: coefficient vector of b_i * b_j over the basis, stored
///                  for unordered pairs i <= j only.
///  - `max_powers`: k_i = largest power with X_i^{k_i} not in I.
///  - `non_van`:    representation of every monomial X^alpha with
///                  alpha <= k componentwise as a vector over the basis.
class WeilSettings {
public:
    WeilSettings(int var_count, std::vector<Exponents> basis, std::vector<int> max_powers,
                 std::map<std::pair<int, int>, std::vector<Rational>> mult_table,
                 std::map<Exponents, std::vector<Rational>> non_van);

    int var_count() const { return var_count_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<Exponents>& basis() const { return basis_; }
    const std::vector<int>& max_powers() const { return max_powers_; }
    const std::map<std::pair<int, int>, std::vector<Rational>>& mult_table() const {
        return mult_table_;
    }
    const std::map<Exponents, std::vector<Rational>>& non_van() const { return non_van_; }

    /// Product row for any (i, j); symmetry is reconstructed on read.
    const std::vector<Rational>& product(int i, int j) const;

    /// Representation of X^alpha, defined for alpha <= max_powers.
    const std::vector<Rational>& non_vanishing(const Exponents& alpha) const;

    /// Index of a basis monomial, or -1.
    int basis_index(const Exponents& e) const;

    /// Combinability: structural equality of basis, variable count and
    /// multiplication table.
    bool same_algebra(const WeilSettings& o) const;

private:
    int var_count_;
    std::vector<Exponents> basis_;
    std::vector<int> max_powers_;
    std::map<std::pair<int, int>, std::vector<Rational>> mult_table_;
    std::map<Exponents, std::vector<Rational>> non_van_;
    std::map<Exponents, int> basis_index_;
};

using SettingsPtr = std::shared_ptr<const WeilSettings>;

/// Outcome of the Weil-ness decision procedure: either settings or a reason
/// for `No`.
struct WeilTestResult {
    SettingsPtr settings;  // null iff not a Weil algebra
    std::string reason;    // set iff settings is null

    bool is_weil() const { return settings != nullptr; }
};

/// Decision procedure: Groebner basis, zero-dimensionality, per-variable
/// nilpotency via the monic generator of I /\ Q[X_i], then the
/// multiplication and non-vanishing-monomial tables.
/// `size_cap` bounds prod(k_i + 1); exceeding it throws size_limit_error.
WeilTestResult weil_test(const Ideal& ideal, long long size_cap = 1'000'000);

/// Dual numbers R[X]/(X^2), hard-coded.
SettingsPtr d1_settings();

/// R[X]/(X^m), m >= 1, hard-coded (m = 2 gives the dual numbers).
SettingsPtr dorder_settings(int m);

/// Weil settings of the tensor product W1 (x) W2: basis element j*l2 + k is
/// the product of basis j of W1 and basis k of W2; tables assemble by
/// Kronecker products of the component coefficient vectors.
SettingsPtr weil_tensor(const WeilSettings& w1, const WeilSettings& w2);

/// Kronecker product of coefficient vectors: out[j*l2 + k] = c[j] * d[k].
template <class S>
std::vector<S> kronecker(std::span<const S> c, std::span<const S> d) {
    std::vector<S> out;
    out.reserve(c.size() * d.size());
    for (const auto& cj : c)
        for (const auto& dk : d) out.push_back(cj * dk);
    return out;
}

std::string settings_to_json(const WeilSettings& s, int indent = 2);
SettingsPtr settings_from_json(const std::string& text);

/// Element of a Weil algebra: coefficient vector over the settings basis.
template <class S>
class WeilElement {
public:
    WeilElement(SettingsPtr settings, std::vector<S> coeffs)
        : settings_(std::move(settings)), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != settings_->dimension())
            throw dimension_error("WeilElement: coefficient vector length mismatch");
    }

    static WeilElement zero(SettingsPtr settings) {
        std::vector<S> c(settings->dimension(), S(0));
        return WeilElement(std::move(settings), std::move(c));
    }

    const SettingsPtr& settings() const { return settings_; }
    const std::vector<S>& coeffs() const { return coeffs_; }
    const S& coeff(int i) const { return coeffs_.at(i); }
    void set_coeff(int i, S v) { coeffs_.at(i) = std::move(v); }

    friend WeilElement operator+(const WeilElement& a, const WeilElement& b) {
        a.check_same(b);
        WeilElement r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        return r;
    }
    friend WeilElement operator-(const WeilElement& a, const WeilElement& b) {
        a.check_same(b);
        WeilElement r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] - b.coeffs_[i];
        return r;
    }
    WeilElement operator-() const {
        WeilElement r = *this;
        for (auto& c : r.coeffs_) c = S(0) - c;
        return r;
    }

    WeilElement scaled(const S& k) const {
        WeilElement r = *this;
        for (auto& c : r.coeffs_) c = c * k;
        return r;
    }
    friend WeilElement operator*(const S& k, const WeilElement& u) { return u.scaled(k); }
    friend WeilElement operator*(const WeilElement& u, const S& k) { return u.scaled(k); }

    /// Bilinear product through the multiplication table.
    friend WeilElement operator*(const WeilElement& a, const WeilElement& b) {
        a.check_same(b);
        const int l = a.settings_->dimension();
        WeilElement r = zero(a.settings_);
        for (int i = 0; i < l; ++i) {
            if (a.coeffs_[i] == S(0)) continue;
            for (int j = 0; j < l; ++j) {
                if (b.coeffs_[j] == S(0)) continue;
                S uv = a.coeffs_[i] * b.coeffs_[j];
                const auto& row = a.settings_->product(i, j);
                for (int t = 0; t < l; ++t) {
                    if (row[t] == 0) continue;
                    r.coeffs_[t] += uv * S(row[t]);
                }
            }
        }
        return r;
    }

    void check_same(const WeilElement& o) const {
        if (settings_ == o.settings_) return;
        if (!settings_->same_algebra(*o.settings_))
            throw algebra_mismatch("Weil elements from different algebras");
    }

private:
    SettingsPtr settings_;
    std::vector<S> coeffs_;
};

/// Constant embedded at the unit basis element.
template <class S>
WeilElement<S> inject_coeff(const S& c, SettingsPtr settings) {
    auto u = WeilElement<S>::zero(std::move(settings));
    u.set_coeff(0, c);
    return u;
}

/// The class [X_i]: the non-vanishing representation of e_i, or the zero
/// element when k_i = 0 (the variable collapsed).
template <class S>
WeilElement<S> generator(SettingsPtr settings, int i) {
    if (i < 0 || i >= settings->var_count())
        throw dimension_error("generator: variable index out of range");
    auto u = WeilElement<S>::zero(settings);
    Exponents e = var_monomial(settings->var_count(), i);
    if (!leq_componentwise(e, settings->max_powers())) return u;
    const auto& rep = settings->non_vanishing(e);
    for (int t = 0; t < settings->dimension(); ++t) u.set_coeff(t, S(rep[t]));
    return u;
}

}  // namespace weilad
