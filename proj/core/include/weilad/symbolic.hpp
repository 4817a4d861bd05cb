#pragma once

#include <string>
#include <utility>

#include "weilad/expr.hpp"

namespace weilad {

/// Expression-valued scalar: closed under field operations and the
/// elementary vocabulary, used as a coefficient carrier for symbolic
/// differentiation through jets and Weil elements. Arithmetic folds
/// constants and 0/1 identities so intermediate trees stay small.
class Symbolic {
public:
    Symbolic() : node_(make_const(0)) {}
    Symbolic(int v) : node_(make_const(Rational(v))) {}
    Symbolic(Rational v) : node_(make_const(std::move(v))) {}
    explicit Symbolic(ExprPtr node) : node_(std::move(node)) {}

    static Symbolic variable(std::string name) { return Symbolic(make_symbol(std::move(name))); }

    const ExprPtr& node() const { return node_; }

    friend Symbolic operator+(const Symbolic& a, const Symbolic& b) {
        return Symbolic(fold_add(a.node_, b.node_));
    }
    friend Symbolic operator-(const Symbolic& a, const Symbolic& b) {
        return Symbolic(fold_sub(a.node_, b.node_));
    }
    friend Symbolic operator*(const Symbolic& a, const Symbolic& b) {
        return Symbolic(fold_mul(a.node_, b.node_));
    }
    Symbolic operator-() const { return Symbolic(fold_neg(node_)); }

    Symbolic& operator+=(const Symbolic& o) { return *this = *this + o; }
    Symbolic& operator-=(const Symbolic& o) { return *this = *this - o; }
    Symbolic& operator*=(const Symbolic& o) { return *this = *this * o; }

    bool operator==(const Symbolic& o) const { return expr_equal(node_, o.node_); }

    std::string str() const { return print_expr(node_); }

private:
    ExprPtr node_;
};

template <>
struct Carrier<Symbolic> {
    static Symbolic constant(const Symbolic&, const Rational& r) { return Symbolic(r); }
    static Symbolic pi(const Symbolic&) { return Symbolic(make_pi()); }
    static Symbolic euler(const Symbolic&) { return Symbolic(make_euler()); }
    static Symbolic symbol(const Symbolic&, const std::string& name) {
        return Symbolic::variable(name);
    }
    static Symbolic div(const Symbolic& a, const Symbolic& b) {
        if (is_zero(b)) throw domain_error("division by zero");
        return Symbolic(fold_div(a.node(), b.node()));
    }
    static Symbolic pow_scalar(const Symbolic& x, const Symbolic& c) {
        return apply(Func::exp, Symbolic(fold_mul(c.node(), make_apply(Func::log, x.node()))));
    }
    static bool is_zero(const Symbolic& x) {
        return x.node()->kind == Expr::Kind::constant && x.node()->value == 0;
    }
    static Symbolic apply(Func f, const Symbolic& x) {
        return Symbolic(make_apply(f, x.node()));
    }
};

}  // namespace weilad
