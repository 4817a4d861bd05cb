#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weilad/errors.hpp"
#include "weilad/polynomial.hpp"
#include "weilad/rational.hpp"

namespace weilad {

/// Elementary smooth functions with shipped derivative rules. Negation and
/// integer powers are structural AST nodes, not table entries.
enum class Func {
    recip,
    sqrt,
    exp,
    log,
    sin,
    cos,
    tan,
    sinh,
    cosh,
    tanh,
    asin,
    acos,
    atan,
};

std::string_view func_name(Func f);
std::optional<Func> func_from_name(std::string_view name);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// AST node of a smooth function built from field operations and the
/// elementary vocabulary. Evaluable over any scalar carrier.
struct Expr {
    enum class Kind { var, constant, pi, euler, symbol, neg, add, sub, mul, div, pow, apply };

    Kind kind;
    int var_index = -1;   // var
    Rational value;       // constant
    std::string name;     // symbol
    Func func{};          // apply
    int exponent = 0;     // pow
    ExprPtr a, b;
};

// Raw node constructors (no simplification; the parser builds with these).
ExprPtr make_var(int index);
ExprPtr make_const(Rational value);
ExprPtr make_pi();
ExprPtr make_euler();
ExprPtr make_symbol(std::string name);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_mul(ExprPtr a, ExprPtr b);
ExprPtr make_div(ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr a, int exponent);
ExprPtr make_apply(Func f, ExprPtr a);

// Folding constructors: constant folding and 0/1 identities only. These are
// what symbolic arithmetic and the derivative rules build with.
ExprPtr fold_neg(ExprPtr a);
ExprPtr fold_add(ExprPtr a, ExprPtr b);
ExprPtr fold_sub(ExprPtr a, ExprPtr b);
ExprPtr fold_mul(ExprPtr a, ExprPtr b);
ExprPtr fold_div(ExprPtr a, ExprPtr b);
ExprPtr fold_pow(ExprPtr a, int exponent);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// 1 + largest variable index used, 0 for closed expressions.
int expr_arity(const ExprPtr& e);

struct ParseOptions {
    /// Unknown identifiers become free symbols instead of errors.
    bool allow_free_symbols = false;
};

/// Recursive-descent parser for the shared grammar: infix + - * /, ^ with an
/// integer exponent, f(...) application, constants pi and e, integer,
/// rational (3/4) and decimal literals. Whitespace-insensitive; positions in
/// errors are byte offsets.
ExprPtr parse_expr(std::string_view text, std::span<const std::string> variables,
                   ParseOptions opts = {});

/// Round-trippable rendering using the same grammar.
std::string print_expr(const ExprPtr& e, std::span<const std::string> var_names = {});

/// Light canonicalization: constant folding, 0/1 identity elimination,
/// double-negation removal, constants collected across add/mul chains.
/// Idempotent; no trigonometric or other identity rewriting.
ExprPtr normalise(const ExprPtr& e);

/// Exact symbolic partial derivative by term rewriting. Shares the
/// DerivativeRule table with the jet engine but none of its recursion, so
/// agreement between the two is evidence rather than tautology.
ExprPtr symbolic_partial(const ExprPtr& e, int var);

/// Replaces Var(index) with a subtree.
ExprPtr substitute_var(const ExprPtr& e, int index, const ExprPtr& replacement);

/// Replaces a named free symbol with a subtree.
ExprPtr substitute_symbol(const ExprPtr& e, const std::string& name, const ExprPtr& replacement);

/// Splits on top-level commas and converts each entry to a polynomial.
/// Rejects non-polynomial constructs (transcendentals, pi, division by a
/// non-constant).
std::vector<Polynomial<Rational>> parse_polynomial_list(std::string_view text,
                                                        std::span<const std::string> variables);

// ---------------------------------------------------------------------------
// Scalar carriers
// ---------------------------------------------------------------------------

/// Customization point connecting eval_expr to a scalar carrier. A carrier
/// provides field operators +,-,*,unary- plus the hooks below; jets and Weil
/// elements specialize this to become evaluation targets themselves.
template <class T>
struct Carrier;

template <>
struct Carrier<double> {
    static double constant(const double&, const Rational& r) { return to_double(r); }
    static double pi(const double&) { return std::numbers::pi; }
    static double euler(const double&) { return std::numbers::e; }
    static double symbol(const double&, const std::string& name) {
        throw domain_error("unbound symbol '" + name + "' in numeric evaluation");
    }
    static double div(double a, double b) {
        if (b == 0.0) throw domain_error("division by zero");
        return a / b;
    }
    static double pow_scalar(double x, double c) {
        if (x < 0.0) throw domain_error("pow of a negative base with non-integer exponent");
        if (x == 0.0 && c <= 0.0) throw domain_error("pow of zero with nonpositive exponent");
        return std::pow(x, c);
    }
    static bool is_zero(double x) { return x == 0.0; }
    static double apply(Func f, double x) {
        switch (f) {
            case Func::recip:
                if (x == 0.0) throw domain_error("recip at zero");
                return 1.0 / x;
            case Func::sqrt:
                if (x < 0.0) throw domain_error("sqrt of a negative value");
                return std::sqrt(x);
            case Func::exp: return std::exp(x);
            case Func::log:
                if (x <= 0.0) throw domain_error("log of a nonpositive value");
                return std::log(x);
            case Func::sin: return std::sin(x);
            case Func::cos: return std::cos(x);
            case Func::tan: return std::tan(x);
            case Func::sinh: return std::sinh(x);
            case Func::cosh: return std::cosh(x);
            case Func::tanh: return std::tanh(x);
            case Func::asin:
                if (x < -1.0 || x > 1.0) throw domain_error("asin outside [-1, 1]");
                return std::asin(x);
            case Func::acos:
                if (x < -1.0 || x > 1.0) throw domain_error("acos outside [-1, 1]");
                return std::acos(x);
            case Func::atan: return std::atan(x);
        }
        throw domain_error("unknown function");
    }
};

template <>
struct Carrier<Rational> {
    static Rational constant(const Rational&, const Rational& r) { return r; }
    static Rational pi(const Rational&) {
        throw domain_error("pi is not an exact rational");
    }
    static Rational euler(const Rational&) {
        throw domain_error("e is not an exact rational");
    }
    static Rational symbol(const Rational&, const std::string& name) {
        throw domain_error("unbound symbol '" + name + "' in exact evaluation");
    }
    static Rational div(const Rational& a, const Rational& b) {
        if (b == 0) throw domain_error("division by zero");
        return a / b;
    }
    static Rational pow_scalar(const Rational&, const Rational&) {
        throw domain_error("pow with scalar exponent on the exact-rational carrier");
    }
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational apply(Func f, const Rational&) {
        throw domain_error(std::string(func_name(f)) + " on the exact-rational carrier");
    }
};

/// Polynomials form a carrier for the field-free fragment; this is how ideal
/// text becomes Polynomial values.
template <>
struct Carrier<Polynomial<Rational>> {
    using P = Polynomial<Rational>;
    static P constant(const P& like, const Rational& r) { return P::constant(like.var_count(), r); }
    static P pi(const P&) { throw domain_error("pi is not allowed in a polynomial"); }
    static P euler(const P&) { throw domain_error("e is not allowed in a polynomial"); }
    static P symbol(const P&, const std::string& name) {
        throw domain_error("free symbol '" + name + "' is not allowed in a polynomial");
    }
    static P div(const P& a, const P& b) {
        if (b.is_zero()) throw domain_error("division by zero");
        if (b.terms().size() != 1 || !is_unit_monomial(b.terms().begin()->first))
            throw domain_error("polynomial division is restricted to constant divisors");
        return a.scaled(Rational(1) / b.terms().begin()->second);
    }
    static P pow_scalar(const P&, const P&) {
        throw domain_error("pow with scalar exponent is not allowed in a polynomial");
    }
    static bool is_zero(const P& p) { return p.is_zero(); }
    static P apply(Func f, const P&) {
        throw domain_error(std::string(func_name(f)) + " is not allowed in a polynomial");
    }
};

/// x^n by binary exponentiation over any carrier; x^1 returns x unchanged.
template <class T>
T carrier_pow(const T& x, int n) {
    if (n == 0) return Carrier<T>::constant(x, Rational(1));
    long long k = n < 0 ? -static_cast<long long>(n) : n;
    T base = x;
    std::optional<T> acc;
    while (k > 0) {
        if (k & 1) acc = acc ? *acc * base : base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    if (n < 0) return Carrier<T>::div(Carrier<T>::constant(x, Rational(1)), *acc);
    return *acc;
}

/// Structural fold of an expression over a carrier. `proto` supplies the
/// shape for constants (jet caps, Weil settings); the overload without it
/// uses the first argument.
template <class T>
T eval_expr(const ExprPtr& e, std::span<const T> args, const T& proto) {
    switch (e->kind) {
        case Expr::Kind::var:
            if (e->var_index < 0 || e->var_index >= static_cast<int>(args.size()))
                throw dimension_error("eval_expr: variable index out of range");
            return args[e->var_index];
        case Expr::Kind::constant: return Carrier<T>::constant(proto, e->value);
        case Expr::Kind::pi: return Carrier<T>::pi(proto);
        case Expr::Kind::euler: return Carrier<T>::euler(proto);
        case Expr::Kind::symbol: return Carrier<T>::symbol(proto, e->name);
        case Expr::Kind::neg: return -eval_expr(e->a, args, proto);
        case Expr::Kind::add: return eval_expr(e->a, args, proto) + eval_expr(e->b, args, proto);
        case Expr::Kind::sub: return eval_expr(e->a, args, proto) - eval_expr(e->b, args, proto);
        case Expr::Kind::mul: return eval_expr(e->a, args, proto) * eval_expr(e->b, args, proto);
        case Expr::Kind::div:
            return Carrier<T>::div(eval_expr(e->a, args, proto), eval_expr(e->b, args, proto));
        case Expr::Kind::pow: return carrier_pow(eval_expr(e->a, args, proto), e->exponent);
        case Expr::Kind::apply: return Carrier<T>::apply(e->func, eval_expr(e->a, args, proto));
    }
    throw domain_error("eval_expr: unknown node");
}

template <class T>
T eval_expr(const ExprPtr& e, std::span<const T> args) {
    if (args.empty()) throw dimension_error("eval_expr: no arguments to take a prototype from");
    return eval_expr(e, args, args[0]);
}

}  // namespace weilad
