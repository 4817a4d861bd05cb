#include "weilad/expr.hpp"

#include <algorithm>
#include <cctype>

#include "weilad/rules.hpp"

namespace weilad {

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

bool is_const(const ExprPtr& e) { return e->kind == Expr::Kind::constant; }
bool is_const(const ExprPtr& e, const Rational& v) {
    return e->kind == Expr::Kind::constant && e->value == v;
}

}  // namespace

std::string_view func_name(Func f) {
    switch (f) {
        case Func::recip: return "recip";
        case Func::sqrt: return "sqrt";
        case Func::exp: return "exp";
        case Func::log: return "log";
        case Func::sin: return "sin";
        case Func::cos: return "cos";
        case Func::tan: return "tan";
        case Func::sinh: return "sinh";
        case Func::cosh: return "cosh";
        case Func::tanh: return "tanh";
        case Func::asin: return "asin";
        case Func::acos: return "acos";
        case Func::atan: return "atan";
    }
    return "?";
}

std::optional<Func> func_from_name(std::string_view name) {
    static const std::pair<std::string_view, Func> table[] = {
        {"recip", Func::recip}, {"sqrt", Func::sqrt}, {"exp", Func::exp},
        {"log", Func::log},     {"sin", Func::sin},   {"cos", Func::cos},
        {"tan", Func::tan},     {"sinh", Func::sinh}, {"cosh", Func::cosh},
        {"tanh", Func::tanh},   {"asin", Func::asin}, {"acos", Func::acos},
        {"atan", Func::atan},
    };
    for (auto [n, f] : table)
        if (n == name) return f;
    return std::nullopt;
}

ExprPtr make_var(int index) { return node({.kind = Expr::Kind::var, .var_index = index}); }
ExprPtr make_const(Rational v) {
    return node({.kind = Expr::Kind::constant, .value = std::move(v)});
}
ExprPtr make_pi() { return node({.kind = Expr::Kind::pi}); }
ExprPtr make_euler() { return node({.kind = Expr::Kind::euler}); }
ExprPtr make_symbol(std::string name) {
    return node({.kind = Expr::Kind::symbol, .name = std::move(name)});
}
ExprPtr make_neg(ExprPtr a) { return node({.kind = Expr::Kind::neg, .a = std::move(a)}); }
ExprPtr make_add(ExprPtr a, ExprPtr b) {
    return node({.kind = Expr::Kind::add, .a = std::move(a), .b = std::move(b)});
}
ExprPtr make_sub(ExprPtr a, ExprPtr b) {
    return node({.kind = Expr::Kind::sub, .a = std::move(a), .b = std::move(b)});
}
ExprPtr make_mul(ExprPtr a, ExprPtr b) {
    return node({.kind = Expr::Kind::mul, .a = std::move(a), .b = std::move(b)});
}
ExprPtr make_div(ExprPtr a, ExprPtr b) {
    return node({.kind = Expr::Kind::div, .a = std::move(a), .b = std::move(b)});
}
ExprPtr make_pow(ExprPtr a, int exponent) {
    return node({.kind = Expr::Kind::pow, .exponent = exponent, .a = std::move(a)});
}
ExprPtr make_apply(Func f, ExprPtr a) {
    return node({.kind = Expr::Kind::apply, .func = f, .a = std::move(a)});
}

ExprPtr fold_neg(ExprPtr a) {
    if (is_const(a)) return make_const(-a->value);
    if (a->kind == Expr::Kind::neg) return a->a;
    return make_neg(std::move(a));
}

ExprPtr fold_add(ExprPtr a, ExprPtr b) {
    if (is_const(a) && is_const(b)) return make_const(a->value + b->value);
    if (is_const(a, 0)) return b;
    if (is_const(b, 0)) return a;
    return make_add(std::move(a), std::move(b));
}

ExprPtr fold_sub(ExprPtr a, ExprPtr b) {
    if (is_const(a) && is_const(b)) return make_const(a->value - b->value);
    if (is_const(b, 0)) return a;
    if (is_const(a, 0)) return fold_neg(std::move(b));
    return make_sub(std::move(a), std::move(b));
}

ExprPtr fold_mul(ExprPtr a, ExprPtr b) {
    if (is_const(a) && is_const(b)) return make_const(a->value * b->value);
    if (is_const(a, 0) || is_const(b, 0)) return make_const(0);
    if (is_const(a, 1)) return b;
    if (is_const(b, 1)) return a;
    return make_mul(std::move(a), std::move(b));
}

ExprPtr fold_div(ExprPtr a, ExprPtr b) {
    if (is_const(b, 1)) return a;
    if (is_const(a, 0) && !is_const(b, 0)) return make_const(0);
    if (is_const(a) && is_const(b) && b->value != 0) return make_const(a->value / b->value);
    return make_div(std::move(a), std::move(b));
}

ExprPtr fold_pow(ExprPtr a, int exponent) {
    if (exponent == 0) return make_const(1);
    if (exponent == 1) return a;
    if (is_const(a)) {
        if (exponent > 0) {
            Rational r = 1;
            for (int i = 0; i < exponent; ++i) r *= a->value;
            return make_const(r);
        }
        if (a->value != 0) {
            Rational r = 1;
            for (int i = 0; i < -exponent; ++i) r *= a->value;
            return make_const(Rational(1) / r);
        }
    }
    return make_pow(std::move(a), exponent);
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Expr::Kind::var: return a->var_index == b->var_index;
        case Expr::Kind::constant: return a->value == b->value;
        case Expr::Kind::pi:
        case Expr::Kind::euler: return true;
        case Expr::Kind::symbol: return a->name == b->name;
        case Expr::Kind::neg: return expr_equal(a->a, b->a);
        case Expr::Kind::add:
        case Expr::Kind::sub:
        case Expr::Kind::mul:
        case Expr::Kind::div: return expr_equal(a->a, b->a) && expr_equal(a->b, b->b);
        case Expr::Kind::pow: return a->exponent == b->exponent && expr_equal(a->a, b->a);
        case Expr::Kind::apply: return a->func == b->func && expr_equal(a->a, b->a);
    }
    return false;
}

int expr_arity(const ExprPtr& e) {
    int m = 0;
    if (e->kind == Expr::Kind::var) m = e->var_index + 1;
    if (e->a) m = std::max(m, expr_arity(e->a));
    if (e->b) m = std::max(m, expr_arity(e->b));
    return m;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class Type { number, name, op, end };
    Type type;
    std::string text;
    Rational value;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ >= text_.size()) {
            current_ = {Token::Type::end, "", 0, pos_};
            return;
        }
        std::size_t start = pos_;
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '.') {
                ++pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw parse_error("malformed decimal literal", start);
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
            std::string lit(text_.substr(start, pos_ - start));
            current_ = {Token::Type::number, lit, rational_from_string(lit), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_ = {Token::Type::name, std::string(text_.substr(start, pos_ - start)), 0, start};
            return;
        }
        if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
            ++pos_;
            current_ = {Token::Type::op, std::string(1, c), 0, start};
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> variables, ParseOptions opts)
        : lex_(text), vars_(variables), opts_(opts) {}

    ExprPtr parse() {
        ExprPtr e = expression();
        const Token& t = lex_.peek();
        if (t.type != Token::Type::end)
            throw parse_error("unexpected trailing input '" + t.text + "'", t.pos);
        return e;
    }

private:
    bool at_op(const char* s) const {
        return lex_.peek().type == Token::Type::op && lex_.peek().text == s;
    }

    ExprPtr expression() {
        ExprPtr e = term();
        while (at_op("+") || at_op("-")) {
            bool plus = at_op("+");
            lex_.take();
            ExprPtr r = term();
            e = plus ? make_add(std::move(e), std::move(r)) : make_sub(std::move(e), std::move(r));
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (at_op("*") || at_op("/")) {
            bool times = at_op("*");
            lex_.take();
            ExprPtr r = factor();
            if (times) {
                e = make_mul(std::move(e), std::move(r));
            } else if (e->kind == Expr::Kind::constant && r->kind == Expr::Kind::constant &&
                       r->value != 0) {
                // Rational literal: 3/4 denotes a constant, not a division.
                e = make_const(e->value / r->value);
            } else {
                e = make_div(std::move(e), std::move(r));
            }
        }
        return e;
    }

    ExprPtr factor() {
        if (at_op("-")) {
            lex_.take();
            ExprPtr inner = factor();
            if (inner->kind == Expr::Kind::constant) return make_const(-inner->value);
            return make_neg(std::move(inner));
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        while (at_op("^")) {
            lex_.take();
            bool negative = false;
            if (at_op("-")) {
                lex_.take();
                negative = true;
            }
            Token t = lex_.take();
            if (t.type != Token::Type::number || denominator(t.value) != 1)
                throw parse_error("expected an integer exponent after '^'", t.pos);
            long long e = numerator(t.value).convert_to<long long>();
            base = make_pow(std::move(base), static_cast<int>(negative ? -e : e));
        }
        return base;
    }

    ExprPtr atom() {
        Token t = lex_.take();
        if (t.type == Token::Type::number) return make_const(t.value);
        if (t.type == Token::Type::op && t.text == "(") {
            ExprPtr e = expression();
            expect(")");
            return e;
        }
        if (t.type == Token::Type::name) {
            if (at_op("(")) {
                auto f = func_from_name(t.text);
                if (!f) throw parse_error("unknown function '" + t.text + "'", t.pos);
                lex_.take();
                ExprPtr arg = expression();
                expect(")");
                return make_apply(*f, std::move(arg));
            }
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == t.text) return make_var(static_cast<int>(i));
            if (t.text == "pi") return make_pi();
            if (t.text == "e") return make_euler();
            if (opts_.allow_free_symbols) return make_symbol(t.text);
            throw parse_error("unknown identifier '" + t.text + "'", t.pos);
        }
        throw parse_error(t.type == Token::Type::end ? "unexpected end of input"
                                                     : "unexpected token '" + t.text + "'",
                          t.pos);
    }

    void expect(const char* s) {
        const Token& t = lex_.peek();
        if (!(t.type == Token::Type::op && t.text == s))
            throw parse_error(std::string("expected '") + s + "'", t.pos);
        lex_.take();
    }

    Lexer lex_;
    std::span<const std::string> vars_;
    ParseOptions opts_;
};

}  // namespace

ExprPtr parse_expr(std::string_view text, std::span<const std::string> variables,
                   ParseOptions opts) {
    return Parser(text, variables, opts).parse();
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

// Binding strength for parenthesization; pow bases must be atoms.
constexpr int kAdd = 10, kNeg = 20, kMul = 30, kAtom = 50;

int expr_level(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return kAdd;
        case Expr::Kind::neg: return kNeg;
        case Expr::Kind::mul:
        case Expr::Kind::div: return kMul;
        case Expr::Kind::pow: return 40;
        case Expr::Kind::constant: return e.value < 0 ? kNeg : kAtom;
        default: return kAtom;
    }
}

void print_rec(const ExprPtr& e, std::span<const std::string> names, int min_level,
               std::string& out) {
    const bool parens = expr_level(*e) < min_level;
    if (parens) out += "(";
    switch (e->kind) {
        case Expr::Kind::var:
            out += e->var_index < static_cast<int>(names.size())
                       ? names[e->var_index]
                       : "x" + std::to_string(e->var_index);
            break;
        case Expr::Kind::constant: out += to_string(e->value); break;
        case Expr::Kind::pi: out += "pi"; break;
        case Expr::Kind::euler: out += "e"; break;
        case Expr::Kind::symbol: out += e->name; break;
        case Expr::Kind::neg:
            out += "-";
            print_rec(e->a, names, kNeg, out);
            break;
        case Expr::Kind::add:
            print_rec(e->a, names, kAdd, out);
            out += " + ";
            print_rec(e->b, names, kAdd + 1, out);
            break;
        case Expr::Kind::sub:
            print_rec(e->a, names, kAdd, out);
            out += " - ";
            print_rec(e->b, names, kAdd + 1, out);
            break;
        case Expr::Kind::mul:
            print_rec(e->a, names, kMul, out);
            out += " * ";
            print_rec(e->b, names, kMul + 1, out);
            break;
        case Expr::Kind::div:
            print_rec(e->a, names, kMul, out);
            out += " / ";
            print_rec(e->b, names, kMul + 1, out);
            break;
        case Expr::Kind::pow:
            print_rec(e->a, names, kAtom, out);
            out += " ^ " + std::to_string(e->exponent);
            break;
        case Expr::Kind::apply:
            out += std::string(func_name(e->func)) + "(";
            print_rec(e->a, names, 0, out);
            out += ")";
            break;
    }
    if (parens) out += ")";
}

}  // namespace

std::string print_expr(const ExprPtr& e, std::span<const std::string> var_names) {
    std::string out;
    print_rec(e, var_names, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Normalisation
// ---------------------------------------------------------------------------

namespace {

void collect_mul(const ExprPtr& e, std::vector<ExprPtr>& factors, Rational& c) {
    if (e->kind == Expr::Kind::mul) {
        collect_mul(e->a, factors, c);
        collect_mul(e->b, factors, c);
    } else if (e->kind == Expr::Kind::constant) {
        c *= e->value;
    } else {
        factors.push_back(e);
    }
}

void collect_add(const ExprPtr& e, std::vector<ExprPtr>& terms, Rational& c) {
    if (e->kind == Expr::Kind::add) {
        collect_add(e->a, terms, c);
        collect_add(e->b, terms, c);
    } else if (e->kind == Expr::Kind::constant) {
        c += e->value;
    } else {
        terms.push_back(e);
    }
}

ExprPtr chain(std::vector<ExprPtr> parts, ExprPtr (*join)(ExprPtr, ExprPtr)) {
    ExprPtr out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out = join(std::move(out), parts[i]);
    return out;
}

}  // namespace

ExprPtr normalise(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::var:
        case Expr::Kind::constant:
        case Expr::Kind::pi:
        case Expr::Kind::euler:
        case Expr::Kind::symbol: return e;
        case Expr::Kind::neg: return fold_neg(normalise(e->a));
        case Expr::Kind::sub: return fold_sub(normalise(e->a), normalise(e->b));
        case Expr::Kind::div: return fold_div(normalise(e->a), normalise(e->b));
        case Expr::Kind::pow: return fold_pow(normalise(e->a), e->exponent);
        case Expr::Kind::apply: return make_apply(e->func, normalise(e->a));
        case Expr::Kind::add: {
            Rational c = 0;
            std::vector<ExprPtr> terms;
            collect_add(fold_add(normalise(e->a), normalise(e->b)), terms, c);
            if (terms.empty()) return make_const(c);
            ExprPtr out = chain(std::move(terms), make_add);
            if (c != 0) out = make_add(std::move(out), make_const(c));
            return out;
        }
        case Expr::Kind::mul: {
            Rational c = 1;
            std::vector<ExprPtr> factors;
            collect_mul(fold_mul(normalise(e->a), normalise(e->b)), factors, c);
            if (c == 0 || factors.empty()) return make_const(c);
            ExprPtr out = chain(std::move(factors), make_mul);
            if (c != 1) out = make_mul(make_const(c), std::move(out));
            return out;
        }
    }
    return e;
}

// ---------------------------------------------------------------------------
// Symbolic differentiation (term rewriting)
// ---------------------------------------------------------------------------

ExprPtr substitute_var(const ExprPtr& e, int index, const ExprPtr& replacement) {
    switch (e->kind) {
        case Expr::Kind::var: return e->var_index == index ? replacement : e;
        case Expr::Kind::constant:
        case Expr::Kind::pi:
        case Expr::Kind::euler:
        case Expr::Kind::symbol: return e;
        case Expr::Kind::neg: return make_neg(substitute_var(e->a, index, replacement));
        case Expr::Kind::add:
            return make_add(substitute_var(e->a, index, replacement),
                            substitute_var(e->b, index, replacement));
        case Expr::Kind::sub:
            return make_sub(substitute_var(e->a, index, replacement),
                            substitute_var(e->b, index, replacement));
        case Expr::Kind::mul:
            return make_mul(substitute_var(e->a, index, replacement),
                            substitute_var(e->b, index, replacement));
        case Expr::Kind::div:
            return make_div(substitute_var(e->a, index, replacement),
                            substitute_var(e->b, index, replacement));
        case Expr::Kind::pow:
            return make_pow(substitute_var(e->a, index, replacement), e->exponent);
        case Expr::Kind::apply:
            return make_apply(e->func, substitute_var(e->a, index, replacement));
    }
    return e;
}

ExprPtr substitute_symbol(const ExprPtr& e, const std::string& name,
                          const ExprPtr& replacement) {
    switch (e->kind) {
        case Expr::Kind::symbol: return e->name == name ? replacement : e;
        case Expr::Kind::var:
        case Expr::Kind::constant:
        case Expr::Kind::pi:
        case Expr::Kind::euler: return e;
        case Expr::Kind::neg: return make_neg(substitute_symbol(e->a, name, replacement));
        case Expr::Kind::add:
            return make_add(substitute_symbol(e->a, name, replacement),
                            substitute_symbol(e->b, name, replacement));
        case Expr::Kind::sub:
            return make_sub(substitute_symbol(e->a, name, replacement),
                            substitute_symbol(e->b, name, replacement));
        case Expr::Kind::mul:
            return make_mul(substitute_symbol(e->a, name, replacement),
                            substitute_symbol(e->b, name, replacement));
        case Expr::Kind::div:
            return make_div(substitute_symbol(e->a, name, replacement),
                            substitute_symbol(e->b, name, replacement));
        case Expr::Kind::pow:
            return make_pow(substitute_symbol(e->a, name, replacement), e->exponent);
        case Expr::Kind::apply:
            return make_apply(e->func, substitute_symbol(e->a, name, replacement));
    }
    return e;
}

ExprPtr symbolic_partial(const ExprPtr& e, int var) {
    switch (e->kind) {
        case Expr::Kind::var: return make_const(e->var_index == var ? 1 : 0);
        case Expr::Kind::constant:
        case Expr::Kind::pi:
        case Expr::Kind::euler:
        case Expr::Kind::symbol: return make_const(0);
        case Expr::Kind::neg: return fold_neg(symbolic_partial(e->a, var));
        case Expr::Kind::add:
            return fold_add(symbolic_partial(e->a, var), symbolic_partial(e->b, var));
        case Expr::Kind::sub:
            return fold_sub(symbolic_partial(e->a, var), symbolic_partial(e->b, var));
        case Expr::Kind::mul:
            return fold_add(fold_mul(symbolic_partial(e->a, var), e->b),
                            fold_mul(e->a, symbolic_partial(e->b, var)));
        case Expr::Kind::div:
            return fold_div(fold_sub(fold_mul(symbolic_partial(e->a, var), e->b),
                                     fold_mul(e->a, symbolic_partial(e->b, var))),
                            fold_pow(e->b, 2));
        case Expr::Kind::pow:
            return fold_mul(fold_mul(make_const(e->exponent), fold_pow(e->a, e->exponent - 1)),
                            symbolic_partial(e->a, var));
        case Expr::Kind::apply: {
            const DerivativeRule& rule = rule_for(e->func);
            ExprPtr outer = substitute_var(rule.partials.at(0), 0, e->a);
            return fold_mul(std::move(outer), symbolic_partial(e->a, var));
        }
    }
    return make_const(0);
}

// ---------------------------------------------------------------------------
// Polynomial text
// ---------------------------------------------------------------------------

std::vector<Polynomial<Rational>> parse_polynomial_list(std::string_view text,
                                                        std::span<const std::string> variables) {
    const int n = static_cast<int>(variables.size());
    std::vector<Polynomial<Rational>> args;
    for (int i = 0; i < n; ++i) args.push_back(Polynomial<Rational>::variable(n, i));
    Polynomial<Rational> proto(n);

    std::vector<Polynomial<Rational>> out;
    std::size_t start = 0;
    int depth = 0;
    auto flush = [&](std::size_t end) {
        std::string_view piece = text.substr(start, end - start);
        if (piece.find_first_not_of(" \t\r\n") == std::string_view::npos)
            throw parse_error("empty polynomial entry", start);
        ExprPtr e = parse_expr(piece, variables);
        out.push_back(eval_expr<Polynomial<Rational>>(
            e, std::span<const Polynomial<Rational>>(args), proto));
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    flush(text.size());
    return out;
}

}  // namespace weilad
