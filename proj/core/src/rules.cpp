#include "weilad/rules.hpp"

#include <map>

namespace weilad {

namespace {

std::map<Func, DerivativeRule> build_rules() {
    const std::vector<std::string> x = {"x"};
    auto d = [&](Func f, const char* partial) {
        return std::pair{f, DerivativeRule{f, 1, {parse_expr(partial, x)}}};
    };
    return {
        d(Func::recip, "-(x ^ -2)"),
        d(Func::sqrt, "1 / (2 * sqrt(x))"),
        d(Func::exp, "exp(x)"),
        d(Func::log, "1 / x"),
        d(Func::sin, "cos(x)"),
        d(Func::cos, "-sin(x)"),
        d(Func::tan, "1 + tan(x) ^ 2"),
        d(Func::sinh, "cosh(x)"),
        d(Func::cosh, "sinh(x)"),
        d(Func::tanh, "1 - tanh(x) ^ 2"),
        d(Func::asin, "1 / sqrt(1 - x ^ 2)"),
        d(Func::acos, "-(1 / sqrt(1 - x ^ 2))"),
        d(Func::atan, "1 / (1 + x ^ 2)"),
    };
}

}  // namespace

const DerivativeRule& rule_for(Func f) {
    static const std::map<Func, DerivativeRule> rules = build_rules();
    return rules.at(f);
}

}  // namespace weilad
