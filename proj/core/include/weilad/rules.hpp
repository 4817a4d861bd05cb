#pragma once

#include <vector>

#include "weilad/expr.hpp"

namespace weilad {

/// First partial derivatives of an elementary function, expressed over the
/// same vocabulary (partial i with respect to argument i, written in
/// Var(0)..Var(arity-1)). Higher orders arise from recursion.
struct DerivativeRule {
    Func func;
    int arity = 1;
    std::vector<ExprPtr> partials;
};

/// Shipped rule table; the extension point for a larger smooth vocabulary.
const DerivativeRule& rule_for(Func f);

}  // namespace weilad
