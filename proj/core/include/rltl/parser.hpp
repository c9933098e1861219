#pragma once

#include <string_view>

#include "rltl/formula.hpp"
#include "rltl/semantics.hpp"

namespace rltl {

enum class Dialect { Robust, Ltl };

/// Parses the concrete syntax shared by both dialects.
///
/// Precedence from tightest to loosest: prefix operators (! X G F), then
/// U and R (right associative), then &, then |, then => (right associative).
/// Throws SyntaxError carrying the byte offset and the expected tokens.
NodePtr parse_formula(std::string_view text);

RobustFormula parse_robust(std::string_view text);
LtlFormula parse_ltl(std::string_view text);

/// Parses "{p} {} | {p,q}": stem letters, a bar, then the (nonempty) loop.
LassoWord parse_lasso(std::string_view text);

}  // namespace rltl
