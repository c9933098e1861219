#pragma once

#include "rltl/formula.hpp"
#include "rltl/truth_value.hpp"

namespace rltl {

/// LTL formula satisfied by exactly the words on which `formula` has value >= b.
LtlFormula threshold_to_ltl(const RobustFormula& formula, TruthValue b);

/// Classical negation normal form over true, false, literals, &, |, X, U, R.
LtlFormula to_nnf(const LtlFormula& formula);

/// Language-preserving rewriting of the negation normal form: constant
/// folding, idempotence, complementary operands, and the absorption and
/// distribution laws of F and G over eventual and universal subformulas.
LtlFormula simplify(const LtlFormula& formula);

/// Constant-folding constructors used by the translations.
namespace build {
NodePtr land(NodePtr a, NodePtr b);
NodePtr lor(NodePtr a, NodePtr b);
NodePtr lnot(NodePtr a);
NodePtr implies(NodePtr a, NodePtr b);
NodePtr next(NodePtr a);
NodePtr eventually(NodePtr a);
NodePtr always(NodePtr a);
NodePtr until(NodePtr a, NodePtr b);
NodePtr release(NodePtr a, NodePtr b);
}  // namespace build

}  // namespace rltl
