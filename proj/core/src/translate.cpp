#include "rltl/translate.hpp"

#include <map>
#include <utility>

#include "rltl/error.hpp"

namespace rltl {
namespace build {
namespace {
bool is(const NodePtr& f, Op op) { return f->op == op; }
}  // namespace

NodePtr land(NodePtr a, NodePtr b) {
  if (is(a, Op::False) || is(b, Op::False)) return constant(false);
  if (is(a, Op::True)) return b;
  if (is(b, Op::True) || a == b) return a;
  return binary(Op::And, std::move(a), std::move(b));
}

NodePtr lor(NodePtr a, NodePtr b) {
  if (is(a, Op::True) || is(b, Op::True)) return constant(true);
  if (is(a, Op::False)) return b;
  if (is(b, Op::False) || a == b) return a;
  return binary(Op::Or, std::move(a), std::move(b));
}

NodePtr lnot(NodePtr a) {
  if (is(a, Op::True)) return constant(false);
  if (is(a, Op::False)) return constant(true);
  if (is(a, Op::Not)) return a->lhs;
  return unary(Op::Not, std::move(a));
}

NodePtr implies(NodePtr a, NodePtr b) {
  if (is(a, Op::False) || is(b, Op::True) || a == b) return constant(true);
  if (is(a, Op::True)) return b;
  if (is(b, Op::False)) return lnot(std::move(a));
  return binary(Op::Implies, std::move(a), std::move(b));
}

NodePtr next(NodePtr a) {
  if (is(a, Op::True) || is(a, Op::False)) return a;
  return unary(Op::Next, std::move(a));
}

NodePtr eventually(NodePtr a) {
  if (is(a, Op::True) || is(a, Op::False) || is(a, Op::Eventually)) return a;
  return unary(Op::Eventually, std::move(a));
}

NodePtr always(NodePtr a) {
  if (is(a, Op::True) || is(a, Op::False) || is(a, Op::Always)) return a;
  return unary(Op::Always, std::move(a));
}

NodePtr until(NodePtr a, NodePtr b) {
  if (is(b, Op::True) || is(b, Op::False) || is(a, Op::False)) return b;
  if (is(a, Op::True)) return eventually(std::move(b));
  return binary(Op::Until, std::move(a), std::move(b));
}

NodePtr release(NodePtr a, NodePtr b) {
  if (is(b, Op::True) || is(b, Op::False) || is(a, Op::True)) return b;
  if (is(a, Op::False)) return always(std::move(b));
  return binary(Op::Release, std::move(a), std::move(b));
}
}  // namespace build

namespace {

using namespace build;

class Translator {
 public:
  NodePtr run(const NodePtr& f, int rank) {
    if (rank == 0) return constant(true);
    auto key = std::make_pair(f.get(), rank);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    NodePtr r = translate(f, rank);
    memo_.emplace(key, r);
    return r;
  }

 private:
  NodePtr translate(const NodePtr& f, int r) {
    switch (f->op) {
      case Op::Atom: return f;
      case Op::True:
      case Op::False: return f;
      case Op::Not: return lnot(run(f->lhs, 4));
      case Op::And: return land(run(f->lhs, r), run(f->rhs, r));
      case Op::Or: return lor(run(f->lhs, r), run(f->rhs, r));
      case Op::Implies: {
        NodePtr all = constant(true);
        for (int k = 1; k <= 4; ++k) all = land(all, implies(run(f->lhs, k), run(f->rhs, k)));
        return lor(run(f->rhs, r), all);
      }
      case Op::Next: return next(run(f->lhs, r));
      case Op::Eventually: return eventually(run(f->lhs, r));
      case Op::Always: {
        NodePtr a = run(f->lhs, r);
        switch (r) {
          case 4: return always(a);
          case 3: return eventually(always(a));
          case 2: return always(eventually(a));
          default: return eventually(a);
        }
      }
      case Op::Until: return until(run(f->lhs, r), run(f->rhs, r));
      case Op::Release: {
        switch (r) {
          case 4: return release(run(f->lhs, 4), run(f->rhs, 4));
          case 3: return eventually(release(run(f->lhs, 3), run(f->rhs, 3)));
          case 2:
            return lor(always(eventually(lor(run(f->lhs, 2), run(f->rhs, 2)))),
                       eventually(release(run(f->lhs, 3), run(f->rhs, 3))));
          default: return eventually(lor(run(f->lhs, 1), run(f->rhs, 1)));
        }
      }
    }
    throw Error("unexpected operator");
  }

  std::map<std::pair<const Node*, int>, NodePtr> memo_;
};

class Nnf {
 public:
  NodePtr run(const NodePtr& f, bool neg) {
    auto key = std::make_pair(f.get(), neg);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    NodePtr r = convert(f, neg);
    memo_.emplace(key, r);
    return r;
  }

 private:
  NodePtr convert(const NodePtr& f, bool neg) {
    switch (f->op) {
      case Op::Atom: return neg ? unary(Op::Not, f) : f;
      case Op::True: return constant(!neg);
      case Op::False: return constant(neg);
      case Op::Not: return run(f->lhs, !neg);
      case Op::And:
        return neg ? lor(run(f->lhs, true), run(f->rhs, true)) : land(run(f->lhs, false), run(f->rhs, false));
      case Op::Or:
        return neg ? land(run(f->lhs, true), run(f->rhs, true)) : lor(run(f->lhs, false), run(f->rhs, false));
      case Op::Implies:
        return neg ? land(run(f->lhs, false), run(f->rhs, true)) : lor(run(f->lhs, true), run(f->rhs, false));
      case Op::Next: return next(run(f->lhs, neg));
      case Op::Eventually:
        return neg ? release(constant(false), run(f->lhs, true)) : until(constant(true), run(f->lhs, false));
      case Op::Always:
        return neg ? until(constant(true), run(f->lhs, true)) : release(constant(false), run(f->lhs, false));
      case Op::Until:
        return neg ? release(run(f->lhs, true), run(f->rhs, true)) : until(run(f->lhs, false), run(f->rhs, false));
      case Op::Release:
        return neg ? until(run(f->lhs, true), run(f->rhs, true)) : release(run(f->lhs, false), run(f->rhs, false));
    }
    throw Error("unexpected operator");
  }

  NodePtr until(NodePtr a, NodePtr b) {
    if (b->op == Op::True || b->op == Op::False || a->op == Op::False) return b;
    return binary(Op::Until, std::move(a), std::move(b));
  }

  NodePtr release(NodePtr a, NodePtr b) {
    if (b->op == Op::True || b->op == Op::False || a->op == Op::True) return b;
    return binary(Op::Release, std::move(a), std::move(b));
  }

  std::map<std::pair<const Node*, bool>, NodePtr> memo_;
};

}  // namespace

LtlFormula threshold_to_ltl(const RobustFormula& formula, TruthValue b) {
  Translator t;
  return LtlFormula{t.run(formula.root, b.rank())};
}

LtlFormula to_nnf(const LtlFormula& formula) {
  Nnf n;
  return LtlFormula{n.run(formula.root, false)};
}

}  // namespace rltl
