#include <algorithm>
#include <map>
#include <vector>

#include "rltl/translate.hpp"

namespace rltl {
namespace {

// Rewrites on negation normal form. F x is kept as true U x and G x as
// false R x. A formula is eventual when F f == f and universal when G f == f.
class Simplifier {
 public:
  NodePtr run(const NodePtr& f) {
    auto it = memo_.find(f.get());
    if (it != memo_.end()) return it->second;
    NodePtr r;
    switch (f->op) {
      case Op::And: r = make_and(run(f->lhs), run(f->rhs)); break;
      case Op::Or: r = make_or(run(f->lhs), run(f->rhs)); break;
      case Op::Next: r = make_next(run(f->lhs)); break;
      case Op::Until: r = make_until(run(f->lhs), run(f->rhs)); break;
      case Op::Release: r = make_release(run(f->lhs), run(f->rhs)); break;
      default: r = f;
    }
    memo_.emplace(f.get(), r);
    keep_.push_back(f);
    return r;
  }

 private:
  static bool is(const NodePtr& f, Op op) { return f->op == op; }
  static bool is_f(const NodePtr& f) { return is(f, Op::Until) && is(f->lhs, Op::True); }
  static bool is_g(const NodePtr& f) { return is(f, Op::Release) && is(f->lhs, Op::False); }
  static NodePtr f_of(NodePtr x) { return binary(Op::Until, constant(true), std::move(x)); }
  static NodePtr g_of(NodePtr x) { return binary(Op::Release, constant(false), std::move(x)); }

  bool eventual(const NodePtr& f) {
    switch (f->op) {
      case Op::True:
      case Op::False: return true;
      case Op::Until: return is(f->lhs, Op::True) || eventual(f->rhs);
      case Op::Next: return eventual(f->lhs);
      case Op::And:
      case Op::Or: return eventual(f->lhs) && eventual(f->rhs);
      case Op::Release: return is(f->lhs, Op::False) && eventual(f->rhs);
      default: return false;
    }
  }

  bool universal(const NodePtr& f) {
    switch (f->op) {
      case Op::True:
      case Op::False: return true;
      case Op::Release: return is(f->lhs, Op::False) || universal(f->rhs);
      case Op::Next: return universal(f->lhs);
      case Op::And:
      case Op::Or: return universal(f->lhs) && universal(f->rhs);
      case Op::Until: return is(f->lhs, Op::True) && universal(f->rhs);
      default: return false;
    }
  }

  static NodePtr neg(const NodePtr& f) {
    switch (f->op) {
      case Op::Atom: return unary(Op::Not, f);
      case Op::Not: return f->lhs;
      case Op::True: return constant(false);
      case Op::False: return constant(true);
      case Op::And: return binary(Op::Or, neg(f->lhs), neg(f->rhs));
      case Op::Or: return binary(Op::And, neg(f->lhs), neg(f->rhs));
      case Op::Next: return unary(Op::Next, neg(f->lhs));
      case Op::Until: return binary(Op::Release, neg(f->lhs), neg(f->rhs));
      case Op::Release: return binary(Op::Until, neg(f->lhs), neg(f->rhs));
      default: return unary(Op::Not, f);
    }
  }

  static void flatten(const NodePtr& f, Op op, std::vector<NodePtr>& out) {
    if (is(f, op)) {
      flatten(f->lhs, op, out);
      flatten(f->rhs, op, out);
    } else {
      out.push_back(f);
    }
  }

  static bool contains(const std::vector<NodePtr>& v, const NodePtr& f) {
    return std::any_of(v.begin(), v.end(), [&](const NodePtr& g) { return equal(g, f); });
  }

  // Shared body of & and |: `unit` is the neutral constant, `zero` absorbs,
  // `pair` recognises GF x (for |) or FG x (for &).
  NodePtr junction(Op op, const NodePtr& a, const NodePtr& b) {
    const Op unit = op == Op::And ? Op::True : Op::False;
    const Op zero = op == Op::And ? Op::False : Op::True;
    std::vector<NodePtr> parts, ops;
    flatten(a, op, parts);
    flatten(b, op, parts);
    std::vector<NodePtr> inner;  // x for every GF x (|) or FG x (&)
    for (const auto& p : parts) {
      if (is(p, zero)) return constant(zero == Op::True);
      if (is(p, unit) || contains(ops, p)) continue;
      ops.push_back(p);
      if (op == Op::Or && is_g(p) && is_f(p->rhs)) inner.push_back(p->rhs->rhs);
      if (op == Op::And && is_f(p) && is_g(p->rhs)) inner.push_back(p->rhs->rhs);
    }
    for (const auto& p : ops)
      if (contains(ops, neg(p))) return constant(zero == Op::True);
    for (const auto& x : inner)
      if (contains(inner, neg(x))) return constant(zero == Op::True);
    if (ops.empty()) return constant(unit == Op::True);
    std::sort(ops.begin(), ops.end(), [](const NodePtr& x, const NodePtr& y) { return compare(*x, *y) < 0; });
    NodePtr r = ops.front();
    for (std::size_t i = 1; i < ops.size(); ++i) r = binary(op, r, ops[i]);
    return r;
  }

  NodePtr make_and(const NodePtr& a, const NodePtr& b) { return junction(Op::And, a, b); }
  NodePtr make_or(const NodePtr& a, const NodePtr& b) { return junction(Op::Or, a, b); }

  NodePtr make_next(const NodePtr& a) {
    if (is(a, Op::True) || is(a, Op::False) || (eventual(a) && universal(a))) return a;
    return unary(Op::Next, a);
  }

  NodePtr make_until(const NodePtr& a, const NodePtr& b) {
    if (is(b, Op::True) || is(b, Op::False) || is(a, Op::False) || equal(a, b) || eventual(b)) return b;
    if (!is(a, Op::True)) return binary(Op::Until, a, b);
    // F b
    if (is(b, Op::Or)) return make_or(make_until(a, b->lhs), make_until(a, b->rhs));
    if (is(b, Op::Until)) return make_until(a, b->rhs);
    if (is(b, Op::Next)) return make_next(make_until(a, b->lhs));
    if (is(b, Op::And)) {
      std::vector<NodePtr> parts;
      flatten(b, Op::And, parts);
      if (std::all_of(parts.begin(), parts.end(), [&](const NodePtr& p) { return universal(p); })) {
        NodePtr r = constant(true);
        for (const auto& p : parts) r = make_and(r, make_until(a, p));
        return r;
      }
    }
    return f_of(b);
  }

  NodePtr make_release(const NodePtr& a, const NodePtr& b) {
    if (is(b, Op::True) || is(b, Op::False) || is(a, Op::True) || equal(a, b) || universal(b)) return b;
    if (!is(a, Op::False)) return binary(Op::Release, a, b);
    // G b
    if (is(b, Op::And)) return make_and(make_release(a, b->lhs), make_release(a, b->rhs));
    if (is(b, Op::Release)) return make_release(a, b->rhs);
    if (is(b, Op::Next)) return make_next(make_release(a, b->lhs));
    if (is(b, Op::Or)) {
      std::vector<NodePtr> parts;
      flatten(b, Op::Or, parts);
      if (std::all_of(parts.begin(), parts.end(), [&](const NodePtr& p) { return eventual(p); })) {
        NodePtr r = constant(false);
        for (const auto& p : parts) r = make_or(r, make_release(a, p));
        return r;
      }
    }
    return g_of(b);
  }

  std::map<const Node*, NodePtr> memo_;
  std::vector<NodePtr> keep_;  // keeps memo keys alive
};

}  // namespace

LtlFormula simplify(const LtlFormula& formula) {
  NodePtr f = to_nnf(formula).root;
  for (;;) {
    Simplifier s;
    NodePtr g = s.run(f);
    if (equal(f, g)) return LtlFormula{g};
    f = g;
  }
}

}  // namespace rltl
