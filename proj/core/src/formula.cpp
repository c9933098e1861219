#include "rltl/formula.hpp"

#include <algorithm>

#include "rltl/error.hpp"

namespace rltl {

bool is_unary(Op op) {
  return op == Op::Not || op == Op::Next || op == Op::Always || op == Op::Eventually;
}

bool is_binary(Op op) {
  return op == Op::And || op == Op::Or || op == Op::Implies || op == Op::Until || op == Op::Release;
}

NodePtr atom(std::string name) {
  return std::make_shared<const Node>(Node{Op::Atom, std::move(name), nullptr, nullptr});
}

NodePtr constant(bool value) {
  static const NodePtr t = std::make_shared<const Node>(Node{Op::True, {}, nullptr, nullptr});
  static const NodePtr f = std::make_shared<const Node>(Node{Op::False, {}, nullptr, nullptr});
  return value ? t : f;
}

NodePtr unary(Op op, NodePtr operand) {
  if (!is_unary(op) || !operand) throw Error("bad unary node");
  return std::make_shared<const Node>(Node{op, {}, std::move(operand), nullptr});
}

NodePtr binary(Op op, NodePtr lhs, NodePtr rhs) {
  if (!is_binary(op) || !lhs || !rhs) throw Error("bad binary node");
  return std::make_shared<const Node>(Node{op, {}, std::move(lhs), std::move(rhs)});
}

int compare(const Node& a, const Node& b) {
  if (&a == &b) return 0;
  if (a.op != b.op) return a.op < b.op ? -1 : 1;
  if (a.op == Op::Atom) return a.name.compare(b.name) < 0 ? -1 : (a.name == b.name ? 0 : 1);
  if (a.lhs) {
    int c = compare(*a.lhs, *b.lhs);
    if (c != 0) return c;
  }
  if (a.rhs) return compare(*a.rhs, *b.rhs);
  return 0;
}

bool equal(const NodePtr& a, const NodePtr& b) {
  if (!a || !b) return a == b;
  return compare(*a, *b) == 0;
}

std::size_t size(const NodePtr& f) {
  std::size_t n = 1;
  if (f->lhs) n += size(f->lhs);
  if (f->rhs) n += size(f->rhs);
  return n;
}

std::size_t depth(const NodePtr& f) {
  std::size_t d = 0;
  if (f->lhs) d = std::max(d, depth(f->lhs));
  if (f->rhs) d = std::max(d, depth(f->rhs));
  return (f->lhs || f->rhs) ? d + 1 : 0;
}

namespace {
void collect(const NodePtr& f, std::set<std::string>& out) {
  if (f->op == Op::Atom) out.insert(f->name);
  if (f->lhs) collect(f->lhs, out);
  if (f->rhs) collect(f->rhs, out);
}

const char* symbol(Op op) {
  switch (op) {
    case Op::Not: return "!";
    case Op::Next: return "X ";
    case Op::Always: return "G ";
    case Op::Eventually: return "F ";
    case Op::And: return " & ";
    case Op::Or: return " | ";
    case Op::Implies: return " => ";
    case Op::Until: return " U ";
    case Op::Release: return " R ";
    default: return "";
  }
}
}  // namespace

std::set<std::string> propositions(const NodePtr& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

std::string to_string(const NodePtr& f) {
  switch (f->op) {
    case Op::Atom: return f->name;
    case Op::True: return "true";
    case Op::False: return "false";
    default: break;
  }
  if (is_unary(f->op)) {
    const NodePtr& a = f->lhs;
    bool leaf = !a->lhs;
    std::string inner = to_string(a);
    return symbol(f->op) + (leaf || is_unary(a->op) ? inner : "(" + inner + ")");
  }
  auto wrap = [](const NodePtr& g) {
    std::string s = to_string(g);
    return (g->lhs && is_binary(g->op)) ? "(" + s + ")" : s;
  };
  return wrap(f->lhs) + symbol(f->op) + wrap(f->rhs);
}

}  // namespace rltl
