#pragma once

#include <memory>
#include <set>
#include <string>

namespace rltl {

enum class Op { Atom, True, False, Not, And, Or, Implies, Next, Always, Eventually, Until, Release };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable syntax tree node shared by the robust and classical dialects.
struct Node {
  Op op;
  std::string name;  // Atom only
  NodePtr lhs;       // unary operand, or left operand
  NodePtr rhs;       // right operand of binary operators
};

bool is_unary(Op op);
bool is_binary(Op op);

NodePtr atom(std::string name);
NodePtr constant(bool value);
NodePtr unary(Op op, NodePtr operand);
NodePtr binary(Op op, NodePtr lhs, NodePtr rhs);

/// Structural comparison, usable as a strict weak order.
int compare(const Node& a, const Node& b);
bool equal(const NodePtr& a, const NodePtr& b);

std::size_t size(const NodePtr& f);
std::size_t depth(const NodePtr& f);
std::set<std::string> propositions(const NodePtr& f);

/// Fully parenthesised concrete syntax that parses back to the same tree.
std::string to_string(const NodePtr& f);

/// Robust LTL formula. Temporal operators have their robust meaning.
struct RobustFormula {
  NodePtr root;
  std::string to_string() const { return rltl::to_string(root); }
  friend bool operator==(const RobustFormula& a, const RobustFormula& b) { return equal(a.root, b.root); }
};

/// Classical LTL formula.
struct LtlFormula {
  NodePtr root;
  std::string to_string() const { return rltl::to_string(root); }
  friend bool operator==(const LtlFormula& a, const LtlFormula& b) { return equal(a.root, b.root); }
};

}  // namespace rltl
