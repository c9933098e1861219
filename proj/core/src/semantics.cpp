#include "rltl/semantics.hpp"

#include <array>

#include "rltl/error.hpp"

namespace rltl {
namespace {

using Table = std::vector<bool>;

// Boolean operators over the suffix positions of a lasso. Position n-1 is
// followed by the first loop position.
struct Lasso {
  const LassoWord& w;
  std::size_t n = w.positions();
  std::size_t s = w.stem.size();

  Table next(const Table& t) const {
    Table r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = t[w.successor(i)];
    return r;
  }

  bool any_loop(const Table& t) const {
    for (std::size_t i = s; i < n; ++i)
      if (t[i]) return true;
    return false;
  }

  bool all_loop(const Table& t) const {
    for (std::size_t i = s; i < n; ++i)
      if (!t[i]) return false;
    return true;
  }

  Table eventually(const Table& t) const {
    Table r(n);
    const bool inf = any_loop(t);
    bool acc = inf;
    for (std::size_t i = n; i-- > 0;) {
      acc = acc || t[i];
      r[i] = i >= s ? inf : acc;
    }
    return r;
  }

  Table always(const Table& t) const {
    Table r(n);
    const bool inf = all_loop(t);
    bool acc = inf;
    for (std::size_t i = n; i-- > 0;) {
      acc = acc && t[i];
      r[i] = i >= s ? inf : acc;
    }
    return r;
  }

  Table constant(bool v) const { return Table(n, v); }

  // Least fixpoint of u = b | (a & X u).
  Table until(const Table& a, const Table& b) const {
    Table u(n, false);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = n; i-- > 0;) {
        bool v = b[i] || (a[i] && u[w.successor(i)]);
        if (v != u[i]) {
          u[i] = v;
          changed = true;
        }
      }
    }
    return u;
  }

  // Greatest fixpoint of r = b & (a | X r).
  Table release(const Table& a, const Table& b) const {
    Table r(n, true);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = n; i-- > 0;) {
        bool v = b[i] && (a[i] || r[w.successor(i)]);
        if (v != r[i]) {
          r[i] = v;
          changed = true;
        }
      }
    }
    return r;
  }

  Table atom(const std::string& p) const {
    if (!w.alphabet.empty() && !w.alphabet.count(p)) throw UndeclaredProposition(p);
    Table r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = w.at(i).count(p) > 0;
    return r;
  }
};

Table zip(const Table& a, const Table& b, bool conj) {
  Table r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = conj ? (a[i] && b[i]) : (a[i] || b[i]);
  return r;
}

Table negate(const Table& a) {
  Table r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = !a[i];
  return r;
}

// Component k-1 holds bit k of the value at each position.
using Bits = std::array<Table, 4>;

Bits robust(const Lasso& l, const NodePtr& f) {
  Bits out;
  switch (f->op) {
    case Op::Atom: {
      Table t = l.atom(f->name);
      out.fill(t);
      return out;
    }
    case Op::True: out.fill(l.constant(true)); return out;
    case Op::False: out.fill(l.constant(false)); return out;
    default: break;
  }
  Bits a = robust(l, f->lhs);
  Bits b;
  if (f->rhs) b = robust(l, f->rhs);
  switch (f->op) {
    case Op::Not: out.fill(negate(a[0])); break;
    case Op::And:
    case Op::Or:
      for (int k = 0; k < 4; ++k) out[k] = zip(a[k], b[k], f->op == Op::And);
      break;
    case Op::Implies: {
      for (auto& t : out) t = Table(l.n);
      for (std::size_t i = 0; i < l.n; ++i) {
        bool le = true;
        for (int k = 0; k < 4; ++k) le = le && (!a[k][i] || b[k][i]);
        for (int k = 0; k < 4; ++k) out[k][i] = le || b[k][i];
      }
      break;
    }
    case Op::Next:
      for (int k = 0; k < 4; ++k) out[k] = l.next(a[k]);
      break;
    case Op::Eventually:
      for (int k = 0; k < 4; ++k) out[k] = l.eventually(a[k]);
      break;
    case Op::Always:
      out[0] = l.always(a[0]);
      out[1] = l.constant(l.all_loop(a[1]));
      out[2] = l.constant(l.any_loop(a[2]));
      out[3] = l.eventually(a[3]);
      break;
    case Op::Until:
      for (int k = 0; k < 4; ++k) out[k] = l.until(a[k], b[k]);
      break;
    case Op::Release:
      out[0] = l.release(a[0], b[0]);
      out[1] = l.eventually(l.release(a[1], b[1]));
      out[2] = zip(l.constant(l.any_loop(zip(a[2], b[2], false))), out[1], false);
      out[3] = l.eventually(zip(a[3], b[3], false));
      break;
    default: throw Error("unexpected operator");
  }
  return out;
}

Table classical(const Lasso& l, const NodePtr& f) {
  switch (f->op) {
    case Op::Atom: return l.atom(f->name);
    case Op::True: return l.constant(true);
    case Op::False: return l.constant(false);
    case Op::Not: return negate(classical(l, f->lhs));
    case Op::And: return zip(classical(l, f->lhs), classical(l, f->rhs), true);
    case Op::Or: return zip(classical(l, f->lhs), classical(l, f->rhs), false);
    case Op::Implies: return zip(negate(classical(l, f->lhs)), classical(l, f->rhs), false);
    case Op::Next: return l.next(classical(l, f->lhs));
    case Op::Always: return l.always(classical(l, f->lhs));
    case Op::Eventually: return l.eventually(classical(l, f->lhs));
    case Op::Until: return l.until(classical(l, f->lhs), classical(l, f->rhs));
    case Op::Release: return l.release(classical(l, f->lhs), classical(l, f->rhs));
  }
  throw Error("unexpected operator");
}

void check_word(const LassoWord& w) {
  if (w.loop.empty()) throw Error("lasso word needs a nonempty loop");
}

}  // namespace

std::string LassoWord::to_string() const {
  auto letters = [](const std::vector<Letter>& v) {
    std::string s;
    for (const auto& letter : v) {
      if (!s.empty()) s += ' ';
      s += '{';
      bool first = true;
      for (const auto& p : letter) {
        if (!first) s += ',';
        s += p;
        first = false;
      }
      s += '}';
    }
    return s;
  };
  std::string stem_text = letters(stem);
  return stem_text + (stem_text.empty() ? "| " : " | ") + letters(loop);
}

std::vector<TruthValue> evaluate_all(const LassoWord& word, const RobustFormula& formula) {
  check_word(word);
  Lasso l{word};
  Bits bits = robust(l, formula.root);
  std::vector<TruthValue> out;
  out.reserve(l.n);
  for (std::size_t i = 0; i < l.n; ++i) out.push_back(TruthValue::from_bits({bits[0][i], bits[1][i], bits[2][i], bits[3][i]}));
  return out;
}

TruthValue evaluate(const LassoWord& word, const RobustFormula& formula) { return evaluate_all(word, formula)[0]; }

bool evaluate_ltl(const LassoWord& word, const LtlFormula& formula) {
  check_word(word);
  Lasso l{word};
  return classical(l, formula.root)[0];
}

}  // namespace rltl
