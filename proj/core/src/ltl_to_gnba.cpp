#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "rltl/automata.hpp"
#include "rltl/error.hpp"
#include "rltl/translate.hpp"

namespace rltl {
namespace {

enum class K { True, False, Pos, Neg, And, Or, Next, Until, Release };

struct Sub {
  K kind;
  int a = -1;
  int b = -1;
  int prop = -1;
};

using Set = std::vector<int>;  // sorted ids

// Hash-consed NNF subformulas.
class Store {
 public:
  explicit Store(const Alphabet& alphabet) : alphabet_(alphabet) {}

  int intern(const NodePtr& f) {
    auto it = by_ptr_.find(f.get());
    if (it != by_ptr_.end()) return it->second;
    Sub s;
    switch (f->op) {
      case Op::True: s.kind = K::True; break;
      case Op::False: s.kind = K::False; break;
      case Op::Atom: s.kind = K::Pos; s.prop = alphabet_.index_of(f->name); break;
      case Op::Not:
        if (f->lhs->op != Op::Atom) throw ConsistencyError("formula not in negation normal form");
        s.kind = K::Neg;
        s.prop = alphabet_.index_of(f->lhs->name);
        break;
      case Op::And: s = {K::And, intern(f->lhs), intern(f->rhs)}; break;
      case Op::Or: s = {K::Or, intern(f->lhs), intern(f->rhs)}; break;
      case Op::Next: s = {K::Next, intern(f->lhs)}; break;
      case Op::Until: s = {K::Until, intern(f->lhs), intern(f->rhs)}; break;
      case Op::Release: s = {K::Release, intern(f->lhs), intern(f->rhs)}; break;
      default: throw ConsistencyError("formula not in negation normal form");
    }
    auto key = std::make_tuple(static_cast<int>(s.kind), s.a, s.b, s.prop);
    auto found = by_key_.find(key);
    int id;
    if (found != by_key_.end()) {
      id = found->second;
    } else {
      id = static_cast<int>(subs_.size());
      subs_.push_back(s);
      by_key_.emplace(key, id);
      if (s.kind == K::Until) untils_.push_back(id);
    }
    by_ptr_.emplace(f.get(), id);
    return id;
  }

  const Sub& operator[](int id) const { return subs_[id]; }
  const std::vector<int>& untils() const { return untils_; }

 private:
  const Alphabet& alphabet_;
  std::vector<Sub> subs_;
  std::map<const Node*, int> by_ptr_;
  std::map<std::tuple<int, int, int, int>, int> by_key_;
  std::vector<int> untils_;
};

// One consistent way of satisfying a set of obligations at the current position.
struct Cover {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
  Set next;
  std::vector<bool> acc;  // per until: not pending

  auto key() const { return std::tie(pos, neg, next, acc); }
  bool operator<(const Cover& o) const { return key() < o.key(); }
};

void insert_sorted(Set& s, int x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it == s.end() || *it != x) s.insert(it, x);
}

bool contains(const Set& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

class Tableau {
 public:
  explicit Tableau(const Store& store) : store_(store) {}

  const std::vector<Cover>& expand(const Set& obligations) {
    auto it = memo_.find(obligations);
    if (it != memo_.end()) return it->second;
    std::vector<Cover> out;
    Partial p;
    p.todo = obligations;
    run(std::move(p), out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](const Cover& a, const Cover& b) { return !(a < b) && !(b < a); }),
              out.end());
    // Drop covers that demand more than another one while promising no more.
    std::vector<Cover> kept;
    for (std::size_t i = 0; i < out.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < out.size() && !redundant; ++j)
        if (j != i && subsumes(out[j], out[i]) && (!subsumes(out[i], out[j]) || j < i)) redundant = true;
      if (!redundant) kept.push_back(out[i]);
    }
    return memo_.emplace(obligations, std::move(kept)).first->second;
  }

 private:
  // a is at least as permissive as b.
  static bool subsumes(const Cover& a, const Cover& b) {
    if ((a.pos & ~b.pos) != 0 || (a.neg & ~b.neg) != 0) return false;
    if (!std::includes(b.next.begin(), b.next.end(), a.next.begin(), a.next.end())) return false;
    for (std::size_t i = 0; i < a.acc.size(); ++i)
      if (b.acc[i] && !a.acc[i]) return false;
    return true;
  }

  struct Partial {
    Set todo;
    Set done;
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
    Set next;
  };

  void run(Partial p, std::vector<Cover>& out) {
    while (!p.todo.empty()) {
      int f = p.todo.back();
      p.todo.pop_back();
      if (contains(p.done, f)) continue;
      insert_sorted(p.done, f);
      const Sub& s = store_[f];
      switch (s.kind) {
        case K::True: break;
        case K::False: return;
        case K::Pos:
          if (p.neg >> s.prop & 1u) return;
          p.pos |= 1u << s.prop;
          break;
        case K::Neg:
          if (p.pos >> s.prop & 1u) return;
          p.neg |= 1u << s.prop;
          break;
        case K::And:
          p.todo.push_back(s.a);
          p.todo.push_back(s.b);
          break;
        case K::Next: insert_sorted(p.next, s.a); break;
        case K::Or: {
          Partial q = p;
          q.todo.push_back(s.b);
          p.todo.push_back(s.a);
          run(std::move(q), out);
          break;
        }
        case K::Until: {
          Partial q = p;
          q.todo.push_back(s.a);
          insert_sorted(q.next, f);
          p.todo.push_back(s.b);
          run(std::move(q), out);
          break;
        }
        case K::Release: {
          Partial q = p;
          q.todo.push_back(s.b);
          insert_sorted(q.next, f);
          p.todo.push_back(s.a);
          p.todo.push_back(s.b);
          run(std::move(q), out);
          break;
        }
      }
    }
    Cover c;
    c.pos = p.pos;
    c.neg = p.neg;
    c.next = std::move(p.next);
    for (int u : store_.untils()) {
      bool pending = contains(p.done, u) && !contains(p.done, store_[u].b);
      c.acc.push_back(!pending);
    }
    out.push_back(std::move(c));
  }

  const Store& store_;
  std::map<Set, std::vector<Cover>> memo_;
};

}  // namespace

Gnba ltl_to_gnba(const LtlFormula& formula) {
  auto props = propositions(formula.root);
  return ltl_to_gnba(formula, Alphabet({props.begin(), props.end()}));
}

Gnba ltl_to_gnba(const LtlFormula& formula, const Alphabet& alphabet) {
  LtlFormula nnf = to_nnf(formula);
  Store store(alphabet);
  int root = store.intern(nnf.root);
  Tableau tableau(store);

  Gnba a;
  a.alphabet = alphabet;
  const std::uint32_t letters = static_cast<std::uint32_t>(alphabet.size());

  // State 0 is the initial state; other states are covers.
  std::map<Cover, int> ids;
  std::vector<Cover> covers(1);
  a.delta.emplace_back(letters);
  std::deque<int> queue{0};
  std::vector<Set> obligations{{root}};

  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    const Set& ob = s == 0 ? obligations[0] : covers[s].next;
    const std::vector<Cover> targets = tableau.expand(ob);
    for (const Cover& c : targets) {
      auto [it, inserted] = ids.emplace(c, static_cast<int>(covers.size()));
      if (inserted) {
        covers.push_back(c);
        a.delta.emplace_back(letters);
        queue.push_back(it->second);
      }
      for (std::uint32_t l = 0; l < letters; ++l) {
        if ((c.pos & ~l) == 0 && (c.neg & l) == 0) a.delta[s][l].push_back(it->second);
      }
    }
  }
  a.num_states = static_cast<int>(covers.size());
  a.initial = {0};
  for (std::size_t i = 0; i < store.untils().size(); ++i) {
    std::vector<bool> set(a.num_states, false);
    for (int s = 1; s < a.num_states; ++s) set[s] = covers[s].acc[i];
    a.accepting_sets.push_back(std::move(set));
  }
  for (auto& row : a.delta)
    for (auto& succ : row) std::sort(succ.begin(), succ.end());
  return a;
}

}  // namespace rltl
