#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rltl/alphabet.hpp"
#include "rltl/formula.hpp"
#include "rltl/semantics.hpp"
#include "rltl/truth_value.hpp"

namespace rltl {

/// Successor lists indexed by [state][letter].
using NondetDelta = std::vector<std::vector<std::vector<int>>>;

/// Generalized Büchi automaton with state-based acceptance. With no
/// accepting sets every infinite run is accepting.
struct Gnba {
  Alphabet alphabet;
  int num_states = 0;
  std::vector<int> initial;
  NondetDelta delta;
  std::vector<std::vector<bool>> accepting_sets;
};

struct Nba {
  Alphabet alphabet;
  int num_states = 0;
  std::vector<int> initial;
  NondetDelta delta;
  std::vector<bool> accepting;
};

/// Deterministic parity automaton; a run is accepting iff the least priority
/// seen infinitely often is even.
struct Dpa {
  Alphabet alphabet;
  int num_states = 0;
  int initial = 0;
  std::vector<std::vector<int>> delta;  // [state][letter]
  std::vector<int> priority;

  int step(int state, std::uint32_t letter) const { return delta[state][letter]; }
};

/// Tableau translation. The alphabet defaults to the formula's propositions.
Gnba ltl_to_gnba(const LtlFormula& formula);
Gnba ltl_to_gnba(const LtlFormula& formula, const Alphabet& alphabet);

/// Counter construction with one counter range per SCC; only reachable states
/// are kept.
Nba degeneralize(const Gnba& a);

/// Drops states that are unreachable or cannot reach an accepting cycle, then
/// merges bisimilar and simulation-equivalent states and removes transitions
/// to states directly simulated by a sibling. The language is unchanged.
Nba reduce(const Nba& a);

/// Safra-tree determinization emitting min-even parity priorities.
Dpa determinize(const Nba& a);

/// Same states and transitions, all priorities shifted by one.
Dpa complement_dpa(const Dpa& a);

/// The one-state automaton accepting every word.
Dpa universal_dpa(const Alphabet& alphabet);

bool lasso_accepts(const Gnba& a, const LassoWord& w);
bool lasso_accepts(const Nba& a, const LassoWord& w);
bool lasso_accepts(const Dpa& a, const LassoWord& w);

struct EquivalenceResult {
  bool equivalent = true;
  std::optional<LassoWord> counterexample;
};

/// Exact language comparison of an NBA with a candidate DPA. The inclusion
/// L(dpa) ⊆ L(nba) is decided through an automaton for the complement of
/// L(nba), which the translation pipeline obtains from the negated formula.
EquivalenceResult check_equivalence(const Nba& nba, const Dpa& dpa, const Nba& nba_complement);

/// Exact check of L(sub) ⊆ L(super); on failure the counterexample lies in
/// L(sub) ∖ L(super).
EquivalenceResult check_inclusion(const Dpa& sub, const Dpa& super);
EquivalenceResult check_inclusion(const Nba& sub, const Dpa& super);

/// A word accepted by the automaton, if any.
std::optional<LassoWord> find_accepted_word(const Nba& a);

/// Every stage of the threshold construction, kept for inspection.
struct ThresholdPipeline {
  LtlFormula ltl;
  Gnba gnba;
  Nba nba;
  Dpa dpa;
};

ThresholdPipeline build_threshold_pipeline(const RobustFormula& formula, TruthValue b, const Alphabet& alphabet);

/// DPA for {w : V(w, formula) >= b}. For b = 0000 the universal automaton.
Dpa build_threshold_dpa(const RobustFormula& formula, TruthValue b, const Alphabet& alphabet);

}  // namespace rltl
