#pragma once

#include <set>
#include <string>
#include <vector>

#include "rltl/formula.hpp"
#include "rltl/truth_value.hpp"

namespace rltl {

using Letter = std::set<std::string>;

/// The ultimately periodic word stem · loop^ω.
struct LassoWord {
  std::vector<Letter> stem;
  std::vector<Letter> loop;
  /// When nonempty, formulas may only mention these propositions.
  std::set<std::string> alphabet;

  std::size_t positions() const { return stem.size() + loop.size(); }
  const Letter& at(std::size_t i) const { return i < stem.size() ? stem[i] : loop[i - stem.size()]; }
  /// Position reached after reading position i.
  std::size_t successor(std::size_t i) const { return i + 1 < positions() ? i + 1 : stem.size(); }

  std::string to_string() const;
  friend bool operator==(const LassoWord&, const LassoWord&) = default;
};

/// Robust valuation of the formula on the word.
TruthValue evaluate(const LassoWord& word, const RobustFormula& formula);

/// Robust valuation at every suffix position 0 .. positions()-1.
std::vector<TruthValue> evaluate_all(const LassoWord& word, const RobustFormula& formula);

/// Classical satisfaction.
bool evaluate_ltl(const LassoWord& word, const LtlFormula& formula);

}  // namespace rltl
