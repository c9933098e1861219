#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "rltl/truth_value.hpp"

namespace rltl {

/// Five slots (b0, ..., bk, ⊥, ..., ⊥) with b0 < b1 < ... < bk.
class Summary {
 public:
  /// Throws if the values are empty, more than five, or not strictly increasing.
  explicit Summary(const std::vector<TruthValue>& values);
  static Summary single(TruthValue v) { return Summary({v}); }

  /// Slot i, or nullopt for ⊥.
  std::optional<TruthValue> slot(int i) const;
  /// Index of the last non-⊥ slot.
  int k() const { return length_ - 1; }
  int length() const { return length_; }
  TruthValue first() const { return values_[0]; }
  TruthValue last() const { return values_[length_ - 1]; }
  std::vector<TruthValue> values() const { return {values_.begin(), values_.begin() + length_}; }

  /// Extends by one value; throws unless v > last().
  Summary append(TruthValue v) const;

  /// "(0011,0111,⊥,⊥,⊥)"
  std::string to_string() const;

  /// Lexicographic order with ⊥ below every value.
  friend std::strong_ordering operator<=>(const Summary& a, const Summary& b);
  friend bool operator==(const Summary& a, const Summary& b) = default;

 private:
  std::array<TruthValue, 5> values_{};
  int length_ = 0;
};

/// Three-way lexicographic comparison: negative, zero or positive.
int lex_compare(const Summary& a, const Summary& b);

/// (b1, ..., bk, ⊥, ...); throws when k = 0.
Summary left_shift(const Summary& s);

/// a is a proper prefix of b.
bool is_strict_prefix(const Summary& a, const Summary& b);

/// Summaries s' with b0' > b0, s' < shift(s) and s' not a strict prefix of shift(s).
std::vector<Summary> evade_set(const Summary& s);

/// All 31 summaries in ascending lexicographic order.
const std::vector<Summary>& all_summaries();

/// Index of a summary in all_summaries().
int summary_index(const Summary& s);

}  // namespace rltl
