#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace rltl {

/// Element of the five-valued robust lattice 0000 < 0001 < 0011 < 0111 < 1111.
///
/// Stored as a rank in 0..4; bit k (1-indexed, left to right) of the
/// string form is set iff rank >= 5 - k.
class TruthValue {
 public:
  constexpr TruthValue() = default;

  static constexpr TruthValue from_rank(int rank) { return TruthValue(rank); }
  static constexpr TruthValue bottom() { return TruthValue(0); }
  static constexpr TruthValue top() { return TruthValue(4); }

  /// Parses "0000", "0001", "0011", "0111" or "1111".
  static TruthValue parse(std::string_view bits);

  /// Builds a value from its four components; throws if not monotone.
  static TruthValue from_bits(std::array<bool, 4> bits);

  constexpr int rank() const { return rank_; }

  /// Component k in 1..4.
  constexpr bool bit(int k) const { return rank_ >= 5 - k; }

  /// Smallest value strictly larger; requires *this < top().
  constexpr TruthValue next() const { return TruthValue(rank_ + 1); }
  constexpr TruthValue prev() const { return TruthValue(rank_ - 1); }

  std::string to_string() const;

  friend constexpr auto operator<=>(TruthValue, TruthValue) = default;

 private:
  constexpr explicit TruthValue(int rank) : rank_(static_cast<std::int8_t>(rank)) {}
  std::int8_t rank_ = 0;
};

inline constexpr std::array<TruthValue, 5> kAllTruthValues = {
    TruthValue::from_rank(0), TruthValue::from_rank(1), TruthValue::from_rank(2),
    TruthValue::from_rank(3), TruthValue::from_rank(4)};

/// The four values above 0000, each of which gets its own threshold automaton.
inline constexpr std::array<TruthValue, 4> kNontrivialThresholds = {
    TruthValue::from_rank(1), TruthValue::from_rank(2), TruthValue::from_rank(3),
    TruthValue::from_rank(4)};

/// Index of a nontrivial threshold in kNontrivialThresholds (rank - 1).
constexpr int threshold_index(TruthValue b) { return b.rank() - 1; }

constexpr TruthValue min(TruthValue a, TruthValue b) { return a < b ? a : b; }
constexpr TruthValue max(TruthValue a, TruthValue b) { return a < b ? b : a; }

}  // namespace rltl
