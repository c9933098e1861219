#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rltl/semantics.hpp"

namespace rltl {

/// Explicit alphabet 2^P. Letter index i contains proposition j iff bit j of i
/// is set, with propositions sorted by name.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> propositions);

  const std::vector<std::string>& propositions() const { return props_; }
  std::size_t size() const { return std::size_t{1} << props_.size(); }

  /// Bit position of a proposition; throws UndeclaredProposition.
  int index_of(const std::string& prop) const;
  bool contains(const std::string& prop) const;

  std::uint32_t letter_index(const Letter& letter) const;
  Letter letter(std::uint32_t index) const;

  /// Index in this alphabet of letter `index` of `narrower` (a sub-alphabet).
  std::uint32_t widen(const Alphabet& narrower, std::uint32_t index) const;
  /// Index of the restriction of letter `index` to `narrower`.
  std::uint32_t project(const Alphabet& narrower, std::uint32_t index) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> props_;
};

}  // namespace rltl
