#include "rltl/alphabet.hpp"

#include <algorithm>

#include "rltl/error.hpp"

namespace rltl {

Alphabet::Alphabet(std::vector<std::string> propositions) : props_(std::move(propositions)) {
  std::sort(props_.begin(), props_.end());
  if (std::adjacent_find(props_.begin(), props_.end()) != props_.end()) throw Error("duplicate proposition");
  if (props_.size() > 16) throw Error("too many propositions for an explicit alphabet");
}

int Alphabet::index_of(const std::string& prop) const {
  auto it = std::lower_bound(props_.begin(), props_.end(), prop);
  if (it == props_.end() || *it != prop) throw UndeclaredProposition(prop);
  return static_cast<int>(it - props_.begin());
}

bool Alphabet::contains(const std::string& prop) const { return std::binary_search(props_.begin(), props_.end(), prop); }

std::uint32_t Alphabet::letter_index(const Letter& letter) const {
  std::uint32_t i = 0;
  for (const auto& p : letter) i |= 1u << index_of(p);
  return i;
}

Letter Alphabet::letter(std::uint32_t index) const {
  Letter l;
  for (std::size_t j = 0; j < props_.size(); ++j)
    if (index >> j & 1u) l.insert(props_[j]);
  return l;
}

std::uint32_t Alphabet::widen(const Alphabet& narrower, std::uint32_t index) const {
  return letter_index(narrower.letter(index));
}

std::uint32_t Alphabet::project(const Alphabet& narrower, std::uint32_t index) const {
  std::uint32_t out = 0;
  for (std::size_t j = 0; j < props_.size(); ++j)
    if ((index >> j & 1u) && narrower.contains(props_[j])) out |= 1u << narrower.index_of(props_[j]);
  return out;
}

}  // namespace rltl
