#include "rltl/truth_value.hpp"

#include "rltl/error.hpp"

namespace rltl {

TruthValue TruthValue::parse(std::string_view bits) {
  for (TruthValue v : kAllTruthValues) {
    if (v.to_string() == bits) return v;
  }
  throw Error("not a truth value: '" + std::string(bits) + "'");
}

TruthValue TruthValue::from_bits(std::array<bool, 4> bits) {
  int ones = 0;
  for (bool b : bits) ones += b ? 1 : 0;
  TruthValue v(ones);
  for (int k = 1; k <= 4; ++k) {
    if (v.bit(k) != bits[k - 1]) throw ConsistencyError("non-monotone truth value bits");
  }
  return v;
}

std::string TruthValue::to_string() const {
  std::string s(4, '0');
  for (int k = 1; k <= 4; ++k) {
    if (bit(k)) s[k - 1] = '1';
  }
  return s;
}

}  // namespace rltl
