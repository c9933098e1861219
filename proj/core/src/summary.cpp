#include "rltl/summary.hpp"

#include <algorithm>

#include "rltl/error.hpp"

namespace rltl {

Summary::Summary(const std::vector<TruthValue>& values) {
  if (values.empty() || values.size() > 5) throw Error("a summary holds one to five values");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i - 1] < values[i])) throw Error("summary values must be strictly increasing");
  std::copy(values.begin(), values.end(), values_.begin());
  length_ = static_cast<int>(values.size());
}

std::optional<TruthValue> Summary::slot(int i) const {
  if (i < length_) return values_[i];
  return std::nullopt;
}

Summary Summary::append(TruthValue v) const {
  auto vals = values();
  vals.push_back(v);
  return Summary(vals);
}

std::string Summary::to_string() const {
  std::string s = "(";
  for (int i = 0; i < 5; ++i) {
    if (i) s += ',';
    s += i < length_ ? values_[i].to_string() : "⊥";
  }
  return s + ")";
}

std::strong_ordering operator<=>(const Summary& a, const Summary& b) {
  for (int i = 0; i < 5; ++i) {
    bool ha = i < a.length_, hb = i < b.length_;
    if (!ha && !hb) return std::strong_ordering::equal;
    if (ha != hb) return ha ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = a.values_[i] <=> b.values_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

int lex_compare(const Summary& a, const Summary& b) {
  auto c = a <=> b;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Summary left_shift(const Summary& s) {
  if (s.k() == 0) throw Error("shift is undefined for summaries with a single value");
  auto v = s.values();
  v.erase(v.begin());
  return Summary(v);
}

bool is_strict_prefix(const Summary& a, const Summary& b) {
  if (a.length() >= b.length()) return false;
  for (int i = 0; i < a.length(); ++i)
    if (*a.slot(i) != *b.slot(i)) return false;
  return true;
}

std::vector<Summary> evade_set(const Summary& s) {
  Summary shifted = left_shift(s);
  std::vector<Summary> out;
  for (const auto& c : all_summaries())
    if (c.first() > s.first() && c < shifted && !is_strict_prefix(c, shifted)) out.push_back(c);
  return out;
}

const std::vector<Summary>& all_summaries() {
  static const std::vector<Summary> all = [] {
    std::vector<Summary> out;
    for (int mask = 1; mask < 32; ++mask) {
      std::vector<TruthValue> v;
      for (int r = 0; r < 5; ++r)
        if (mask >> r & 1) v.push_back(TruthValue::from_rank(r));
      out.emplace_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return all;
}

int summary_index(const Summary& s) {
  const auto& all = all_summaries();
  auto it = std::lower_bound(all.begin(), all.end(), s);
  return static_cast<int>(it - all.begin());
}

}  // namespace rltl
