#include <gtest/gtest.h>

#include "rltl/error.hpp"
#include "rltl/truth_value.hpp"

using rltl::TruthValue;

TEST(TruthValue, ParsesTheFiveValues) {
  const char* names[] = {"0000", "0001", "0011", "0111", "1111"};
  for (int r = 0; r < 5; ++r) {
    TruthValue v = TruthValue::parse(names[r]);
    EXPECT_EQ(v.rank(), r);
    EXPECT_EQ(v.to_string(), names[r]);
  }
}

TEST(TruthValue, RejectsNonMonotoneBits) {
  EXPECT_THROW(TruthValue::parse("0101"), rltl::Error);
  EXPECT_THROW(TruthValue::parse("1110"), rltl::Error);
  EXPECT_THROW(TruthValue::parse("011"), rltl::Error);
}

TEST(TruthValue, BitsMatchTheStringForm) {
  for (TruthValue v : rltl::kAllTruthValues) {
    const std::string s = v.to_string();
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(v.bit(k), s[k - 1] == '1') << s << " bit " << k;
  }
}

TEST(TruthValue, OrderIsTheRankOrder) {
  for (TruthValue a : rltl::kAllTruthValues)
    for (TruthValue b : rltl::kAllTruthValues) {
      EXPECT_EQ(a < b, a.rank() < b.rank());
      EXPECT_EQ(rltl::min(a, b).rank(), std::min(a.rank(), b.rank()));
      EXPECT_EQ(rltl::max(a, b).rank(), std::max(a.rank(), b.rank()));
    }
}

TEST(TruthValue, FromBitsRoundTrips) {
  for (TruthValue v : rltl::kAllTruthValues)
    EXPECT_EQ(TruthValue::from_bits({v.bit(1), v.bit(2), v.bit(3), v.bit(4)}), v);
}
