#include <doctest.h>

#include <algorithm>
#include <vector>

#include "toricgit/plane_curve.hpp"

using namespace toricgit;

namespace {

// Direct enumeration of the weighted multiplicity minimum, independent of the
// truncation argument used by the library routine.
Int brute_min_weight(long d, long m, const VecZ& w) {
  bool first = true;
  Int best = 0;
  for (long a = 0; a <= d; ++a)
    for (long b = 0; a + b <= d; ++b) {
      long c = d - a - b;
      if (c > d - m) continue;
      Int v = Int(a) * w(0) + Int(b) * w(1) + Int(c) * w(2);
      if (first || v < best) best = v, first = false;
    }
  return best;
}

}  // namespace

TEST_CASE("one-parameter subgroup normalization") {
  CHECK(exact_eq(normalize(OnePS{vecz({1, 1, -2})}), vecz({1, 1, -2})));
  CHECK(exact_eq(normalize(OnePS{vecz({3, 3, 0})}), vecz({1, 1, -2})));
  CHECK(exact_eq(normalize(OnePS{vecz({1, 0, 0})}), vecz({2, -1, -1})));
  CHECK(exact_eq(normalize(OnePS{vecz({0, 0, 0})}), vecz({0, 0, 0})));
  CHECK(exact_eq(normalize(OnePS{vecz({5, 2, 2})}), vecz({2, -1, -1})));
  // already summing to zero but not divisible by the length
  CHECK(exact_eq(normalize(OnePS{vecz({2, -1, -1})}), vecz({2, -1, -1})));
}

TEST_CASE("minimal weight under the distinguished subgroup") {
  OnePS lambda{vecz({1, 1, -2})};
  CHECK(plane_curve_min_weight(50, 34, lambda) == 2);
  CHECK(plane_curve_min_weight(3, 3, lambda) == 3);
  CHECK(plane_curve_min_weight(4, 0, lambda) == -8);
  CHECK(plane_curve_min_weight(2, 2, lambda) == 2);
  // closed form 3m - 2d against enumeration
  for (long d = 1; d <= 12; ++d)
    for (long m = 0; m <= d; ++m) {
      Int got = plane_curve_min_weight(d, m, lambda);
      CHECK(got == Int(3 * m - 2 * d));
      CHECK(got == brute_min_weight(d, m, vecz({1, 1, -2})));
    }
  CHECK_THROWS_AS((void)plane_curve_min_weight(3, 4, lambda), std::invalid_argument);
  CHECK_THROWS_AS((void)plane_curve_min_weight(3, -1, lambda), std::invalid_argument);
}

TEST_CASE("minimal weight under other subgroups matches enumeration") {
  struct Case {
    long d, m;
    VecZ w;
  };
  std::vector<Case> cases = {
      {5, 2, vecz({1, 0, 0})},  {7, 3, vecz({4, 1, 1})},   {6, 4, vecz({0, 1, 2})},
      {8, 5, vecz({2, 2, -1})}, {9, 3, vecz({-1, 3, -2})},
  };
  for (const auto& c : cases) {
    OnePS lambda{c.w};
    CHECK(plane_curve_min_weight(c.d, c.m, lambda) == brute_min_weight(c.d, c.m, normalize(lambda)));
  }
}

TEST_CASE("genus comparison is exact") {
  CHECK(genus_condition(50, 34));   // 2*561 = 1122 < 1176
  CHECK_FALSE(genus_condition(50, 35));
  CHECK_FALSE(genus_condition(30, 21));
  CHECK_FALSE(genus_condition(2, 0));  // 0 < 0 fails
  CHECK(genus_condition(3, 0));
  CHECK(genus_condition(3, 1));
  CHECK_FALSE(genus_condition(3, 2));
}

TEST_CASE("unstable smoothable search") {
  CHECK(find_unstable_smoothable(20).empty());
  CHECK(find_unstable_smoothable(24).empty());

  // first degree where instability meets the genus bound
  auto first = find_unstable_smoothable(25);
  REQUIRE(first.size() == 1);
  CHECK(first[0].d == 25);
  CHECK(first[0].m == 17);
  CHECK(first[0].min_weight == 1);

  auto hits = find_unstable_smoothable(60);
  REQUIRE_FALSE(hits.empty());
  bool found = false;
  long count_d50 = 0;
  for (const auto& h : hits) {
    CHECK(3 * h.m > 2 * h.d);
    CHECK(genus_condition(h.d, h.m));
    CHECK(h.min_weight == Int(3 * h.m - 2 * h.d));
    CHECK(h.min_weight > 0);
    if (h.d == 50) {
      ++count_d50;
      CHECK(h.m == 34);
    }
    if (h.d == 50 && h.m == 34) {
      found = true;
      CHECK(h.min_weight == 2);
    }
  }
  CHECK(found);
  CHECK(count_d50 == 1);
  // results come sorted by (d, m)
  CHECK(std::is_sorted(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    return a.d != b.d ? a.d < b.d : a.m < b.m;
  }));
}
