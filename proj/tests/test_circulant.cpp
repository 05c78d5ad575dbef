/*
Copyright 2026 The perfcol Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <perfcol/circulant.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "generators.hpp"

namespace perfcol {
namespace {

const CirculantSpec kD124({1, 2, 4});

/// h counted on an explicit segment of the infinite circulant: common
/// neighbors of 50 and 50 + t among 0..120.
std::size_t segment_h(const std::vector<std::int64_t>& d, std::int64_t t) {
  std::vector<std::int64_t> mult_u(121, 0), mult_v(121, 0);
  for (auto x : d) {
    ++mult_u[50 + x];
    ++mult_u[50 - x];
    ++mult_v[50 + t + x];
    ++mult_v[50 + t - x];
  }
  std::size_t h = 0;
  for (int w = 0; w <= 120; ++w) h += static_cast<std::size_t>(std::min(mult_u[w], mult_v[w]));
  return h;
}

TEST(CirculantSpec, Validation) {
  EXPECT_THROW(CirculantSpec(std::vector<std::int64_t>{}), std::invalid_argument);
  EXPECT_THROW(CirculantSpec({1, 0}), std::invalid_argument);
  const CirculantSpec spec({4, 1, 1});
  EXPECT_EQ(spec.d(), (std::vector<std::int64_t>{1, 1, 4}));
  EXPECT_EQ(spec.valency(), 6);
}

TEST(CirculantH, Examples) {
  EXPECT_EQ(circulant_h(kD124, 3), 4U);
  EXPECT_EQ(circulant_h(CirculantSpec({1}), 2), 1U);
  EXPECT_EQ(circulant_h(kD124, 9), 0U);
  EXPECT_EQ(circulant_h(kD124, 100), 0U);
}

TEST(CirculantH, MatchesSegmentAndReflection) {
  for (const std::vector<std::int64_t>& d :
       {std::vector<std::int64_t>{1, 2, 4}, {1}, {2, 3}, {1, 1, 3}, {2, 2, 5, 7}, {1, 2, 3, 4}}) {
    const CirculantSpec spec(d);
    for (std::int64_t t = 1; t <= 20; ++t) {
      EXPECT_EQ(circulant_h(spec, t), segment_h(d, t)) << "t=" << t;
      EXPECT_EQ(circulant_h(spec, t), circulant_h(spec, -t)) << "t=" << t;
    }
  }
}

TEST(CirculantPeriodFilter, Examples) {
  for (int b = 0; b <= 6; ++b)
    for (int c = 0; c <= 6; ++c) {
      const auto pc = circulant_period_filter(kD124, TwoColorParams{b, c, 6}, default_t_max(kD124));
      for (auto t : pc.divisors) EXPECT_EQ(t % pc.implied_period_divides, 0);
      if (b + c < 4 || b + c > 8) {
        EXPECT_NE(std::find(pc.divisors.begin(), pc.divisors.end(), 3), pc.divisors.end()) << b << "," << c;
        ASSERT_NE(pc.implied_period_divides, 0);
        EXPECT_EQ(3 % pc.implied_period_divides, 0);
      }
    }
  // (b,c) inside every window: t = 3 with h = 4 needs 4 <= b+c <= 8, t in D needs b+c >= h+2.
  const auto inside = circulant_period_filter(kD124, TwoColorParams{3, 3, 6}, default_t_max(kD124));
  EXPECT_EQ(inside.implied_period_divides, 0);
  EXPECT_TRUE(inside.divisors.empty());

  const auto d1 = circulant_period_filter(CirculantSpec({1}), TwoColorParams{2, 2, 2}, 5);
  EXPECT_NE(std::find(d1.divisors.begin(), d1.divisors.end(), 2), d1.divisors.end());
  EXPECT_EQ(d1.implied_period_divides, 2);
  EXPECT_THROW(circulant_period_filter(kD124, TwoColorParams{2, 2, 4}, 5), std::invalid_argument);
}

TEST(CirculantQuotient, Examples) {
  const Graph q3 = circulant_quotient(kD124, 3);
  for (std::size_t x = 0; x < 3; ++x) {
    EXPECT_EQ(q3.adjacency()(x, x), 0);
    EXPECT_EQ(q3.adjacency()(x, (x + 1) % 3), 3);
    EXPECT_EQ(q3.adjacency()(x, (x + 2) % 3), 3);
  }
  EXPECT_EQ(circulant_quotient(CirculantSpec({1}), 9).adjacency(), Graph::cycle(9).adjacency());
  const Graph loops = circulant_quotient(CirculantSpec({5}), 5);
  for (std::size_t x = 0; x < 5; ++x) EXPECT_EQ(loops.adjacency()(x, x), 2);
  EXPECT_THROW(circulant_quotient(kD124, 0), std::invalid_argument);
}

TEST(CirculantQuotient, MatchesDirectConstructionAndRowSums) {
  for (const std::vector<std::int64_t>& d : {std::vector<std::int64_t>{1, 2, 4}, {1, 1, 3}, {2, 5}}) {
    const CirculantSpec spec(d);
    for (std::int64_t t = 1; t <= 9; ++t) {
      const Graph q = circulant_quotient(spec, t);
      EXPECT_EQ(q.adjacency(), testing::circulant_matrix(d, t));
      for (std::size_t x = 0; x < q.order(); ++x) EXPECT_EQ(q.adjacency().row_sum(x), spec.valency());
    }
  }
}

TEST(CanonicalCyclicForm, LeastOrbitMember) {
  EXPECT_EQ(canonical_cyclic_form({1, 0, 0}), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(canonical_cyclic_form({2, 2, 0, 1}), (std::vector<std::size_t>{0, 0, 1, 2}));
  // Brute force over all rotations and color permutations of 3 colors.
  testing::for_each_coloring(6, 3, [](const std::vector<std::size_t>& c) {
    std::vector<std::size_t> best;
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
      for (std::size_t s = 0; s < 6; ++s) {
        std::vector<std::size_t> cand(6);
        for (std::size_t i = 0; i < 6; ++i) cand[i] = perm[c[(i + s) % 6]];
        if (best.empty() || cand < best) best = cand;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    ASSERT_EQ(canonical_cyclic_form(c), best);
  });
}

TEST(CirculantEnumerate, C124PeriodThree) {
  // Oracle: all 2^3 colorings of Z_3, perfectness by brute force.
  const RationalMatrix m = testing::circulant_matrix({1, 2, 4}, 3);
  std::size_t perfect = 0;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<std::size_t> c{std::size_t(mask & 1), std::size_t((mask >> 1) & 1), std::size_t((mask >> 2) & 1)};
    const std::size_t k = (mask == 0 || mask == 7) ? 1 : 2;
    if (k == 1) std::fill(c.begin(), c.end(), 0);
    perfect += testing::brute_parameters(m, c, k).has_value();
  }
  EXPECT_EQ(perfect, 8U);  // every coloring of Z_3 is perfect here

  const auto found = circulant_enumerate(kD124, 3, 2);
  ASSERT_EQ(found.size(), 2U);
  EXPECT_EQ(found[0].coloring.colors(), (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_EQ(found[0].parameters, RationalMatrix{{6}});
  EXPECT_EQ(found[1].coloring.colors(), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(found[1].parameters, (RationalMatrix{{3, 3}, {6, 0}}));
  EXPECT_TRUE(realises(found[1].parameters, TwoColorParams{6, 3, 6}));
  for (auto [b, c] : {std::pair{1, 1}, {2, 1}, {5, 4}, {5, 5}, {6, 4}, {6, 5}, {6, 6}})
    EXPECT_FALSE(realises(found[1].parameters, TwoColorParams{b, c, 6}));
}

TEST(CirculantEnumerate, AlternatingCycle) {
  const auto found = circulant_enumerate(CirculantSpec({1}), 2, 2);
  ASSERT_EQ(found.size(), 2U);
  EXPECT_EQ(found[1].coloring.colors(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(found[1].parameters, (RationalMatrix{{0, 2}, {2, 0}}));
}

TEST(CirculantEnumerate, MatchesBruteForceOrbitCount) {
  for (const std::vector<std::int64_t>& d : {std::vector<std::int64_t>{1, 2}, {1, 3}, {1, 2, 4}}) {
    const CirculantSpec spec(d);
    for (std::int64_t t = 1; t <= 7; ++t) {
      const RationalMatrix m = testing::circulant_matrix(d, t);
      std::set<std::vector<std::size_t>> orbits;
      for (std::size_t k = 1; k <= 3; ++k)
        testing::for_each_coloring(t, k, [&](const std::vector<std::size_t>& c) {
          if (testing::brute_parameters(m, c, k)) orbits.insert(canonical_cyclic_form(c));
        });
      const auto found = circulant_enumerate(spec, t, 3);
      ASSERT_EQ(found.size(), orbits.size()) << "T=" << t;
      std::size_t idx = 0;
      for (const auto& orbit : orbits) EXPECT_EQ(found[idx++].coloring.colors(), orbit);
    }
  }
}

TEST(CirculantEnumerate, BudgetExceeded) {
  EXPECT_THROW(circulant_enumerate(kD124, 21, 2), BudgetExceeded);
  EXPECT_THROW(circulant_enumerate(kD124, 5, 3, 100), BudgetExceeded);
  EXPECT_NO_THROW(circulant_enumerate(kD124, 5, 3, 243));
}

TEST(CirculantPeriodFilter, NeverContradictsEnumeration) {
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<std::int64_t> d;
    for (int i = 0; i < 4; ++i)
      if (mask & (1 << i)) d.push_back(i + 1);
    const CirculantSpec spec(d);
    for (std::int64_t t = 2; t <= 10; ++t)
      for (const auto& e : circulant_enumerate(spec, t, 2)) {
        if (e.coloring.k() != 2) continue;
        const auto params = two_color_params(e.parameters, spec.valency());
        const auto pc = circulant_period_filter(spec, params, 3 * t);
        if (pc.implied_period_divides == 0) continue;
        // The coloring repeats with period gcd(T, g).
        const auto g = static_cast<std::size_t>(std::gcd(t, pc.implied_period_divides));
        for (std::size_t x = 0; x < e.coloring.size(); ++x)
          ASSERT_EQ(e.coloring[x], e.coloring[(x + g) % e.coloring.size()]) << "mask " << mask << " T=" << t;
      }
  }
}

TEST(CirculantDecide, C124) {
  for (auto [b, c] : {std::pair{1, 1}, {2, 1}, {5, 4}, {5, 5}, {6, 4}, {6, 5}, {6, 6}}) {
    const auto dec = circulant_decide(kD124, TwoColorParams{b, c, 6}, default_t_max(kD124));
    EXPECT_EQ(dec.status, Outcome::Rejected) << b << "," << c;
    EXPECT_EQ(3 % dec.constraint.implied_period_divides, 0);
  }
  const auto witness = circulant_decide(kD124, TwoColorParams{6, 3, 6}, default_t_max(kD124));
  EXPECT_EQ(witness.status, Outcome::Witness);
  ASSERT_TRUE(witness.witness);
  EXPECT_TRUE(verify_perfect(make_triple(circulant_quotient(kD124, 3).adjacency(), witness.witness->coloring,
                                         witness.witness->parameters)));
  EXPECT_EQ(circulant_decide(kD124, TwoColorParams{3, 3, 6}, default_t_max(kD124)).status, Outcome::Inconclusive);
}

}  // namespace
}  // namespace perfcol
