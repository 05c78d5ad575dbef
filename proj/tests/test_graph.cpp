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

#include <perfcol/graph.hpp>

#include <gtest/gtest.h>

#include "generators.hpp"

namespace perfcol {
namespace {

/// Floyd-Warshall distances, independent of the BFS in graph.hpp.
std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = static_cast<int>(g.order());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u == v)
        d[u][v] = 0;
      else if (g.adjacency()(u, v) == 1)
        d[u][v] = 1;
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
  return d;
}

TEST(Graph, SimpleInvariantChecked) {
  EXPECT_THROW(Graph(RationalMatrix{{0, 1}, {0, 0}}, true), std::invalid_argument);
  EXPECT_THROW(Graph(RationalMatrix{{1, 0}, {0, 0}}, true), std::invalid_argument);
  EXPECT_THROW(Graph(RationalMatrix{{0, 2}, {2, 0}}, true), std::invalid_argument);
  EXPECT_THROW(Graph(RationalMatrix(2, 3)), std::invalid_argument);
  EXPECT_THROW(Graph(RationalMatrix(2, 2), false, std::vector<std::string>{"a"}), std::invalid_argument);
  EXPECT_NO_THROW(Graph(RationalMatrix{{0, 2}, {Rational(1, 2), 1}}, false));
}

TEST(Regularity, Examples) {
  EXPECT_EQ(regularity(Graph::cycle(6)), Rational(2));
  EXPECT_FALSE(regularity(Graph::path(3)).has_value());
  EXPECT_EQ(regularity(Graph::petersen()), Rational(3));
  const Graph torus(testing::torus_matrix(testing::square_offsets(), 5, 5), true);
  EXPECT_EQ(regularity(torus), Rational(4));
}

TEST(Neighborhood, Examples) {
  EXPECT_EQ(neighborhood(Graph::cycle(4), 0), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(neighborhood(Graph::complete(3), 0), (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(neighborhood(Graph::edgeless(4), 2).empty());
  EXPECT_THROW(neighborhood(Graph(RationalMatrix{{0, 2}, {2, 0}}), 0), NotSimpleGraph);
}

TEST(CommonNeighbors, Examples) {
  EXPECT_EQ(common_neighbor_count(Graph::cycle(4), 0, 2), 2U);
  EXPECT_EQ(common_neighbor_count(Graph::cycle(6), 0, 1), 0U);
  const Graph torus(testing::torus_matrix(testing::square_offsets(), 5, 5), true);
  EXPECT_EQ(common_neighbor_count(torus, 0 * 5 + 0, 1 * 5 + 1), 2U);  // (0,0) and (1,1)
  EXPECT_THROW(common_neighbor_count(Graph(RationalMatrix{{0, 2}, {2, 0}}), 0, 1), NotSimpleGraph);
}

TEST(CommonNeighbors, EqualsWalkCountOfLengthTwo) {
  for (const Graph& g : {Graph::petersen(), Graph::cycle(7), Graph::complete(5),
                         Graph(testing::torus_matrix(testing::triangular_offsets(), 4, 5), true)}) {
    const RationalMatrix m2 = matrix_pow(g.adjacency(), 2);
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v = 0; v < g.order(); ++v)
        if (u != v) {
          EXPECT_EQ(Rational(static_cast<unsigned long>(common_neighbor_count(g, u, v))), m2(u, v));
        }
  }
}

TEST(CommonNeighbors, L1DistanceIdentity) {
  // d([M]^u, [M]^v) = 2(r - h) for simple r-regular graphs.
  for (const Graph& g : {Graph::petersen(), Graph::cycle(8), Graph::complete(4),
                         Graph(testing::torus_matrix(testing::square_offsets(), 5, 5), true)}) {
    const Rational r = *regularity(g);
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v = 0; v < g.order(); ++v) {
        if (u == v) continue;
        const Rational h(static_cast<unsigned long>(common_neighbor_count(g, u, v)));
        EXPECT_EQ(l1_row_distance(g.adjacency(), u, v), 2 * (r - h)) << u << "," << v;
      }
  }
}

TEST(DistanceMatrices, C6) {
  const auto a = distance_matrices(Graph::cycle(6));
  ASSERT_EQ(a.size(), 4U);
  EXPECT_EQ(a[0], RationalMatrix::identity(6));
  EXPECT_EQ(a[1], Graph::cycle(6).adjacency());
  RationalMatrix antipodal(6, 6);
  for (int u = 0; u < 6; ++u) antipodal(u, (u + 3) % 6) = 1;
  EXPECT_EQ(a[3], antipodal);
  EXPECT_THROW(distance_matrices(Graph::edgeless(3)), std::invalid_argument);
}

TEST(DistanceMatrices, SumToAllOnesAndMatchFloyd) {
  for (const Graph& g : {Graph::petersen(), Graph::cycle(9), Graph::path(5)}) {
    const auto a = distance_matrices(g);
    const auto d = floyd(g);
    RationalMatrix sum(g.order(), g.order());
    for (std::size_t r = 0; r < a.size(); ++r) {
      sum += a[r];
      for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = 0; v < g.order(); ++v) EXPECT_EQ(a[r](u, v) == 1, d[u][v] == static_cast<int>(r));
    }
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v = 0; v < g.order(); ++v) EXPECT_EQ(sum(u, v), 1);
  }
}

/// Oracle: intersection numbers by counting over all pairs with Floyd distances.
std::optional<IntersectionArray> brute_array(const Graph& g) {
  const auto d = floyd(g);
  const std::size_t n = g.order();
  int diam = 0;
  for (const auto& row : d)
    for (int x : row) diam = std::max(diam, x);
  std::vector<int> b(diam + 1, -1), c(diam + 1, -1);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const int r = d[u][v];
      int cr = 0, br = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (g.adjacency()(u, w) != 1) continue;
        cr += d[w][v] == r - 1;
        br += d[w][v] == r + 1;
      }
      if ((c[r] >= 0 && c[r] != cr) || (b[r] >= 0 && b[r] != br)) return std::nullopt;
      c[r] = cr;
      b[r] = br;
    }
  std::vector<Rational> bs, cs;
  for (int r = 0; r < diam; ++r) bs.emplace_back(b[r]);
  for (int r = 1; r <= diam; ++r) cs.emplace_back(c[r]);
  return IntersectionArray(bs, cs);
}

TEST(IntersectionArray, Examples) {
  const auto c6 = intersection_array(Graph::cycle(6));
  ASSERT_TRUE(c6);
  EXPECT_EQ(*c6, IntersectionArray({2, 1, 1}, {1, 1, 2}));
  EXPECT_EQ(*c6, *brute_array(Graph::cycle(6)));

  const auto pet = intersection_array(Graph::petersen());
  ASSERT_TRUE(pet);
  EXPECT_EQ(*pet, IntersectionArray({3, 2}, {1, 1}));
  EXPECT_EQ(*pet, *brute_array(Graph::petersen()));

  // C4 plus the chord 0-2 is not even regular; the brute oracle also finds
  // two adjacent pairs with different counts.
  const Graph chord = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  EXPECT_FALSE(intersection_array(chord).has_value());
  EXPECT_FALSE(brute_array(chord).has_value());
  // Regular but not distance-regular: the 3-prism.
  const Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_FALSE(intersection_array(prism).has_value());
  EXPECT_FALSE(brute_array(prism).has_value());
}

TEST(IntersectionArray, RejectsMalformed) {
  EXPECT_THROW(IntersectionArray({2, 1}, {1}), std::invalid_argument);
  EXPECT_THROW(IntersectionArray({}, {}), std::invalid_argument);
  EXPECT_THROW(IntersectionArray({2, 3}, {1, 1}), std::invalid_argument);  // a_1 < 0
}

TEST(DistancePolynomials, BaseCasesAndC6) {
  const auto polys = distance_polynomials(IntersectionArray({2, 1, 1}, {1, 1, 2}));
  EXPECT_EQ(polys.sphere[0], Polynomial::constant(1));
  EXPECT_EQ(polys.sphere[1], Polynomial::x());
  EXPECT_EQ(polys.sphere[2], Polynomial({-2, 0, 1}));
  EXPECT_EQ(polys.ball[1], Polynomial({1, 1}));
  EXPECT_THROW(distance_polynomials(IntersectionArray({2, 1}, {1, 0})), std::invalid_argument);
}

TEST(DistancePolynomials, SpheresMatchBfs) {
  for (const Graph& g : {Graph::cycle(5), Graph::cycle(6), Graph::cycle(8), Graph::complete(4), Graph::petersen(),
                         Graph::cycle(11)}) {
    const auto ia = intersection_array(g);
    ASSERT_TRUE(ia);
    const auto polys = distance_polynomials(*ia);
    const auto a = distance_matrices(g);
    ASSERT_EQ(polys.sphere.size(), a.size());
    RationalMatrix ball(g.order(), g.order());
    for (std::size_t r = 0; r < a.size(); ++r) {
      ball += a[r];
      EXPECT_EQ(eval_poly(polys.sphere[r], g.adjacency()), a[r]);
      EXPECT_EQ(eval_poly(polys.ball[r], g.adjacency()), ball);
    }
  }
}

}  // namespace
}  // namespace perfcol
