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

#pragma once

#include <perfcol/matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace perfcol {

/// Thrown when an operation defined only for simple graphs is called on a
/// weighted or oriented one.
struct NotSimpleGraph : std::domain_error {
  using std::domain_error::domain_error;
};

/// A graph given by its adjacency matrix. Entries are arbitrary rationals
/// (oriented, weighted multigraphs allowed); the simple flag promises a
/// symmetric 0/1 matrix with zero diagonal and is checked on construction.
class Graph {
 public:
  Graph() = default;

  explicit Graph(RationalMatrix adjacency, bool simple = false,
                 std::optional<std::vector<std::string>> labels = std::nullopt)
      : adjacency_(std::move(adjacency)), simple_(simple), labels_(std::move(labels)) {
    if (!adjacency_.is_square()) throw std::invalid_argument("adjacency matrix must be square");
    if (labels_ && labels_->size() != adjacency_.rows())
      throw std::invalid_argument("vertex label count differs from vertex count");
    if (simple_) {
      for (std::size_t u = 0; u < order(); ++u) {
        if (adjacency_(u, u) != 0) throw std::invalid_argument("simple graph with a loop");
        for (std::size_t v = 0; v < order(); ++v) {
          const auto& x = adjacency_(u, v);
          if (x != 0 && x != 1) throw std::invalid_argument("simple graph with non-0/1 entry");
          if (x != adjacency_(v, u)) throw std::invalid_argument("simple graph not symmetric");
        }
      }
    }
  }

  /// Undirected simple graph from an edge list.
  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    RationalMatrix a(n, n);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("simple graph with a loop");
      a(u, v) = 1;
      a(v, u) = 1;
    }
    return Graph(std::move(a), true);
  }

  static Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edges(n, edges);
  }

  static Graph path(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return from_edges(n, edges);
  }

  static Graph complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return from_edges(n, edges);
  }

  static Graph edgeless(std::size_t n) { return Graph(RationalMatrix(n, n), true); }

  /// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  static Graph petersen() {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      edges.emplace_back(i, i + 5);
    }
    return from_edges(10, edges);
  }

  std::size_t order() const noexcept { return adjacency_.rows(); }
  const RationalMatrix& adjacency() const noexcept { return adjacency_; }
  bool simple() const noexcept { return simple_; }
  const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }

  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_.at(u, v) != 0; }

 private:
  RationalMatrix adjacency_;
  bool simple_ = false;
  std::optional<std::vector<std::string>> labels_;
};

namespace detail {
inline void require_simple(const Graph& g, const char* op) {
  if (!g.simple()) throw NotSimpleGraph(std::string(op) + ": graph is not simple");
}
}  // namespace detail

/// r when every row sum of the adjacency matrix equals r.
inline std::optional<Rational> regularity(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const Rational r = g.adjacency().row_sum(0);
  for (std::size_t u = 1; u < g.order(); ++u)
    if (g.adjacency().row_sum(u) != r) return std::nullopt;
  return r;
}

/// N(u), sorted ascending.
inline std::vector<std::size_t> neighborhood(const Graph& g, std::size_t u) {
  detail::require_simple(g, "neighborhood");
  if (u >= g.order()) throw std::out_of_range("vertex out of range");
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < g.order(); ++w)
    if (g.adjacency()(u, w) == 1) out.push_back(w);
  return out;
}

/// h = |N(u) ∩ N(v)|.
inline std::size_t common_neighbor_count(const Graph& g, std::size_t u, std::size_t v) {
  detail::require_simple(g, "common_neighbor_count");
  if (u >= g.order() || v >= g.order()) throw std::out_of_range("vertex out of range");
  std::size_t h = 0;
  for (std::size_t w = 0; w < g.order(); ++w)
    if (g.adjacency()(u, w) == 1 && g.adjacency()(v, w) == 1) ++h;
  return h;
}

/// All-pairs shortest path lengths by BFS; nullopt entries mark unreachable pairs.
inline std::vector<std::vector<std::optional<std::size_t>>> distances(const Graph& g) {
  detail::require_simple(g, "distances");
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t u = 0; u < n; ++u) adj[u] = neighborhood(g, u);
  std::vector<std::vector<std::optional<std::size_t>>> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    auto& d = dist[s];
    d.assign(n, std::nullopt);
    d[s] = 0;
    std::queue<std::size_t> queue;
    queue.push(s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t w : adj[u])
        if (!d[w]) {
          d[w] = *d[u] + 1;
          queue.push(w);
        }
    }
  }
  return dist;
}

/// Distance matrices A_0..A_d with A_r[u,v] = 1 iff rho(u,v) = r; d is the diameter.
inline std::vector<RationalMatrix> distance_matrices(const Graph& g) {
  const auto dist = distances(g);
  const std::size_t n = g.order();
  std::size_t diameter = 0;
  for (const auto& row : dist)
    for (const auto& d : row) {
      if (!d) throw std::invalid_argument("distance_matrices: graph is disconnected");
      diameter = std::max(diameter, *d);
    }
  std::vector<RationalMatrix> out(diameter + 1, RationalMatrix(n, n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) out[*dist[u][v]](u, v) = 1;
  return out;
}

/// Intersection array {b_0, ..., b_{d-1}; c_1, ..., c_d} of a distance-regular graph.
struct IntersectionArray {
  std::vector<Rational> b;  // b_0 .. b_{d-1}
  std::vector<Rational> c;  // c_1 .. c_d

  IntersectionArray() = default;
  IntersectionArray(std::vector<Rational> b_seq, std::vector<Rational> c_seq)
      : b(std::move(b_seq)), c(std::move(c_seq)) {
    if (b.empty() || b.size() != c.size())
      throw std::invalid_argument("intersection array: b and c must have equal length d >= 1");
    for (std::size_t i = 0; i <= diameter(); ++i)
      if (a(i) < 0) throw std::invalid_argument("intersection array: negative a_" + std::to_string(i));
  }

  std::size_t diameter() const noexcept { return b.size(); }
  const Rational& valency() const { return b.front(); }
  Rational b_at(std::size_t i) const { return i < b.size() ? b[i] : Rational(0); }
  Rational c_at(std::size_t i) const { return i == 0 ? Rational(0) : c.at(i - 1); }
  /// a_i = b_0 - b_i - c_i.
  Rational a(std::size_t i) const { return valency() - b_at(i) - c_at(i); }

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Checks distance-regularity straight from the definition: for every pair
/// (u,v) at distance r the counts c_r = |N(u) ∩ W_{r-1}(v)| and
/// b_r = |N(u) ∩ W_{r+1}(v)| must depend on r only.
inline std::optional<IntersectionArray> intersection_array(const Graph& g) {
  detail::require_simple(g, "intersection_array");
  const std::size_t n = g.order();
  if (n < 2 || !regularity(g)) return std::nullopt;
  const auto dist = distances(g);
  std::size_t diameter = 0;
  for (const auto& row : dist)
    for (const auto& d : row) {
      if (!d) return std::nullopt;
      diameter = std::max(diameter, *d);
    }
  std::vector<std::optional<std::size_t>> b(diameter + 1), c(diameter + 1);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t r = *dist[u][v];
      std::size_t down = 0, up = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (g.adjacency()(u, w) != 1) continue;
        const std::size_t dw = *dist[w][v];
        if (dw + 1 == r) ++down;
        if (dw == r + 1) ++up;
      }
      if ((c[r] && *c[r] != down) || (b[r] && *b[r] != up)) return std::nullopt;
      c[r] = down;
      b[r] = up;
    }
  std::vector<Rational> bs, cs;
  for (std::size_t r = 0; r < diameter; ++r) bs.emplace_back(static_cast<unsigned long>(*b[r]));
  for (std::size_t r = 1; r <= diameter; ++r) cs.emplace_back(static_cast<unsigned long>(*c[r]));
  return IntersectionArray(std::move(bs), std::move(cs));
}

/// Sphere polynomials p_r^W (row u of p_r^W(M) is the indicator of the sphere
/// of radius r around u) and ball polynomials p_r^B = sum_{i<=r} p_i^W.
struct DistancePolynomials {
  std::vector<Polynomial> sphere;
  std::vector<Polynomial> ball;
};

/// Standard three-term recurrence for distance-regular graphs:
///   c_{r+1} p_{r+1}(x) = (x - a_r) p_r(x) - b_{r-1} p_{r-1}(x),
/// with p_0 = 1 (so p_1 = x whenever c_1 = 1, as in every simple graph).
inline DistancePolynomials distance_polynomials(const IntersectionArray& ia) {
  const std::size_t d = ia.diameter();
  DistancePolynomials out;
  out.sphere.push_back(Polynomial::constant(1));
  for (std::size_t r = 0; r < d; ++r) {
    const Rational next_c = ia.c_at(r + 1);
    if (next_c == 0) throw std::invalid_argument("intersection array: zero c_" + std::to_string(r + 1));
    Polynomial next = (Polynomial::x() - Polynomial::constant(ia.a(r))) * out.sphere[r];
    if (r > 0) next = next - out.sphere[r - 1] * ia.b_at(r - 1);
    out.sphere.push_back(next * Rational(1 / next_c));
  }
  Polynomial acc = Polynomial::constant(0);
  for (const auto& p : out.sphere) {
    acc = acc + p;
    out.ball.push_back(acc);
  }
  return out;
}

}  // namespace perfcol
