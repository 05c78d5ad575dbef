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

// Rejection filters for putative parameter matrices of perfect colorings.
//
// Every filter is a necessary condition. FEASIBLE means "not rejected by this
// test", never "a coloring exists".
//
// The core inequality: for a perfect coloring f with parameter matrix S of a
// graph with adjacency matrix M,
//
//     d([M]^u, [M]^v) >= d([S]^{f(u)}, [S]^{f(v)})     (L1 row distance)
//
// because s_{f(u),j} - s_{f(v),j} = sum_{w in J_j} (m_{u,w} - m_{v,w}) and the
// absolute value of a sum is at most the sum of absolute values. For simple
// r-regular graphs the left side equals 2(r - h) with h = |N(u) ∩ N(v)|.
//
// Equality case (simple graphs). Write A = N(u)\N(v), B = N(v)\N(u),
// C = N(u) ∩ N(v) and x_j, y_j, z_j for the number of color-j vertices in A,
// B, C. Then s_{i,j} = z_j + x_j and s_{i',j} = z_j + y_j. Equality in the
// triangle inequality forces x_j * y_j = 0 for every j, so
//     x_j = max(s_{i,j} - s_{i',j}, 0),  y_j = max(s_{i',j} - s_{i,j}, 0),
//     z_j = min(s_{i,j}, s_{i',j}).

#include <perfcol/coloring.hpp>
#include <perfcol/graph.hpp>
#include <perfcol/matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace perfcol {

enum class Status { Feasible, Infeasible, Inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Feasible: return "FEASIBLE";
    case Status::Infeasible: return "INFEASIBLE";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

/// "lhs <relation> rhs" with both sides exact. The relation text names the
/// inequality that must hold for feasibility.
struct Inequality {
  std::string relation;
  Rational lhs;
  Rational rhs;
};

struct FilterVerdict {
  Status status = Status::Inconclusive;
  Inequality checked;  // the violated inequality when status is Infeasible

  bool infeasible() const noexcept { return status == Status::Infeasible; }
};

/// Valency r, common-neighbor count h and adjacency of a vertex pair in a
/// simple graph.
struct PairContext {
  Rational r;
  std::size_t h = 0;
  bool adjacent = false;

  PairContext(Rational valency, std::size_t common, bool adj) : r(std::move(valency)), h(common), adjacent(adj) {
    if (r < 0 || Rational(static_cast<unsigned long>(h)) > r)
      throw std::invalid_argument("PairContext: need 0 <= h <= r");
    if (adjacent && Rational(static_cast<unsigned long>(h)) > r - 1)
      throw std::invalid_argument("PairContext: adjacent pair needs h <= r - 1");
  }

  Rational h_value() const { return Rational(static_cast<unsigned long>(h)); }
};

inline PairContext pair_context(const Graph& g, std::size_t u, std::size_t v) {
  const auto r = regularity(g);
  if (!r) throw std::invalid_argument("pair_context: graph is not regular");
  return {*r, common_neighbor_count(g, u, v), u != v && g.adjacent(u, v)};
}

namespace detail {
inline void require_row(const RationalMatrix& m, std::size_t i, const char* what) {
  if (i >= m.rows()) throw std::out_of_range(std::string(what) + " index out of range");
}
inline FilterVerdict verdict(bool ok, std::string relation, Rational lhs, Rational rhs) {
  return {ok ? Status::Feasible : Status::Infeasible, {std::move(relation), std::move(lhs), std::move(rhs)}};
}
}  // namespace detail

/// INFEASIBLE iff d([M]^u, [M]^v) < d([S]^i, [S]^j).
inline FilterVerdict pair_color_feasible(const RationalMatrix& m, const RationalMatrix& s, std::size_t u,
                                         std::size_t v, std::size_t i, std::size_t j) {
  if (!m.is_square() || !s.is_square()) throw std::invalid_argument("pair_color_feasible: M and S must be square");
  detail::require_row(m, u, "vertex");
  detail::require_row(m, v, "vertex");
  detail::require_row(s, i, "color");
  detail::require_row(s, j, "color");
  Rational lhs = l1_row_distance(m, u, v);
  Rational rhs = l1_row_distance(s, i, j);
  const bool ok = lhs >= rhs;
  return detail::verdict(ok, "d(M_u,M_v) >= d(S_i,S_j)", std::move(lhs), std::move(rhs));
}

/// INFEASIBLE iff d([S]^i, [S]^j) > 2(r - h).
inline FilterVerdict simple_pair_bound(const PairContext& ctx, const RationalMatrix& s, std::size_t i,
                                       std::size_t j) {
  detail::require_row(s, i, "color");
  detail::require_row(s, j, "color");
  for (std::size_t row = 0; row < s.rows(); ++row)
    if (s.row_sum(row) != ctx.r)
      throw std::invalid_argument("simple_pair_bound: row " + std::to_string(row + 1) + " of S does not sum to r");
  Rational lhs = l1_row_distance(s, i, j);
  Rational rhs = 2 * (ctx.r - ctx.h_value());
  const bool ok = lhs <= rhs;
  return detail::verdict(ok, "d(S_i,S_j) <= 2(r-h)", std::move(lhs), std::move(rhs));
}

/// Per-color counts in N(u) ∩ N(v), N(u)\N(v), N(v)\N(u).
struct ForcedDistributions {
  std::vector<Rational> intersection;
  std::vector<Rational> only_u;
  std::vector<Rational> only_v;
};

/// The color distributions pinned down when d([S]^i, [S]^j) = 2(r - h);
/// nullopt when the bound is not attained.
inline std::optional<ForcedDistributions> forced_distributions(const PairContext& ctx, const RationalMatrix& s,
                                                               std::size_t i, std::size_t j) {
  detail::require_row(s, i, "color");
  detail::require_row(s, j, "color");
  if (l1_row_distance(s, i, j) != 2 * (ctx.r - ctx.h_value())) return std::nullopt;
  ForcedDistributions out;
  for (std::size_t c = 0; c < s.cols(); ++c) {
    const Rational& x = s(i, c);
    const Rational& y = s(j, c);
    out.intersection.push_back(x < y ? x : y);
    out.only_u.push_back(x > y ? Rational(x - y) : Rational(0));
    out.only_v.push_back(y > x ? Rational(y - x) : Rational(0));
  }
  return out;
}

/// For u, v of different colors in a (b,c)-coloring:
///   h <= b + c <= 2r - h, and b + c >= h + 2 when u ~ v.
inline FilterVerdict two_color_check(const PairContext& ctx, const TwoColorParams& params) {
  if (params.r != ctx.r) throw std::invalid_argument("two_color_check: valency mismatch");
  const Rational sum = params.sum();
  const Rational h = ctx.h_value();
  if (ctx.adjacent) {
    if (sum < h + 2) return detail::verdict(false, "b+c >= h+2", sum, h + 2);
  } else if (sum < h) {
    return detail::verdict(false, "b+c >= h", sum, h);
  }
  const Rational upper = 2 * ctx.r - h;
  return detail::verdict(sum <= upper, "b+c <= 2r-h", sum, upper);
}

enum class ForcedColor { ColorOfU, ColorOfV };

inline const char* to_string(ForcedColor c) { return c == ForcedColor::ColorOfU ? "color of u" : "color of v"; }

/// Which bound of two_color_check is attained and what it forces:
/// every vertex of N(u)\N(v) gets only_u, every vertex of N(v)\N(u) gets
/// only_v. For adjacent pairs the sets exclude v and u themselves.
struct ForcedSets {
  bool lower = true;  // b+c attains the lower bound (h, or h+2 when adjacent)
  ForcedColor only_u = ForcedColor::ColorOfU;
  ForcedColor only_v = ForcedColor::ColorOfV;
};

inline std::optional<ForcedSets> two_color_forced_sets(const PairContext& ctx, const TwoColorParams& params) {
  if (params.r != ctx.r) throw std::invalid_argument("two_color_forced_sets: valency mismatch");
  const Rational sum = params.sum();
  const Rational lower = ctx.h_value() + (ctx.adjacent ? 2 : 0);
  if (sum == lower) return ForcedSets{true, ForcedColor::ColorOfU, ForcedColor::ColorOfV};
  if (sum == 2 * ctx.r - ctx.h_value()) return ForcedSets{false, ForcedColor::ColorOfV, ForcedColor::ColorOfU};
  return std::nullopt;
}

/// The core inequality applied to the distance-l graph: M^l against S^l.
inline FilterVerdict distance_power_check(const RationalMatrix& m, const RationalMatrix& s, unsigned l,
                                          std::size_t u, std::size_t v, std::size_t i, std::size_t j) {
  if (l == 0) throw std::invalid_argument("distance_power_check: l must be positive");
  FilterVerdict out = pair_color_feasible(matrix_pow(m, l), matrix_pow(s, l), u, v, i, j);
  out.checked.relation = "d(M^" + std::to_string(l) + "_u,M^" + std::to_string(l) + "_v) >= d(S^" +
                         std::to_string(l) + "_i,S^" + std::to_string(l) + "_j)";
  return out;
}

struct DrgVerdicts {
  FilterVerdict ball;
  FilterVerdict sphere;
};

/// |B_r(u) Δ B_r(v)| >= d([p_r^B(S)]^i, [p_r^B(S)]^j) and the same for
/// spheres, for a distance-regular graph.
inline DrgVerdicts drg_check(const Graph& g, const RationalMatrix& s, std::size_t radius, std::size_t u,
                             std::size_t v, std::size_t i, std::size_t j) {
  const auto ia = intersection_array(g);
  if (!ia) throw std::invalid_argument("drg_check: graph is not distance-regular");
  if (radius == 0 || radius > ia->diameter())
    throw std::invalid_argument("drg_check: radius must lie in 1..diameter");
  detail::require_row(g.adjacency(), u, "vertex");
  detail::require_row(g.adjacency(), v, "vertex");
  detail::require_row(s, i, "color");
  detail::require_row(s, j, "color");
  const auto spheres = distance_matrices(g);
  RationalMatrix ball = spheres[0];
  for (std::size_t r = 1; r <= radius; ++r) ball += spheres[r];
  const auto polys = distance_polynomials(*ia);
  const std::string tag = std::to_string(radius);

  auto check = [&](const RationalMatrix& indicator, const Polynomial& poly, const std::string& name) {
    Rational lhs = l1_row_distance(indicator, u, v);
    Rational rhs = l1_row_distance(eval_poly(poly, s), i, j);
    const bool ok = lhs >= rhs;
    return detail::verdict(ok, "|" + name + "_" + tag + "(u) Δ " + name + "_" + tag + "(v)| >= d(p(S)_i,p(S)_j)",
                           std::move(lhs), std::move(rhs));
  };
  return {check(ball, polys.ball[radius], "B"), check(spheres[radius], polys.sphere[radius], "W")};
}

/// One row of a pair scan.
struct PairVerdict {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  FilterVerdict verdict;
};

/// pair_color_feasible (on M^l, S^l) for every vertex pair u < v with
/// i = f(u), j = f(v). Rows come out ordered by (u, v) whatever the thread
/// count.
inline std::vector<PairVerdict> scan_pairs(const RationalMatrix& m, const Coloring& f, const RationalMatrix& s,
                                           unsigned l = 1, unsigned threads = 1) {
  if (m.rows() != f.size()) throw std::invalid_argument("scan_pairs: coloring length differs from graph order");
  if (s.rows() != f.k()) throw std::invalid_argument("scan_pairs: S order differs from color count");
  if (l == 0) throw std::invalid_argument("scan_pairs: l must be positive");
  const RationalMatrix ml = matrix_pow(m, l);
  const RationalMatrix sl = matrix_pow(s, l);
  const std::size_t n = m.rows();
  std::vector<std::vector<PairVerdict>> per_u(n);
  auto work = [&](std::size_t first) {
    for (std::size_t u = first; u < n; u += std::max(1U, threads))
      for (std::size_t v = u + 1; v < n; ++v)
        per_u[u].push_back({u, v, f[u], f[v], pair_color_feasible(ml, sl, u, v, f[u], f[v])});
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  std::vector<PairVerdict> out;
  for (auto& rows : per_u)
    for (auto& row : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace perfcol
