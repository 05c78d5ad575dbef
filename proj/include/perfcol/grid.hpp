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

// Two-dimensional lattice graphs on Z^2 given by a symmetric offset set:
// z ~ z + o for every offset o.
//
//   square grid:      ±(1,0), ±(0,1)
//   triangular grid:  ±(1,0), ±(0,1), ±(1,-1)
//
// The triangular grid is drawn as Z^2 with one family of diagonals added;
// it is 6-regular and every adjacent pair has exactly 2 common neighbors.
//
// Periodic colorings are handled exactly through quotient multigraphs
// Z^2 / L (loops and parallel edges kept). Nonexistence of arbitrary,
// possibly aperiodic, colorings is shown by patch search: every perfect
// coloring restricts to a patch coloring in which each interior vertex
// (all neighbors inside the patch) sees exactly its row of S.

#include <perfcol/coloring.hpp>
#include <perfcol/graph.hpp>
#include <perfcol/metric_filter.hpp>
#include <perfcol/periodic.hpp>
#include <perfcol/search.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace perfcol {

struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(std::int64_t s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend auto operator<=>(const Vec2&, const Vec2&) = default;

  std::string to_string() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

class GridSpec {
 public:
  GridSpec() = default;
  explicit GridSpec(std::vector<Vec2> offsets, std::string name = "custom")
      : offsets_(std::move(offsets)), name_(std::move(name)) {
    std::sort(offsets_.begin(), offsets_.end());
    if (offsets_.empty()) throw std::invalid_argument("grid needs at least one offset");
    if (std::adjacent_find(offsets_.begin(), offsets_.end()) != offsets_.end())
      throw std::invalid_argument("grid offsets must be distinct");
    for (const auto& o : offsets_) {
      if (o == Vec2{}) throw std::invalid_argument("grid offset (0,0) is not allowed");
      if (!contains(-o)) throw std::invalid_argument("grid offsets must be closed under negation");
    }
  }

  static GridSpec square() { return GridSpec({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, "square"); }
  static GridSpec triangular() {
    return GridSpec({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}, "triangular");
  }

  const std::vector<Vec2>& offsets() const noexcept { return offsets_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t valency() const noexcept { return offsets_.size(); }
  bool contains(Vec2 v) const { return std::binary_search(offsets_.begin(), offsets_.end(), v); }

  /// Largest coordinate magnitude among the offsets.
  std::int64_t reach() const {
    std::int64_t r = 0;
    for (const auto& o : offsets_) r = std::max({r, o.x, -o.x, o.y, -o.y});
    return r;
  }

 private:
  std::vector<Vec2> offsets_;
  std::string name_;
};

struct GridH {
  std::size_t h = 0;
  bool adjacent = false;
};

/// h = |N(0) ∩ N(delta)| = |offsets ∩ (delta + offsets)|; adjacent iff delta is an offset.
inline GridH grid_h(const GridSpec& spec, Vec2 delta) {
  if (delta == Vec2{}) throw std::invalid_argument("grid_h: delta must be nonzero");
  GridH out;
  for (const auto& o : spec.offsets())
    if (spec.contains(delta + o)) ++out.h;
  out.adjacent = spec.contains(delta);
  return out;
}

/// A subgroup of Z^2 in Hermite normal form: generated by (a, b) and (0, d)
/// with a, d >= 0 and 0 <= b < d when d > 0.
struct Lattice {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t d = 0;

  static Lattice rectangular(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw std::invalid_argument("periods must be positive");
    return {p, 0, q};
  }

  static Lattice generated_by(const std::vector<Vec2>& gens) {
    Vec2 first{};  // the generator with nonzero x, once found
    std::int64_t d = 0;
    for (Vec2 v : gens) {
      if (v.x == 0) {
        d = std::gcd(d, v.y);
        continue;
      }
      if (first.x == 0) {
        first = v;
        continue;
      }
      // Unimodular change of basis {first, v} -> {(g, *), (0, *)}.
      auto [g, s, t] = ext_gcd(first.x, v.x);
      const Vec2 combined = s * first + t * v;
      const Vec2 vertical = (v.x / g) * first - (first.x / g) * v;
      d = std::gcd(d, vertical.y);
      first = combined;
    }
    if (first.x < 0) first = -first;
    Lattice out{first.x, first.y, std::abs(d)};
    if (out.d > 0) out.b = ((out.b % out.d) + out.d) % out.d;
    if (out.a == 0) out.b = 0;
    return out;
  }

  int rank() const noexcept { return (a != 0 ? 1 : 0) + (d != 0 ? 1 : 0); }
  std::int64_t index() const noexcept { return a * d; }  // |Z^2 / L| when rank 2

  bool contains(Vec2 v) const {
    std::int64_t y = v.y;
    if (a == 0) {
      if (v.x != 0) return false;
    } else {
      if (v.x % a != 0) return false;
      y -= (v.x / a) * b;
    }
    return d == 0 ? y == 0 : y % d == 0;
  }

  /// Coset representative in [0,a) x [0,d); rank 2 only.
  Vec2 reduce(Vec2 v) const {
    const std::int64_t kx = floor_div(v.x, a);
    const std::int64_t x = v.x - kx * a;
    const std::int64_t y = ((v.y - kx * b) % d + d) % d;
    return {x, y};
  }

  std::size_t index_of(Vec2 v) const {
    const Vec2 r = reduce(v);
    return static_cast<std::size_t>(r.x * d + r.y);
  }

  std::string to_string() const {
    return "<" + Vec2{a, b}.to_string() + ", " + Vec2{0, d}.to_string() + ">";
  }

 private:
  struct Egcd {
    std::int64_t g, s, t;
  };
  static Egcd ext_gcd(std::int64_t p, std::int64_t q) {
    std::int64_t old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const std::int64_t quot = old_r / r;
      std::tie(old_r, r) = std::pair{r, old_r - quot * r};
      std::tie(old_s, s) = std::pair{s, old_s - quot * s};
      std::tie(old_t, t) = std::pair{t, old_t - quot * t};
    }
    return {old_r, old_s, old_t};
  }
  static std::int64_t floor_div(std::int64_t p, std::int64_t q) {
    std::int64_t quot = p / q;
    if ((p % q != 0) && ((p < 0) != (q < 0))) --quot;
    return quot;
  }
};

/// Quotient multigraph Z^2 / L for a full-rank lattice; vertex (x, y) of the
/// fundamental box [0,a) x [0,d) has index x*d + y.
inline Graph lattice_quotient(const GridSpec& spec, const Lattice& lattice) {
  if (lattice.rank() != 2) throw std::invalid_argument("lattice_quotient: lattice must have rank 2");
  const auto n = static_cast<std::size_t>(lattice.index());
  RationalMatrix m(n, n);
  for (std::int64_t x = 0; x < lattice.a; ++x)
    for (std::int64_t y = 0; y < lattice.d; ++y) {
      const std::size_t u = lattice.index_of({x, y});
      for (const auto& o : spec.offsets()) m(u, lattice.index_of(Vec2{x, y} + o)) += 1;
    }
  return Graph(std::move(m), false);
}

/// Quotient by pZ x qZ: colorings with f(x+p, y) = f(x, y + q) = f(x, y).
inline Graph torus_quotient(const GridSpec& spec, std::int64_t p, std::int64_t q) {
  return lattice_quotient(spec, Lattice::rectangular(p, q));
}

/// A (p,q)-periodic coloring of Z^2; colors[x*q + y] for 0 <= x < p, 0 <= y < q.
struct GridColoring {
  std::int64_t p = 1;
  std::int64_t q = 1;
  Coloring coloring;

  std::size_t at(Vec2 z) const {
    const std::int64_t x = ((z.x % p) + p) % p;
    const std::int64_t y = ((z.y % q) + q) % q;
    return coloring[static_cast<std::size_t>(x * q + y)];
  }
};

namespace detail {
inline SearchProblem quotient_problem(const Graph& quotient, const std::vector<std::vector<std::int64_t>>& target,
                                      std::uint64_t budget) {
  SearchProblem problem;
  problem.n = quotient.order();
  problem.out = integer_rows(quotient.adjacency());
  problem.constrained.assign(problem.n, true);
  problem.target = target;
  for (std::size_t v = 0; v < problem.n; ++v) problem.coverage.push_back(v);
  problem.min_colors = target.size();
  problem.node_budget = budget;
  return problem;
}
}  // namespace detail

/// All colorings of Z^2 / L realising S with every color used, in search order.
inline std::vector<Coloring> quotient_colorings(const GridSpec& spec, const Lattice& lattice, const RationalMatrix& s,
                                                std::uint64_t budget = 10'000'000, std::size_t limit = SIZE_MAX,
                                                SearchStats* stats = nullptr) {
  const auto target = integer_target(s);
  if (!s.is_square()) throw std::invalid_argument("target parameter matrix must be square");
  std::vector<Coloring> out;
  if (!target || lattice.index() < static_cast<std::int64_t>(s.rows())) {
    if (stats) *stats = {};
    return out;
  }
  ColoringSearch search(detail::quotient_problem(lattice_quotient(spec, lattice), *target, budget));
  const auto st = search.run([&](const std::vector<std::size_t>& colors) {
    out.emplace_back(colors, s.rows());
    return out.size() < limit;
  });
  if (stats) *stats = st;
  return out;
}

/// Looks for a (p,q)-periodic coloring with parameter matrix S. No witness
/// is INCONCLUSIVE: colorings with other periods may exist.
inline SearchOutcome torus_search(const GridSpec& spec, std::int64_t p, std::int64_t q, const RationalMatrix& s,
                                  std::uint64_t budget = 10'000'000) {
  SearchStats stats;
  const Lattice lattice = Lattice::rectangular(p, q);
  auto found = quotient_colorings(spec, lattice, s, budget, 1, &stats);
  SearchOutcome out;
  out.certificate.nodes = stats.nodes;
  out.certificate.periods = {p, q};
  out.certificate.scope = "periods " + std::to_string(p) + "x" + std::to_string(q);
  if (found.empty()) return out;
  const Graph quotient = lattice_quotient(spec, lattice);
  const auto params = induced_parameters(quotient, found.front());
  if (!params || *params != s) throw std::logic_error("torus_search: witness failed re-verification");
  out.status = Outcome::Witness;
  out.witness = PeriodicWitness{{p, q}, found.front(), *params};
  return out;
}

inline std::vector<GridColoring> torus_search_all(const GridSpec& spec, std::int64_t p, std::int64_t q,
                                                  const RationalMatrix& s, std::uint64_t budget = 10'000'000) {
  std::vector<GridColoring> out;
  for (auto& f : quotient_colorings(spec, Lattice::rectangular(p, q), s, budget))
    out.push_back({p, q, std::move(f)});
  return out;
}

/// The linear maps of Z^2 that permute the offset set (the point group of the
/// lattice graph fixing the origin).
inline std::vector<std::array<std::int64_t, 4>> point_group(const GridSpec& spec) {
  std::vector<std::array<std::int64_t, 4>> out;
  const std::int64_t r = spec.reach();
  for (std::int64_t a = -r; a <= r; ++a)
    for (std::int64_t b = -r; b <= r; ++b)
      for (std::int64_t c = -r; c <= r; ++c)
        for (std::int64_t d = -r; d <= r; ++d) {
          if (a * d - b * c != 1 && a * d - b * c != -1) continue;
          bool ok = true;
          for (const auto& o : spec.offsets())
            if (!spec.contains({a * o.x + b * o.y, c * o.x + d * o.y})) {
              ok = false;
              break;
            }
          if (ok) out.push_back({a, b, c, d});
        }
  return out;
}

/// Whether g(z) = f(A z + t) up to a color permutation for some map A in
/// `maps` and some translation t (two-colorings: identity or swap).
inline bool equivalent_colorings(const GridColoring& f, const GridColoring& g,
                                 const std::vector<std::array<std::int64_t, 4>>& maps, bool allow_color_swap) {
  if (f.coloring.k() != g.coloring.k()) return false;
  const std::int64_t n = std::lcm(std::lcm(f.p, f.q), std::lcm(g.p, g.q));
  const std::size_t k = f.coloring.k();
  for (const auto& A : maps)
    for (std::int64_t tx = 0; tx < n; ++tx)
      for (std::int64_t ty = 0; ty < n; ++ty) {
        // Color map from f's colors to g's colors, built on the fly.
        std::vector<std::size_t> map(k, SIZE_MAX);
        bool ok = true;
        for (std::int64_t x = 0; x < n && ok; ++x)
          for (std::int64_t y = 0; y < n && ok; ++y) {
            const Vec2 image{A[0] * x + A[1] * y + tx, A[2] * x + A[3] * y + ty};
            const std::size_t from = f.at(image);
            const std::size_t to = g.at({x, y});
            if (map[from] == SIZE_MAX) map[from] = to;
            ok = map[from] == to;
          }
        if (!ok) continue;
        bool identity = true;
        for (std::size_t i = 0; i < k; ++i) identity = identity && map[i] == i;
        if (identity || allow_color_swap) return true;
      }
  return false;
}

struct DeltaCheck {
  Vec2 delta;
  std::size_t h = 0;
  bool adjacent = false;
  FilterVerdict verdict;
};

/// Result of the two-color rejection test on a lattice graph.
struct GridRejectReport {
  Status status = Status::Inconclusive;  // Infeasible: proved absent; Feasible: periodic witness found
  std::vector<DeltaCheck> checks;        // every delta of the window
  std::vector<Vec2> monochromatic;       // deltas with f(z) = f(z + delta) forced
  Lattice forced;                        // lattice generated by the monochromatic deltas
  std::string reason;
  std::optional<SearchOutcome> quotient_search;
};

namespace detail {
/// Can the multiset `parts` be split into bins with exactly the given sums?
inline bool splits_into(std::vector<std::int64_t> parts, std::vector<std::int64_t> sums) {
  std::sort(parts.rbegin(), parts.rend());
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == parts.size()) return std::all_of(sums.begin(), sums.end(), [](auto s) { return s == 0; });
    for (auto& s : sums)
      if (s >= parts[i]) {
        s -= parts[i];
        if (self(self, i + 1)) return true;
        s += parts[i];
      }
    return false;
  };
  for (auto s : sums)
    if (s < 0) return false;
  return place(place, 0);
}
}  // namespace detail

/// Applies the two-color bound at every delta with |dx|, |dy| <= window.
/// A failing delta means all pairs z, z + delta share a color, so f is
/// constant on cosets of the lattice L they generate. Each vertex then sees
/// the offsets grouped into classes mod L, each class monochromatic; a row
/// of S that cannot be assembled from whole classes rejects (b,c). When L
/// has finite index the quotient Z^2 / L is searched exhaustively.
inline GridRejectReport grid_reject_2color(const GridSpec& spec, const TwoColorParams& params,
                                           std::int64_t window = 0, std::uint64_t budget = 10'000'000) {
  const Rational r(static_cast<unsigned long>(spec.valency()));
  if (params.r != r) throw std::invalid_argument("grid_reject_2color: r must equal the grid valency");
  if (window <= 0) window = 2 * spec.reach();
  GridRejectReport out;
  for (std::int64_t dx = -window; dx <= window; ++dx)
    for (std::int64_t dy = -window; dy <= window; ++dy) {
      const Vec2 delta{dx, dy};
      if (delta == Vec2{}) continue;
      const GridH gh = grid_h(spec, delta);
      DeltaCheck check{delta, gh.h, gh.adjacent, two_color_check(PairContext(r, gh.h, gh.adjacent), params)};
      if (check.verdict.infeasible()) out.monochromatic.push_back(delta);
      out.checks.push_back(std::move(check));
    }
  if (out.monochromatic.empty()) {
    out.reason = "two-color bound holds at every delta";
    return out;
  }
  out.forced = Lattice::generated_by(out.monochromatic);

  // Offsets grouped by coset of L; the zero coset acts as loops.
  std::int64_t loops = 0;
  std::vector<std::pair<Vec2, std::int64_t>> classes;
  for (const auto& o : spec.offsets()) {
    if (out.forced.contains(o)) {
      ++loops;
      continue;
    }
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& cls) { return out.forced.contains(o - cls.first); });
    if (it == classes.end())
      classes.emplace_back(o, 1);
    else
      ++it->second;
  }
  std::vector<std::int64_t> parts;
  for (const auto& cls : classes) parts.push_back(cls.second);
  const auto target = integer_target(params.matrix());
  if (!target) {
    out.status = Status::Infeasible;
    out.reason = "parameters are not integers";
    return out;
  }
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<std::int64_t> sums = (*target)[i];
    sums[i] -= loops;
    if (!detail::splits_into(parts, sums)) {
      std::string mults;
      for (auto x : parts) mults += (mults.empty() ? "" : ",") + std::to_string(x);
      out.status = Status::Infeasible;
      out.reason = "coloring is constant on cosets of " + out.forced.to_string() + "; neighbor classes of sizes {" +
                   mults + "} (plus " + std::to_string(loops) + " own-color) cannot give row " +
                   std::to_string(i + 1) + " = (" + std::to_string((*target)[i][0]) + "," +
                   std::to_string((*target)[i][1]) + ")";
      return out;
    }
  }
  if (out.forced.rank() == 2) {
    SearchStats stats;
    auto found = quotient_colorings(spec, out.forced, params.matrix(), budget, 1, &stats);
    SearchOutcome search;
    search.certificate.nodes = stats.nodes;
    search.certificate.scope = "quotient by " + out.forced.to_string();
    if (found.empty()) {
      search.status = Outcome::Rejected;
      out.status = Status::Infeasible;
      out.reason = "no coloring of the finite quotient by " + out.forced.to_string() + " realises S";
    } else {
      const auto s = induced_parameters(lattice_quotient(spec, out.forced), found.front());
      search.status = Outcome::Witness;
      search.witness = PeriodicWitness{{out.forced.a, out.forced.b, out.forced.d}, found.front(), *s};
      out.status = Status::Feasible;
      out.reason = "a coloring periodic under " + out.forced.to_string() + " realises S";
    }
    out.quotient_search = std::move(search);
    return out;
  }
  out.reason = "monochromatic directions " + out.forced.to_string() + " give no contradiction";
  return out;
}

/// Finite rectangle [0,width) x [0,height) of the lattice graph.
struct Patch {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t index(Vec2 z) const { return static_cast<std::size_t>(z.y) * width + static_cast<std::size_t>(z.x); }
  bool inside(Vec2 z) const {
    return z.x >= 0 && z.y >= 0 && z.x < static_cast<std::int64_t>(width) && z.y < static_cast<std::int64_t>(height);
  }
  Vec2 point(std::size_t i) const {
    return {static_cast<std::int64_t>(i % width), static_cast<std::int64_t>(i / width)};
  }
};

/// Searches colorings of a width x height patch in which every interior
/// vertex sees exactly its row of S. REJECTED proves that no perfect
/// coloring with parameter matrix S exists on the infinite grid.
///
/// Symmetry breaking: the center vertex gets a fixed color, trying each
/// color in turn unless S is invariant under swapping its two colors. When
/// every offset fits between two interior vertices, at least two colors must
/// appear in the interior (translate a bichromatic edge there).
inline SearchOutcome patch_search(const GridSpec& spec, const RationalMatrix& s, std::size_t width,
                                  std::size_t height, std::uint64_t budget = 10'000'000) {
  if (!s.is_square() || s.rows() == 0) throw std::invalid_argument("patch_search: S must be square");
  const Patch patch{width, height};
  const std::size_t n = width * height;
  SearchOutcome out;
  out.certificate.patch = {width, height};
  out.certificate.scope = "patch " + std::to_string(width) + "x" + std::to_string(height);

  SearchProblem problem;
  problem.n = n;
  problem.out.resize(n);
  problem.constrained.assign(n, false);
  std::vector<std::size_t> interior;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 z = patch.point(i);
    bool all_inside = true;
    for (const auto& o : spec.offsets()) {
      if (patch.inside(z + o))
        problem.out[i].push_back({patch.index(z + o), 1});
      else
        all_inside = false;
    }
    if (all_inside) {
      problem.constrained[i] = true;
      interior.push_back(i);
    }
  }
  if (interior.empty()) throw std::invalid_argument("patch_search: patch has no interior vertex");

  const auto target = integer_target(s);
  if (!target) {
    out.status = Outcome::Rejected;
    out.certificate.scope += " (non-integer parameters)";
    return out;
  }
  problem.target = *target;
  problem.node_budget = budget;

  const Vec2 middle{static_cast<std::int64_t>(width / 2), static_cast<std::int64_t>(height / 2)};
  auto dist2 = [&](std::size_t i) {
    const Vec2 z = patch.point(i) - middle;
    return z.x * z.x + z.y * z.y;
  };
  const std::size_t center = *std::min_element(interior.begin(), interior.end(),
                                               [&](auto a, auto b) { return dist2(a) < dist2(b); });

  // Branch outward from the center.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return dist2(a) < dist2(b); });
  problem.priority = order;

  const std::size_t k = s.rows();
  bool bichromatic_sound = k >= 2;
  for (const auto& o : spec.offsets()) {
    bool fits = false;
    for (auto i : interior) fits = fits || (patch.inside(patch.point(i) + o) && problem.constrained[patch.index(patch.point(i) + o)]);
    bichromatic_sound = bichromatic_sound && fits;
  }
  if (bichromatic_sound) {
    problem.coverage = interior;
    problem.min_colors = 2;
  }

  const bool swap_symmetric = k == 2 && s(0, 0) == s(1, 1) && s(0, 1) == s(1, 0);
  const std::size_t center_colors = swap_symmetric ? 1 : k;
  std::uint64_t nodes = 0;
  for (std::size_t c0 = 0; c0 < center_colors; ++c0) {
    SearchProblem run = problem;
    run.fixed.assign(n, std::nullopt);
    run.fixed[center] = c0;
    run.node_budget = budget - nodes;
    ColoringSearch search(std::move(run));
    SearchStats stats;
    const auto found = search.first(&stats);
    nodes += stats.nodes;
    if (found) {
      out.certificate.nodes = nodes;
      out.status = Outcome::Inconclusive;
      return out;
    }
  }
  out.certificate.nodes = nodes;
  out.status = Outcome::Rejected;
  return out;
}

/// Smallest square side in [3, max_side] at which patch_search rejects.
inline std::optional<std::pair<std::size_t, SearchOutcome>> minimal_rejecting_patch(
    const GridSpec& spec, const RationalMatrix& s, std::size_t max_side, std::uint64_t budget = 10'000'000) {
  const auto first_side = static_cast<std::size_t>(2 * spec.reach() + 1);
  for (std::size_t side = first_side; side <= max_side; ++side) {
    auto outcome = patch_search(spec, s, side, side, budget);
    if (outcome.status == Outcome::Rejected) return std::pair{side, std::move(outcome)};
  }
  return std::nullopt;
}

}  // namespace perfcol
