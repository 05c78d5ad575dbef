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

// Circulant (multi)graphs C(d_1, ..., d_m) on Z: x ~ y iff |x - y| is in the
// multiset D. Repeated elements of D give parallel edges, so the graph is
// 2m-regular counting multiplicity.
//
// A T-periodic coloring of C(D) is perfect iff the induced coloring of the
// quotient multigraph on Z_T is perfect: m[x, y] counts the elements d of D
// with y = x + d (mod T) plus those with y = x - d (mod T).

#include <perfcol/coloring.hpp>
#include <perfcol/graph.hpp>
#include <perfcol/metric_filter.hpp>
#include <perfcol/periodic.hpp>
#include <perfcol/search.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfcol {

class CirculantSpec {
 public:
  CirculantSpec() = default;
  explicit CirculantSpec(std::vector<std::int64_t> d) : d_(std::move(d)) {
    if (d_.empty()) throw std::invalid_argument("circulant needs at least one connection");
    for (auto x : d_)
      if (x < 1) throw std::invalid_argument("circulant connections must be positive");
    std::sort(d_.begin(), d_.end());
  }

  const std::vector<std::int64_t>& d() const noexcept { return d_; }
  std::size_t m() const noexcept { return d_.size(); }
  std::int64_t valency() const noexcept { return 2 * static_cast<std::int64_t>(d_.size()); }
  bool contains(std::int64_t t) const { return std::binary_search(d_.begin(), d_.end(), t); }

 private:
  std::vector<std::int64_t> d_;
};

/// |{±d_1, ..., ±d_m} ∩ {t ± d_1, ..., t ± d_m}| as multisets (each value
/// counted min(multiplicity on the left, multiplicity on the right) times);
/// this is |N(x) ∩ N(x + t)|.
inline std::size_t circulant_h(const CirculantSpec& spec, std::int64_t t) {
  std::map<std::int64_t, std::size_t> left, right;
  for (auto d : spec.d()) {
    ++left[d];
    ++left[-d];
    ++right[t + d];
    ++right[t - d];
  }
  std::size_t h = 0;
  for (const auto& [value, count] : left)
    if (auto it = right.find(value); it != right.end()) h += std::min(count, it->second);
  return h;
}

/// Collects every t in 1..t_max at which two vertices x, x + t of different
/// colors would violate the two-color bound, i.e. b+c > 4m - h, b+c < h, or
/// b+c < h + 2 when t is in D. The period of any perfect (b,c)-coloring
/// divides each such t.
inline PeriodConstraint circulant_period_filter(const CirculantSpec& spec, const TwoColorParams& params,
                                                std::int64_t t_max) {
  if (params.r != spec.valency())
    throw std::invalid_argument("circulant_period_filter: r must equal 2m = " + std::to_string(spec.valency()));
  PeriodConstraint out;
  for (std::int64_t t = 1; t <= t_max; ++t) {
    const PairContext ctx(params.r, circulant_h(spec, t), spec.contains(t));
    if (two_color_check(ctx, params).infeasible()) {
      out.divisors.push_back(t);
      out.implied_period_divides = std::gcd(out.implied_period_divides, t);
    }
  }
  return out;
}

/// Beyond 2 max(D) the neighborhoods of x and x + t are disjoint.
inline std::int64_t default_t_max(const CirculantSpec& spec) { return 2 * spec.d().back() + 1; }

/// Quotient multigraph on Z_T.
inline Graph circulant_quotient(const CirculantSpec& spec, std::int64_t period) {
  if (period < 1) throw std::invalid_argument("circulant_quotient: period must be positive");
  const auto n = static_cast<std::size_t>(period);
  RationalMatrix m(n, n);
  for (std::int64_t x = 0; x < period; ++x)
    for (auto d : spec.d()) {
      m(x, (x + d) % period) += 1;
      m(x, ((x - d) % period + period) % period) += 1;
    }
  return Graph(std::move(m), false);
}

/// Least representative of a coloring of Z_T under rotations and color
/// permutations: colors are renumbered by first appearance, then the
/// lexicographically smallest rotation wins.
inline std::vector<std::size_t> canonical_cyclic_form(const std::vector<std::size_t>& colors) {
  const std::size_t n = colors.size();
  std::vector<std::size_t> best, candidate(n);
  for (std::size_t shift = 0; shift < n; ++shift) {
    std::map<std::size_t, std::size_t> relabel;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t c = colors[(i + shift) % n];
      auto [it, inserted] = relabel.try_emplace(c, relabel.size());
      candidate[i] = it->second;
    }
    if (best.empty() || candidate < best) best = candidate;
  }
  return best;
}

struct EnumeratedColoring {
  Coloring coloring;
  RationalMatrix parameters;
};

/// All perfect colorings of Z_T with at most k colors, one per orbit under
/// rotation and color permutation, in lexicographic order of the canonical
/// representative. Throws BudgetExceeded when k^T exceeds the budget.
inline std::vector<EnumeratedColoring> circulant_enumerate(const CirculantSpec& spec, std::int64_t period,
                                                           std::size_t k, std::uint64_t budget = 1U << 20U) {
  if (period < 1 || k < 1) throw std::invalid_argument("circulant_enumerate: need T >= 1 and k >= 1");
  long double candidates = 1;
  for (std::int64_t i = 0; i < period; ++i) candidates *= static_cast<long double>(k);
  if (candidates > static_cast<long double>(budget))
    throw BudgetExceeded("k^T = " + std::to_string(static_cast<double>(candidates)) + " exceeds budget " +
                         std::to_string(budget));
  const Graph quotient = circulant_quotient(spec, period);
  const auto n = static_cast<std::size_t>(period);
  std::vector<EnumeratedColoring> out;

  // Restricted growth strings: every color-permutation orbit appears once.
  std::vector<std::size_t> colors(n, 0);
  auto visit = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
    if (pos == n) {
      if (canonical_cyclic_form(colors) != colors) return;
      const Coloring f(colors, used);
      if (auto s = induced_parameters(quotient, f)) out.push_back({f, std::move(*s)});
      return;
    }
    for (std::size_t c = 0; c <= used && c < k; ++c) {
      colors[pos] = c;
      self(self, pos + 1, std::max(used, c + 1));
    }
  };
  visit(visit, 0, 0);
  return out;
}

/// Whether a (b,c)-coloring of C(D) exists, decided via the period filter and
/// an exhaustive search at the implied period.
struct CirculantDecision {
  TwoColorParams params;
  PeriodConstraint constraint;
  Outcome status = Outcome::Inconclusive;
  std::optional<EnumeratedColoring> witness;  // realises (b,c) or, with colors swapped, (c,b)
};

inline bool realises(const RationalMatrix& s, const TwoColorParams& params) {
  if (s.rows() != 2) return false;
  return s == params.matrix() || s == params.swapped().matrix();
}

inline CirculantDecision circulant_decide(const CirculantSpec& spec, const TwoColorParams& params,
                                          std::int64_t t_max, std::uint64_t budget = 1U << 20U) {
  CirculantDecision out{params, circulant_period_filter(spec, params, t_max), Outcome::Inconclusive, std::nullopt};
  const std::int64_t period = out.constraint.implied_period_divides;
  if (period == 0) return out;
  // Colorings whose period divides T are among the T-periodic ones.
  for (auto& e : circulant_enumerate(spec, period, 2, budget))
    if (realises(e.parameters, params)) {
      out.status = Outcome::Witness;
      out.witness = std::move(e);
      return out;
    }
  out.status = Outcome::Rejected;
  return out;
}

}  // namespace perfcol
