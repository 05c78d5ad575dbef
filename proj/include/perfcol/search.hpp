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

// Backtracking search for colorings of a finite integer-weighted multigraph
// in which selected ("constrained") vertices must realise their row of a
// target parameter matrix exactly. Used for periodic quotients (every
// vertex constrained) and for finite patches of a lattice (interior
// vertices constrained).
//
// Forward checking: for every constrained vertex u with color i, the running
// count of weight from u into color j never exceeds s_{i,j}. Since s's row
// sums equal the vertex weight, this makes every complete assignment exact.
// The next vertex is the unassigned one with the fewest admissible colors.

#include <perfcol/matrix.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfcol {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeightedEdge {
  std::size_t to = 0;
  std::int64_t weight = 0;
};

struct SearchProblem {
  std::size_t n = 0;
  std::vector<std::vector<WeightedEdge>> out;  // row u of the adjacency matrix, nonzero entries
  std::vector<bool> constrained;
  std::vector<std::vector<std::int64_t>> target;  // k x k
  std::vector<std::optional<std::size_t>> fixed;  // pre-assigned colors (may be empty)
  std::vector<std::size_t> coverage;              // vertices that must show >= min_colors colors
  std::size_t min_colors = 0;
  std::vector<std::size_t> priority;  // tie-break order for branching (defaults to 0..n-1)
  std::uint64_t node_budget = 10'000'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
};

/// Integer adjacency rows of a rational matrix. Throws on non-integer or
/// negative entries.
inline std::vector<std::vector<WeightedEdge>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<WeightedEdge>> rows(m.rows());
  for (std::size_t u = 0; u < m.rows(); ++u)
    for (std::size_t w = 0; w < m.cols(); ++w) {
      if (m(u, w) == 0) continue;
      const auto x = to_int64(m(u, w));
      if (!x || *x < 0) throw std::invalid_argument("search needs non-negative integer weights");
      rows[u].push_back({w, *x});
    }
  return rows;
}

/// Integer entries of S, or nullopt if some entry is not an integer.
inline std::optional<std::vector<std::vector<std::int64_t>>> integer_target(const RationalMatrix& s) {
  std::vector<std::vector<std::int64_t>> out(s.rows(), std::vector<std::int64_t>(s.cols()));
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      const auto x = to_int64(s(i, j));
      if (!x) return std::nullopt;
      out[i][j] = *x;
    }
  return out;
}

class ColoringSearch {
 public:
  /// Called with each complete coloring; return false to stop.
  using Visitor = std::function<bool(const std::vector<std::size_t>&)>;

  explicit ColoringSearch(SearchProblem problem) : p_(std::move(problem)) {
    k_ = p_.target.size();
    for (const auto& row : p_.target)
      if (row.size() != k_) throw std::invalid_argument("search target must be square");
    if (p_.out.size() != p_.n || p_.constrained.size() != p_.n)
      throw std::invalid_argument("search problem: inconsistent vertex count");
    if (p_.fixed.empty()) p_.fixed.assign(p_.n, std::nullopt);
    if (p_.priority.empty())
      for (std::size_t v = 0; v < p_.n; ++v) p_.priority.push_back(v);
    rank_.assign(p_.n, 0);
    for (std::size_t r = 0; r < p_.n; ++r) rank_[p_.priority[r]] = r;
    in_.assign(p_.n, {});
    degree_.assign(p_.n, 0);
    for (std::size_t u = 0; u < p_.n; ++u)
      for (const auto& e : p_.out[u]) {
        in_[e.to].push_back({u, e.weight});
        degree_[u] += e.weight;
      }
    row_ok_.assign(p_.n, std::vector<bool>(k_, true));
    for (std::size_t u = 0; u < p_.n; ++u)
      if (p_.constrained[u])
        for (std::size_t i = 0; i < k_; ++i) {
          std::int64_t sum = 0;
          for (auto x : p_.target[i]) sum += x;
          row_ok_[u][i] = sum == degree_[u];
        }
  }

  /// Visits solutions in depth-first order (colors tried in increasing
  /// order). Throws BudgetExceeded once the node budget is spent.
  SearchStats run(const Visitor& visit) {
    stats_ = {};
    color_.assign(p_.n, kUnassigned);
    count_.assign(p_.n, std::vector<std::int64_t>(k_, 0));
    if (k_ == 0) return stats_;
    for (std::size_t v = 0; v < p_.n; ++v)
      if (p_.fixed[v]) {
        if (*p_.fixed[v] >= k_ || !admissible(v, *p_.fixed[v])) return stats_;
        assign(v, *p_.fixed[v]);
      }
    visit_ = &visit;
    stopped_ = false;
    descend();
    return stats_;
  }

  /// First solution, if any.
  std::optional<std::vector<std::size_t>> first(SearchStats* stats = nullptr) {
    std::optional<std::vector<std::size_t>> found;
    const auto s = run([&](const std::vector<std::size_t>& c) {
      found = c;
      return false;
    });
    if (stats) *stats = s;
    return found;
  }

 private:
  static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

  bool admissible(std::size_t w, std::size_t j) const {
    if (p_.constrained[w]) {
      if (!row_ok_[w][j]) return false;
      for (std::size_t c = 0; c < k_; ++c) {
        std::int64_t have = count_[w][c];
        if (c == j)
          for (const auto& e : p_.out[w])
            if (e.to == w) have += e.weight;
        if (have > p_.target[j][c]) return false;
      }
    }
    for (const auto& e : in_[w]) {
      const std::size_t u = e.to;
      if (u == w || !p_.constrained[u] || color_[u] == kUnassigned) continue;
      if (count_[u][j] + e.weight > p_.target[color_[u]][j]) return false;
    }
    return true;
  }

  void assign(std::size_t w, std::size_t j) {
    color_[w] = j;
    for (const auto& e : in_[w]) count_[e.to][j] += e.weight;
  }

  void unassign(std::size_t w) {
    const std::size_t j = color_[w];
    for (const auto& e : in_[w]) count_[e.to][j] -= e.weight;
    color_[w] = kUnassigned;
  }

  bool coverage_possible() const {
    if (p_.min_colors == 0) return true;
    std::vector<bool> seen(k_, false);
    std::size_t distinct = 0, open = 0;
    for (auto v : p_.coverage) {
      if (color_[v] == kUnassigned) {
        ++open;
      } else if (!seen[color_[v]]) {
        seen[color_[v]] = true;
        ++distinct;
      }
    }
    return distinct + open >= p_.min_colors;
  }

  void descend() {
    if (stopped_) return;
    if (++stats_.nodes > p_.node_budget)
      throw BudgetExceeded("search node budget of " + std::to_string(p_.node_budget) + " exceeded");
    if (!coverage_possible()) return;

    std::size_t best = kUnassigned;
    std::size_t best_size = k_ + 1;
    std::vector<std::size_t> best_domain;
    std::vector<std::size_t> domain;
    for (std::size_t v = 0; v < p_.n; ++v) {
      if (color_[v] != kUnassigned) continue;
      domain.clear();
      for (std::size_t j = 0; j < k_; ++j)
        if (admissible(v, j)) domain.push_back(j);
      if (domain.empty()) return;
      if (domain.size() < best_size || (domain.size() == best_size && rank_[v] < rank_[best])) {
        best = v;
        best_size = domain.size();
        best_domain = domain;
      }
    }
    if (best == kUnassigned) {
      ++stats_.solutions;
      if (!(*visit_)(color_)) stopped_ = true;
      return;
    }
    for (std::size_t j : best_domain) {
      assign(best, j);
      descend();
      unassign(best);
      if (stopped_) return;
    }
  }

  SearchProblem p_;
  std::size_t k_ = 0;
  std::vector<std::size_t> rank_;
  std::vector<std::vector<WeightedEdge>> in_;
  std::vector<std::int64_t> degree_;
  std::vector<std::vector<bool>> row_ok_;
  std::vector<std::size_t> color_;
  std::vector<std::vector<std::int64_t>> count_;
  SearchStats stats_;
  const Visitor* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace perfcol
