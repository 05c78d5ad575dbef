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

// Reproduces the worked examples on the square grid, the triangular grid and
// the circulant graph C(1,2,4).

#include <perfcol/circulant.hpp>
#include <perfcol/grid.hpp>
#include <perfcol/metric_filter.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace perfcol {

struct ReproItem {
  std::string id;
  std::string claim;
  std::string observed;
  bool pass = false;
};

inline std::vector<ReproItem> reproduce_examples(std::uint64_t budget = 10'000'000, std::size_t max_patch = 8) {
  std::vector<ReproItem> items;
  auto pair_str = [](int b, int c) { return "(" + std::to_string(b) + "," + std::to_string(c) + ")"; };

  const GridSpec square = GridSpec::square();
  {
    const GridH gh = grid_h(square, {1, 1});
    items.push_back({"square.h", "h = |N(u) ∩ N(v)| = 2 for u = (x,y), v = (x+1,y+1)",
                     "h = " + std::to_string(gh.h), gh.h == 2 && !gh.adjacent});
  }
  {
    const auto report = grid_reject_2color(square, {4, 3, 4});
    std::string observed = "not flagged";
    bool pass = false;
    for (const auto& c : report.checks)
      if (c.delta == Vec2{1, 1}) {
        observed = "delta (1,1): " + c.verdict.checked.relation + " fails, " + to_string(c.verdict.checked.lhs) +
                   " > " + to_string(c.verdict.checked.rhs) + "; " + report.reason;
        pass = c.verdict.infeasible() && c.verdict.checked.lhs == 7 && c.verdict.checked.rhs == 6 &&
               report.status == Status::Infeasible;
      }
    items.push_back({"square.4-3.bound", "no (4,3)-coloring: 7 = b + c > 2r - h = 6", observed, pass});
  }
  {
    const auto hit = minimal_rejecting_patch(square, TwoColorParams{4, 3, 4}.matrix(), max_patch, budget);
    items.push_back({"square.4-3.patch", "no perfect (4,3)-coloring of the square grid",
                     hit ? "patch search REJECTED at " + std::to_string(hit->first) + "x" + std::to_string(hit->first)
                         : "not rejected up to " + std::to_string(max_patch) + "x" + std::to_string(max_patch),
                     hit.has_value()});
  }

  const GridSpec tri = GridSpec::triangular();
  {
    bool all = true;
    for (const auto& o : tri.offsets()) {
      const GridH gh = grid_h(tri, o);
      all = all && gh.h == 2 && gh.adjacent;
    }
    items.push_back({"triangular.h", "h = 2 for every adjacent pair", all ? "h = 2 at all 6 offsets" : "mismatch", all});
  }
  {
    std::string rejected;
    bool pass = true;
    for (int b = 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c) {
        const bool infeasible = two_color_check(PairContext(6, 2, true), TwoColorParams{b, c, 6}).infeasible();
        pass = pass && infeasible == (b + c < 4 || b + c > 10);
        if (infeasible && b >= c) rejected += (rejected.empty() ? "" : " ") + pair_str(b, c);
      }
    items.push_back({"triangular.window", "4 <= b + c <= 10; no (1,1)-, (2,1)-, (6,5)-, (6,6)-colorings",
                     "rejected (b >= c): " + rejected,
                     pass && rejected == "(1,1) (2,1) (6,5) (6,6)"});
  }
  for (auto [b, c] : {std::pair{3, 1}, std::pair{5, 5}, std::pair{6, 4}}) {
    const auto hit = minimal_rejecting_patch(tri, TwoColorParams{b, c, 6}.matrix(), max_patch, budget);
    items.push_back({"triangular." + std::to_string(b) + "-" + std::to_string(c),
                     "no perfect " + pair_str(b, c) + "-coloring of the triangular grid",
                     hit ? "patch search REJECTED at " + std::to_string(hit->first) + "x" + std::to_string(hit->first)
                         : "not rejected up to " + std::to_string(max_patch) + "x" + std::to_string(max_patch),
                     hit.has_value()});
  }
  {
    const auto outcome = torus_search(tri, 4, 1, TwoColorParams{2, 2, 6}.matrix(), budget);
    std::string observed = to_string(outcome.status);
    if (outcome.witness) {
      observed += " colors by x mod 4:";
      for (auto col : outcome.witness->coloring.colors()) observed += " " + std::to_string(col + 1);
    }
    items.push_back({"triangular.2-2", "a perfect (2,2)-coloring of the triangular grid exists", observed,
                     outcome.status == Outcome::Witness});
  }

  const CirculantSpec d124({1, 2, 4});
  {
    const std::size_t h = circulant_h(d124, 3);
    items.push_back({"circulant.h", "h = |{±1,±2,±4} ∩ {3±1,3±2,3±4}| = 4", "h = " + std::to_string(h), h == 4});
  }
  {
    std::string observed;
    bool pass = true;
    for (auto [b, c] : {std::pair{1, 1}, {2, 1}, {5, 4}, {5, 5}, {6, 4}, {6, 5}, {6, 6}}) {
      const auto decision = circulant_decide(d124, {b, c, 6}, default_t_max(d124), budget);
      const auto t = decision.constraint.implied_period_divides;
      observed += (observed.empty() ? "" : "; ") + pair_str(b, c) + " T|" + std::to_string(t) + " " +
                  to_string(decision.status);
      pass = pass && decision.status == Outcome::Rejected && t != 0 && 3 % t == 0;
    }
    items.push_back({"circulant.nonexistence",
                     "no (1,1)-, (2,1)-, (5,4)-, (5,5)-, (6,4)-, (6,5)-, (6,6)-colorings of C(1,2,4)", observed, pass});
  }
  {
    const auto list = circulant_enumerate(d124, 3, 2, budget);
    std::string observed;
    for (const auto& e : list) {
      observed += (observed.empty() ? "" : "; ") + e.parameters.to_string();
    }
    const bool pass = list.size() == 2 && list[0].coloring.k() == 1 && realises(list[1].parameters, {6, 3, 6});
    items.push_back({"circulant.period3", "period-3 colorings of C(1,2,4): only monochromatic and (6,3)",
                     observed, pass});
  }
  return items;
}

}  // namespace perfcol
