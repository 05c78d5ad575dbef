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

#include <perfcol/coloring.hpp>
#include <perfcol/matrix.hpp>

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace perfcol {

enum class Outcome { Rejected, Witness, Inconclusive };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Rejected: return "REJECTED";
    case Outcome::Witness: return "WITNESS";
    case Outcome::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

/// A periodic coloring of an infinite graph, stored on one period: a
/// circulant coloring uses periods = {T}, a grid coloring periods = {p, q}.
struct PeriodicWitness {
  std::vector<std::int64_t> periods;
  Coloring coloring;
  RationalMatrix parameters;
};

struct SearchCertificate {
  std::uint64_t nodes = 0;
  std::string scope;  // e.g. "periods 4x1", "patch 6x6"
  std::vector<std::size_t> patch;
  std::vector<std::int64_t> periods;
};

struct SearchOutcome {
  Outcome status = Outcome::Inconclusive;
  std::optional<PeriodicWitness> witness;
  SearchCertificate certificate;
};

/// Periods t for which the two-color bound forces f(x) = f(x + t), and the
/// gcd of those t (0 when none fired). Every period T divides the gcd.
struct PeriodConstraint {
  std::vector<std::int64_t> divisors;
  std::int64_t implied_period_divides = 0;
};

}  // namespace perfcol
