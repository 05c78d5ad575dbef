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

// JSON encodings.
//
//   rational:  integer, or string "p/q" / "p"
//   matrix:    {"rows": R, "cols": C, "data": [[rational, ...], ...]}
//   graph:     {"n": N, "simple": bool, "edges": [[u, v, weight?], ...], "labels": [...]?}
//              or {"adjacency": matrix, "simple": bool?}
//   coloring:  {"k": K, "colors": [1-based color, ...]}
//
// Vertices are 0-based everywhere; colors are 1-based in JSON.

#include <perfcol/circulant.hpp>
#include <perfcol/coloring.hpp>
#include <perfcol/graph.hpp>
#include <perfcol/grid.hpp>
#include <perfcol/matrix.hpp>
#include <perfcol/metric_filter.hpp>
#include <perfcol/periodic.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace perfcol {

using json = nlohmann::json;

struct JsonFormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline json rational_to_json(const Rational& q) {
  if (auto x = to_int64(q)) return *x;
  return to_string(q);
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return parse_rational(j.dump());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw JsonFormatError(e.what());
    }
  }
  throw JsonFormatError("expected an integer or a \"p/q\" string, got " + j.dump());
}

namespace detail {
inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonFormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}
inline std::size_t count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw JsonFormatError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}
}  // namespace detail

inline json matrix_to_json(const RationalMatrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(rational_to_json(x));
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

inline RationalMatrix matrix_from_json(const json& j) {
  const std::size_t rows = detail::count_field(j, "rows");
  const std::size_t cols = detail::count_field(j, "cols");
  const json& data = detail::field(j, "data");
  if (!data.is_array() || data.size() != rows) throw JsonFormatError("matrix \"data\" must have \"rows\" rows");
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!data[i].is_array() || data[i].size() != cols)
      throw JsonFormatError("matrix row " + std::to_string(i) + " must have \"cols\" entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(data[i][c]);
  }
  return m;
}

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  const auto& a = g.adjacency();
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = g.simple() ? u + 1 : 0; v < g.order(); ++v)
      if (a(u, v) != 0) {
        if (g.simple())
          edges.push_back({u, v});
        else
          edges.push_back({u, v, rational_to_json(a(u, v))});
      }
  json out{{"n", g.order()}, {"simple", g.simple()}, {"edges", std::move(edges)}};
  if (g.labels()) out["labels"] = *g.labels();
  return out;
}

inline Graph graph_from_json(const json& j) {
  std::optional<std::vector<std::string>> labels;
  if (j.is_object() && j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  const bool simple = j.is_object() && j.contains("simple") && j.at("simple").get<bool>();
  try {
    if (j.is_object() && j.contains("adjacency"))
      return Graph(matrix_from_json(j.at("adjacency")), simple, std::move(labels));
    const std::size_t n = detail::count_field(j, "n");
    const json& edges = detail::field(j, "edges");
    if (!edges.is_array()) throw JsonFormatError("\"edges\" must be an array");
    RationalMatrix a(n, n);
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) throw JsonFormatError("edge must be [u, v] or [u, v, weight]");
      const auto u = e[0].get<long long>();
      const auto v = e[1].get<long long>();
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
        throw JsonFormatError("edge endpoint out of range: " + e.dump());
      const Rational w = e.size() == 3 ? rational_from_json(e[2]) : Rational(1);
      if (simple) {
        if (w != 1) throw JsonFormatError("simple graph edges must have weight 1");
        a(u, v) = 1;
        a(v, u) = 1;
      } else {
        a(u, v) += w;
      }
    }
    return Graph(std::move(a), simple, std::move(labels));
  } catch (const json::exception& e) {
    throw JsonFormatError(e.what());
  }
}

inline json coloring_to_json(const Coloring& f) {
  json colors = json::array();
  for (auto c : f.colors()) colors.push_back(c + 1);
  return {{"k", f.k()}, {"colors", std::move(colors)}};
}

inline Coloring coloring_from_json(const json& j) {
  const std::size_t k = detail::count_field(j, "k");
  const json& colors = detail::field(j, "colors");
  if (!colors.is_array()) throw JsonFormatError("\"colors\" must be an array");
  std::vector<long long> raw;
  for (const auto& c : colors) {
    if (!c.is_number_integer()) throw JsonFormatError("colors must be integers");
    raw.push_back(c.get<long long>());
  }
  try {
    return Coloring::from_one_based(raw, k);
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(e.what());
  }
}

inline json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(rational_to_json(c));
  return out;
}

inline json verdict_to_json(const FilterVerdict& v) {
  return {{"status", to_string(v.status)},
          {"relation", v.checked.relation},
          {"lhs", to_string(v.checked.lhs)},
          {"rhs", to_string(v.checked.rhs)}};
}

/// One row of a verdict table; colors 1-based.
inline json verdict_row_to_json(std::size_t u, std::size_t v, std::size_t i, std::size_t j, const FilterVerdict& verdict) {
  json row{{"u", u}, {"v", v}, {"i", i + 1}, {"j", j + 1}};
  row.update(verdict_to_json(verdict));
  return row;
}

inline json verdict_table_to_json(const std::vector<PairVerdict>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(verdict_row_to_json(r.u, r.v, r.i, r.j, r.verdict));
  return out;
}

inline json period_constraint_to_json(const PeriodConstraint& c) {
  return {{"divisors", c.divisors}, {"implied_period_divides", c.implied_period_divides}};
}

inline json search_outcome_to_json(const SearchOutcome& o) {
  json cert{{"nodes", o.certificate.nodes}, {"scope", o.certificate.scope}};
  if (!o.certificate.patch.empty()) cert["patch"] = o.certificate.patch;
  if (!o.certificate.periods.empty()) cert["periods"] = o.certificate.periods;
  json out{{"status", to_string(o.status)}, {"certificate", std::move(cert)}};
  if (o.witness) {
    out["witness"] = {{"periods", o.witness->periods},
                      {"coloring", coloring_to_json(o.witness->coloring)},
                      {"parameters", matrix_to_json(o.witness->parameters)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

}  // namespace perfcol
