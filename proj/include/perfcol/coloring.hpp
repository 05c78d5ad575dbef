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

#include <perfcol/graph.hpp>
#include <perfcol/matrix.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfcol {

/// A vertex coloring with k colors in which every color class is non-empty.
/// Colors are 0-based in the API; JSON and the CLI use 1..k.
class Coloring {
 public:
  Coloring() = default;

  Coloring(std::vector<std::size_t> colors, std::size_t k) : colors_(std::move(colors)), k_(k) {
    if (k_ == 0) throw std::invalid_argument("coloring needs k >= 1");
    std::vector<bool> used(k_, false);
    for (std::size_t c : colors_) {
      if (c >= k_) throw std::invalid_argument("color index out of range 1.." + std::to_string(k_));
      used[c] = true;
    }
    for (std::size_t i = 0; i < k_; ++i)
      if (!used[i]) throw std::invalid_argument("color class " + std::to_string(i + 1) + " is empty");
  }

  /// From 1-based color indices.
  static Coloring from_one_based(const std::vector<long long>& colors, std::size_t k) {
    std::vector<std::size_t> zero_based;
    zero_based.reserve(colors.size());
    for (long long c : colors) {
      if (c < 1 || static_cast<std::size_t>(c) > k)
        throw std::invalid_argument("color " + std::to_string(c) + " outside 1.." + std::to_string(k));
      zero_based.push_back(static_cast<std::size_t>(c - 1));
    }
    return Coloring(std::move(zero_based), k);
  }

  std::size_t size() const noexcept { return colors_.size(); }
  std::size_t k() const noexcept { return k_; }
  std::size_t operator[](std::size_t v) const { return colors_.at(v); }
  const std::vector<std::size_t>& colors() const noexcept { return colors_; }

  /// J_i, the vertices of color i.
  std::vector<std::size_t> color_class(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < colors_.size(); ++v)
      if (colors_[v] == i) out.push_back(v);
    return out;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<std::size_t> colors_;
  std::size_t k_ = 0;
};

/// n x k matrix P with P[v, f(v)] = 1 and zeros elsewhere.
inline RationalMatrix partition_matrix(const Coloring& f) {
  RationalMatrix p(f.size(), f.k());
  for (std::size_t v = 0; v < f.size(); ++v) p(v, f[v]) = 1;
  return p;
}

/// The matrix MP: entry (u, j) is the total weight from u into class J_j.
inline RationalMatrix color_profile(const RationalMatrix& m, const Coloring& f) {
  if (!m.is_square() || m.rows() != f.size())
    throw std::invalid_argument("color_profile: coloring length differs from graph order");
  RationalMatrix out(m.rows(), f.k());
  for (std::size_t u = 0; u < m.rows(); ++u)
    for (std::size_t w = 0; w < m.cols(); ++w)
      if (m(u, w) != 0) out(u, f[w]) += m(u, w);
  return out;
}

/// The parameter matrix S with s_{i,j} = sum_{w in J_j} m_{u,w} for any u in
/// J_i, or nullopt when that sum depends on the choice of u.
inline std::optional<RationalMatrix> induced_parameters(const RationalMatrix& m, const Coloring& f) {
  const RationalMatrix profile = color_profile(m, f);
  RationalMatrix s(f.k(), f.k());
  std::vector<bool> seen(f.k(), false);
  for (std::size_t u = 0; u < m.rows(); ++u) {
    const std::size_t i = f[u];
    for (std::size_t j = 0; j < f.k(); ++j) {
      if (!seen[i])
        s(i, j) = profile(u, j);
      else if (s(i, j) != profile(u, j))
        return std::nullopt;
    }
    seen[i] = true;
  }
  return s;
}

inline std::optional<RationalMatrix> induced_parameters(const Graph& g, const Coloring& f) {
  return induced_parameters(g.adjacency(), f);
}

/// (M, P, S) with MP = PS. Validation happens in verify_perfect.
struct PerfectColoringTriple {
  RationalMatrix m;
  RationalMatrix p;
  RationalMatrix s;
};

inline PerfectColoringTriple make_triple(const RationalMatrix& m, const Coloring& f, const RationalMatrix& s) {
  return {m, partition_matrix(f), s};
}

/// A cell (vertex, color) where MP and PS differ.
struct MismatchCell {
  std::size_t vertex = 0;
  std::size_t color = 0;
  Rational mp;
  Rational ps;
};

struct VerifyResult {
  bool perfect = false;
  std::optional<MismatchCell> witness;  // lowest vertex, then lowest color
  explicit operator bool() const noexcept { return perfect; }
};

/// Row v of P as the single column index holding 1; throws if P is not a
/// partition matrix.
inline std::vector<std::size_t> partition_columns(const RationalMatrix& p) {
  std::vector<std::size_t> cols(p.rows());
  for (std::size_t v = 0; v < p.rows(); ++v) {
    std::optional<std::size_t> one;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (p(v, j) == 0) continue;
      if (p(v, j) != 1 || one)
        throw std::invalid_argument("P row " + std::to_string(v) + " is not a unit vector");
      one = j;
    }
    if (!one) throw std::invalid_argument("P row " + std::to_string(v) + " has no unity entry");
    cols[v] = *one;
  }
  return cols;
}

/// Checks MP = PS exactly.
inline VerifyResult verify_perfect(const PerfectColoringTriple& t) {
  const std::size_t n = t.m.rows();
  const std::size_t k = t.s.rows();
  if (!t.m.is_square() || !t.s.is_square() || t.p.rows() != n || t.p.cols() != k)
    throw std::invalid_argument("verify_perfect: shapes of M, P, S are incompatible");
  const auto color_of = partition_columns(t.p);
  const RationalMatrix mp = matrix_mul(t.m, t.p);
  // (PS)[v, j] = s[f(v), j]
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t j = 0; j < k; ++j)
      if (mp(v, j) != t.s(color_of[v], j))
        return {false, MismatchCell{v, j, mp(v, j), t.s(color_of[v], j)}};
  return {true, std::nullopt};
}

/// (p(M), P, p(S)); a perfect coloring stays perfect under any polynomial.
inline PerfectColoringTriple poly_lift(const PerfectColoringTriple& t, const Polynomial& poly) {
  if (!verify_perfect(t)) throw std::invalid_argument("poly_lift: input triple is not a perfect coloring");
  PerfectColoringTriple lifted{eval_poly(poly, t.m), t.p, eval_poly(poly, t.s)};
  if (!verify_perfect(lifted)) throw std::logic_error("poly_lift: lifted triple failed verification");
  return lifted;
}

/// Parameters of a (b,c)-coloring of an r-regular graph:
///   S = [[a, b], [c, d]],  a + b = c + d = r,  lambda_2 = r - (b + c).
struct TwoColorParams {
  Rational b;
  Rational c;
  Rational r;

  Rational a() const { return r - b; }
  Rational d() const { return r - c; }
  Rational lambda2() const { return r - (b + c); }
  Rational sum() const { return b + c; }
  RationalMatrix matrix() const { return {{a(), b}, {c, d()}}; }
  TwoColorParams swapped() const { return {c, b, r}; }

  friend bool operator==(const TwoColorParams&, const TwoColorParams&) = default;
};

inline TwoColorParams two_color_params(const RationalMatrix& s, const Rational& r) {
  if (s.rows() != 2 || s.cols() != 2) throw std::invalid_argument("two_color_params: S must be 2x2");
  if (s.row_sum(0) != r || s.row_sum(1) != r)
    throw std::invalid_argument("two_color_params: row sums of S differ from r = " + to_string(r));
  return {s(0, 1), s(1, 0), r};
}

}  // namespace perfcol
