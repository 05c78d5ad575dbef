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

#include <perfcol/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfcol {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;

  /// rows x cols zero matrix.
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
    return id;
  }

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Bounds-checked access.
  const Rational& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return (*this)(i, j);
  }

  std::span<const Rational> row(std::size_t i) const {
    if (i >= rows_) throw std::out_of_range("row index out of range");
    return {data_.data() + i * cols_, cols_};
  }

  Rational row_sum(std::size_t i) const {
    Rational sum = 0;
    for (const auto& x : row(i)) sum += x;
    return sum;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  RationalMatrix& operator+=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }

  RationalMatrix& operator*=(const Rational& scalar) {
    for (auto& x : data_) x *= scalar;
    return *this;
  }

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += perfcol::to_string((*this)(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact product a * b.
inline RationalMatrix matrix_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix_mul: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  return matrix_mul(a, b);
}

/// a^power by repeated squaring; a^0 is the identity.
inline RationalMatrix matrix_pow(const RationalMatrix& a, unsigned power) {
  if (!a.is_square()) throw std::invalid_argument("matrix_pow: non-square matrix");
  RationalMatrix result = RationalMatrix::identity(a.rows());
  RationalMatrix base = a;
  while (power > 0) {
    if (power & 1U) result = matrix_mul(result, base);
    power >>= 1U;
    if (power > 0) base = matrix_mul(base, base);
  }
  return result;
}

/// L1 distance between rows u and v: sum over w of |a[u,w] - a[v,w]|.
inline Rational l1_row_distance(const RationalMatrix& a, std::size_t u, std::size_t v) {
  const auto ru = a.row(u);
  const auto rv = a.row(v);
  Rational dist = 0;
  for (std::size_t w = 0; w < ru.size(); ++w) dist += abs(ru[w] - rv[w]);
  return dist;
}

/// Polynomial with rational coefficients, constant term first. The zero
/// polynomial is stored as the single coefficient 0; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() : coeffs_{Rational(0)} {}
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    return p + q * Rational(-1);
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& p, const Rational& s) {
    std::vector<Rational> c = p.coeffs_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  /// Human-readable form, e.g. "x^2 - 2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      const Rational mag = abs(c);
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (i == 0 || mag != 1) out += perfcol::to_string(mag);
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void normalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Rational(0));
  }

  std::vector<Rational> coeffs_;
};

/// p(a) = sum_i p_i a^i with a^0 = I, evaluated by Horner's rule.
inline RationalMatrix eval_poly(const Polynomial& p, const RationalMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("eval_poly: non-square matrix");
  const auto& c = p.coefficients();
  const std::size_t n = a.rows();
  RationalMatrix result = RationalMatrix::identity(n) * c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    result = matrix_mul(result, a);
    if (c[i] != 0)
      for (std::size_t d = 0; d < n; ++d) result(d, d) += c[i];
  }
  return result;
}

}  // namespace perfcol
