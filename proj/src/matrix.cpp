/*
 * Copyright 2026 The Preserver Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "preserver/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace preserver {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(std::size_t n, const Field& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(const Field& field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(r, c, field);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (auto v : row) m(i, j++) = field.from_int(v);
    ++i;
  }
  return m;
}

Matrix Matrix::diagonal(std::span<const FieldElement> diag, const Field& field) {
  Matrix m(diag.size(), diag.size(), field);
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_alternating() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const FieldElement& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix c(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<FieldElement> Matrix::apply(std::span<const FieldElement> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<FieldElement> out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// Integer matrix with each row scaled by the lcm of its denominators.
std::vector<mpz_class> clear_denominators(const Matrix& m) {
  std::vector<mpz_class> out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& q = m(i, j).rational();
      out[i * m.cols() + j] = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

// Bareiss elimination on an integer matrix; returns rank. Rows are swapped in
// place and `sign` tracks the permutation parity.
std::size_t bareiss(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols, int& sign) {
  sign = 1;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
      sign = -sign;
    }
    const mpz_class pivot = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = pivot * a[i * cols + j] - a[i * cols + c] * a[r * cols + j];
        mpz_divexact(a[i * cols + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * cols + c] = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

// Row echelon form over a field; returns pivot columns.
std::vector<std::size_t> echelon(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const FieldElement inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const FieldElement f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().is_rational()) {
    auto a = clear_denominators(m);
    int sign = 1;
    return bareiss(a, m.rows(), m.cols(), sign);
  }
  Matrix a = m;
  return echelon(a).size();
}

FieldElement determinant(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m.field().one();
  if (m.field().is_rational()) {
    // det(m) = det(scaled) / prod(row scales)
    mpz_class scale = 1;
    std::vector<mpz_class> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class l = 1;
      for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
      for (std::size_t j = 0; j < n; ++j) {
        const auto& q = m(i, j).rational();
        a[i * n + j] = q.get_num() * (l / q.get_den());
      }
      scale *= l;
    }
    int sign = 1;
    if (bareiss(a, n, n, sign) < n) return m.field().zero();
    return FieldElement(mpq_class(sign * a[n * n - 1], scale));
  }
  Matrix a = m;
  FieldElement det = m.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return m.field().zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const FieldElement inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const FieldElement f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto pivots = echelon(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  Matrix inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Matrix kernel_basis(const Matrix& m) {
  Matrix a = m;
  auto pivots = echelon(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  const std::size_t nullity = m.cols() - pivots.size();
  Matrix k(m.cols(), nullity, m.field());
  std::size_t col = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(free, col) = m.field().one();
    for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], col) = -a(r, free);
    ++col;
  }
  return k;
}

std::optional<std::vector<FieldElement>> solve(const Matrix& m, std::span<const FieldElement> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<FieldElement> x(m.cols(), m.field().zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& field, std::int64_t height, Rng& rng) {
  Matrix m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field_sample_int(field, -height, height, rng);
  return m;
}

Matrix random_invertible(std::size_t n, const Field& field, std::int64_t height, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix m = random_matrix(n, n, field, height, rng);
    if (rank(m) == n) return m;
  }
  throw std::runtime_error("random_invertible: resampling cap exhausted");
}

Matrix random_unimodular(std::size_t n, const Field& field, Rng& rng, std::size_t word_length) {
  if (word_length == 0) word_length = 3 * n;
  Matrix m = Matrix::identity(n, field);
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (std::size_t w = 0; w < word_length; ++w) {
    const std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    while (j == i) j = idx(rng);
    const int c = coef(rng);
    if (c == 0) continue;
    // row_i += c * row_j keeps the determinant
    const FieldElement cf = field.from_int(c);
    for (std::size_t k = 0; k < n; ++k) m(i, k) += cf * m(j, k);
  }
  return m;
}

}  // namespace preserver
