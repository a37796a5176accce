// Copyright 2026 The zardec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zardec/linalg.hpp"

#include <utility>

namespace zardec {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i))) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::principal(std::span<const std::size_t> indices) const {
  Matrix sub(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      sub(i, j) = (*this)(indices[i], indices[j]);
    }
  }
  return sub;
}

Vector operator*(const Matrix& m, std::span<const Scalar> x) {
  if (x.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix-vector size mismatch");
  }
  Vector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) y[i] = dot(m.row(i), x);
  return y;
}

Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "dot product size mismatch");
  }
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
  }
  return s;
}

namespace {

// Row-reduces the augmented system in place; returns pivot columns.
std::vector<std::size_t> row_echelon(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> rhs) {
  if (m.rows() != m.cols() || rhs.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "solve needs a square system");
  }
  const std::size_t n = m.rows();
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  if (row_echelon(aug, n).size() != n) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return row_echelon(copy, m.cols()).size();
}

Inertia inertia(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) {
    throw Error(ErrorCode::kDimensionMismatch, "inertia needs a symmetric matrix");
  }
  Matrix a = symmetric;
  const std::size_t n = a.rows();
  Inertia result;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      // Zero diagonal: a congruence e_i += e_j makes a(i,i) = 2 a(i,j) != 0.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        result.zero += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      p = pi;
    }
    swap_index(k, p);
    const Scalar pivot = a(k, k);
    if (pivot.sign() > 0) {
      ++result.positive;
    } else {
      ++result.negative;
    }
    const Scalar inv = pivot.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Scalar f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (std::size_t j = k + 1; j < n; ++j) a(k, j) = 0;
  }
  return result;
}

bool is_negative_definite(const Matrix& symmetric) {
  const Inertia in = inertia(symmetric);
  return in.negative == symmetric.rows();
}

namespace {

class Tableau {
 public:
  // Columns: [0, n) structural, [n, n + m) artificial, last = rhs.
  Tableau(const Matrix& a, std::span<const Scalar> b)
      : m_(a.rows()), n_(a.cols()), t_(a.rows() + 1, a.cols() + a.rows() + 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = b[i].sign() < 0;
      for (std::size_t j = 0; j < n_; ++j) t_(i, j) = flip ? -a(i, j) : a(i, j);
      t_(i, n_ + i) = 1;
      t_(i, rhs()) = flip ? -b[i] : b[i];
      basis_.push_back(n_ + i);
    }
  }

  std::size_t rhs() const { return n_ + m_; }

  void set_costs(std::span<const Scalar> cost) {
    for (std::size_t j = 0; j <= rhs(); ++j) {
      Scalar r = j < rhs() ? cost[j] : Scalar();
      for (std::size_t i = 0; i < m_; ++i) {
        const Scalar& cb = cost[basis_[i]];
        if (!cb.is_zero() && !t_(i, j).is_zero()) r -= cb * t_(i, j);
      }
      t_(m_, j) = r;
    }
  }

  // Minimizes the current cost row over columns [0, allowed). Returns false
  // if unbounded.
  bool run(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (t_(m_, j).sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;
      std::size_t leave = m_;
      Scalar best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_(i, enter).sign() <= 0) continue;
        const Scalar ratio = t_(i, rhs()) / t_(i, enter);
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Scalar inv = t_(r, c).inverse();
    for (std::size_t j = 0; j <= rhs(); ++j) {
      if (!t_(r, j).is_zero()) t_(r, j) *= inv;
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || t_(i, c).is_zero()) continue;
      const Scalar f = t_(i, c);
      for (std::size_t j = 0; j <= rhs(); ++j) {
        if (!t_(r, j).is_zero()) t_(i, j) -= f * t_(r, j);
      }
    }
    basis_[r] = c;
  }

  // Pivots artificial variables out of the basis where possible.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!t_(i, j).is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Scalar objective_rhs() const { return t_(m_, rhs()); }

  Vector solution() const {
    Vector y(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) y[basis_[i]] = t_(i, rhs());
    }
    return y;
  }

  std::size_t structural() const { return n_; }
  std::size_t constraints() const { return m_; }

 private:
  std::size_t m_;
  std::size_t n_;
  Matrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult maximize(const Matrix& a, std::span<const Scalar> b,
                  std::span<const Scalar> c) {
  if (b.size() != a.rows() || c.size() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "linear program shape mismatch");
  }
  Tableau tab(a, b);
  const std::size_t n = tab.structural();
  const std::size_t total = n + tab.constraints();

  Vector phase1(total);
  for (std::size_t j = n; j < total; ++j) phase1[j] = 1;
  tab.set_costs(phase1);
  tab.run(total);
  // The objective row's rhs holds minus the artificial sum.
  if (!tab.objective_rhs().is_zero()) return {LpStatus::kInfeasible, {}, {}};
  tab.expel_artificials();

  Vector phase2(total);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = -c[j];
  tab.set_costs(phase2);
  if (!tab.run(n)) return {LpStatus::kUnbounded, {}, {}};
  LpResult result;
  result.status = LpStatus::kOptimal;
  result.solution = tab.solution();
  result.value = dot(c, result.solution);
  return result;
}

}  // namespace zardec
