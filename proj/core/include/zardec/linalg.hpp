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

#ifndef ZARDEC_LINALG_HPP
#define ZARDEC_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zardec/scalar.hpp"

namespace zardec {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Scalar> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  bool is_symmetric() const;
  Matrix transpose() const;
  /// Principal submatrix on the given index set, in the given order.
  Matrix principal(std::span<const std::size_t> indices) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Vector operator*(const Matrix& m, std::span<const Scalar> x);
Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y);

/// Unique solution of m x = rhs, or nullopt if m is singular.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> rhs);

std::size_t rank(const Matrix& m);

/// Sylvester inertia of a symmetric matrix: counts of positive, negative and
/// zero eigenvalues, computed by congruence pivoting.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};
Inertia inertia(const Matrix& symmetric);

/// True iff the symmetric matrix is negative definite. The empty matrix
/// counts as negative definite.
bool is_negative_definite(const Matrix& symmetric);

// Exact linear programming: maximize c.y subject to A y = b, y >= 0.
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Scalar value;
  Vector solution;
};

/// Two-phase dense simplex with Bland's rule; exact, so it cannot cycle or
/// misjudge degeneracy.
LpResult maximize(const Matrix& a, std::span<const Scalar> b,
                  std::span<const Scalar> c);

}  // namespace zardec

#endif  // ZARDEC_LINALG_HPP
