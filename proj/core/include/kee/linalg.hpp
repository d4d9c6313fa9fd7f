#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kee/rational.hpp"

namespace kee {

// Dense row-major matrix over Rat. Sizes here never exceed a few dozen.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Inertia&) const = default;
};

// Solves A x = b for square A by fraction-free (Bareiss) elimination.
// Returns nullopt when A is singular.
std::optional<std::vector<Rat>> solve(const Matrix& a, std::span<const Rat> b);

// Signature of a symmetric matrix via exact congruence diagonalization.
Inertia inertia(const Matrix& symmetric);

// Negative definiteness by symmetric elimination: every pivot must be < 0.
// The empty matrix counts as negative definite.
bool is_negative_definite(const Matrix& symmetric);

}  // namespace kee
