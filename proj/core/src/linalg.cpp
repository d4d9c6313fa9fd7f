#include "kee/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace kee {

std::optional<std::vector<Rat>> solve(const Matrix& a, std::span<const Rat> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  if (n == 0) return std::vector<Rat>{};

  // Augmented matrix [A | b].
  Matrix m(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
    m(r, n) = b[r];
  }

  Rat prev_pivot = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (std::size_t c = 0; c <= n; ++c) std::swap(m(k, c), m(p, c));
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c <= n; ++c) {
        m(r, c) = (m(k, k) * m(r, c) - m(r, k) * m(k, c)) / prev_pivot;
      }
      m(r, k) = 0;
    }
    prev_pivot = m(k, k);
  }

  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat acc = m(i, n);
    for (std::size_t c = i + 1; c < n; ++c) acc -= m(i, c) * x[c];
    x[i] = acc / m(i, i);
  }
  return x;
}

Inertia inertia(const Matrix& symmetric) {
  const std::size_t n = symmetric.rows();
  if (symmetric.cols() != n) throw std::invalid_argument("inertia: matrix not square");
  Matrix m = symmetric;
  Inertia result;

  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, p) == 0) ++p;
    if (p < n) {
      if (p != k) swap_index(p, k);
    } else {
      // All remaining diagonal entries vanish; fold in a row with an
      // off-diagonal entry so the pivot becomes 2 m(k,j) != 0.
      std::size_t j = k + 1;
      while (j < n && m(k, j) == 0) ++j;
      if (j == n) {
        ++result.zero;
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) m(k, c) += m(j, c);
      for (std::size_t r = 0; r < n; ++r) m(r, k) += m(r, j);
    }
    const Rat pivot = m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      Rat f = m(r, k) / pivot;
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
    }
    if (pivot > 0) {
      ++result.positive;
    } else {
      ++result.negative;
    }
  }
  return result;
}

bool is_negative_definite(const Matrix& symmetric) {
  const std::size_t n = symmetric.rows();
  if (symmetric.cols() != n) throw std::invalid_argument("is_negative_definite: matrix not square");
  Matrix m = symmetric;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) >= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      Rat f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return true;
}

}  // namespace kee
