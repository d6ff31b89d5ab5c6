#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "superchar/errors.hpp"

namespace superchar {

// Shared residue modulus n >= 2.
struct Modulus {
  std::int64_t n;
  explicit Modulus(std::int64_t n_) : n(n_) {
    if (n < 2) throw BadParams("modulus must be >= 2");
  }
};

// Row vector over Z_n; entries are kept reduced to [0, n).
struct ModVector {
  std::int64_t mod = 0;
  std::vector<std::int64_t> entries;

  ModVector() = default;
  ModVector(std::int64_t mod, std::vector<std::int64_t> raw);

  int dim() const { return static_cast<int>(entries.size()); }
  bool is_zero() const;

  friend auto operator<=>(const ModVector&, const ModVector&) = default;
};

// Square d x d matrix over Z_n, row-major, entries reduced to [0, n).
// operator<=> gives the canonical (row-major lexicographic) element order.
struct ModMatrix {
  std::int64_t mod = 0;
  int dim = 0;
  std::vector<std::int64_t> entries;

  ModMatrix() = default;
  ModMatrix(std::int64_t mod, int dim, std::vector<std::int64_t> raw);
  static ModMatrix identity(std::int64_t mod, int dim);

  std::int64_t at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }
  std::int64_t& at(int i, int j) { return entries[static_cast<std::size_t>(i) * dim + j]; }

  friend auto operator<=>(const ModMatrix&, const ModMatrix&) = default;
};

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b);
ModMatrix mat_transpose(const ModMatrix& a);

// Determinant reduced to [0, n); the elimination itself runs over plain
// integers (Bareiss), so zero divisors of Z_n never enter a division.
std::int64_t mat_det(const ModMatrix& a);

bool is_invertible(const ModMatrix& a);

// Adjugate times the modular inverse of the determinant; valid for any n.
// Throws NotAUnit when gcd(det, n) != 1.
ModMatrix mat_inverse(const ModMatrix& a);
ModMatrix mat_inv_transpose(const ModMatrix& a);

ModVector vec_mat_mul(const ModVector& y, const ModMatrix& a);
std::int64_t dot(const ModVector& x, const ModVector& y);

}  // namespace superchar
