#include "superchar/residue.hpp"

#include <utility>

#include "superchar/arith.hpp"
#include "superchar/checked.hpp"

namespace superchar {

ModVector::ModVector(std::int64_t mod_, std::vector<std::int64_t> raw) : mod(mod_), entries(std::move(raw)) {
  if (mod < 2) throw BadParams("modulus must be >= 2");
  for (auto& v : entries) v = mod_reduce(v, mod);
}

bool ModVector::is_zero() const {
  for (auto v : entries)
    if (v != 0) return false;
  return true;
}

ModMatrix::ModMatrix(std::int64_t mod_, int dim_, std::vector<std::int64_t> raw)
    : mod(mod_), dim(dim_), entries(std::move(raw)) {
  if (mod < 2) throw BadParams("modulus must be >= 2");
  if (dim < 1) throw BadParams("matrix dimension must be >= 1");
  if (entries.size() != static_cast<std::size_t>(dim) * dim)
    throw MismatchError("matrix entry count does not match dimension");
  for (auto& v : entries) v = mod_reduce(v, mod);
}

ModMatrix ModMatrix::identity(std::int64_t mod, int dim) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(dim) * dim, 0);
  for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i) * dim + i] = 1;
  return ModMatrix(mod, dim, std::move(e));
}

static void require_same(const ModMatrix& a, const ModMatrix& b) {
  if (a.mod != b.mod) throw MismatchError("matrix modulus mismatch");
  if (a.dim != b.dim) throw MismatchError("matrix dimension mismatch");
}

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b) {
  require_same(a, b);
  const int d = a.dim;
  std::vector<std::int64_t> out(static_cast<std::size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const std::int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < d; ++j)
        out[static_cast<std::size_t>(i) * d + j] =
            (out[static_cast<std::size_t>(i) * d + j] + aik * b.at(k, j)) % a.mod;
    }
  return ModMatrix(a.mod, d, std::move(out));
}

ModMatrix mat_transpose(const ModMatrix& a) {
  std::vector<std::int64_t> out(a.entries.size());
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) out[static_cast<std::size_t>(j) * a.dim + i] = a.at(i, j);
  return ModMatrix(a.mod, a.dim, std::move(out));
}

// Exact integer determinant by Bareiss fraction-free elimination.
static std::int64_t det_exact(std::vector<std::int64_t> w, int d) {
  if (d == 0) return 1;
  auto at = [&](int i, int j) -> std::int64_t& { return w[static_cast<std::size_t>(i) * d + j]; };
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k + 1 < d; ++k) {
    if (at(k, k) == 0) {
      int r = k + 1;
      while (r < d && at(r, k) == 0) ++r;
      if (r == d) return 0;
      for (int j = k; j < d; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j)
        at(i, j) = checked_sub(checked_mul(at(i, j), at(k, k)), checked_mul(at(i, k), at(k, j))) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(d - 1, d - 1);
}

std::int64_t mat_det(const ModMatrix& a) {
  return mod_reduce(det_exact(a.entries, a.dim) % a.mod, a.mod);
}

bool is_invertible(const ModMatrix& a) {
  return gcd64(mat_det(a), a.mod) == 1;
}

ModMatrix mat_inverse(const ModMatrix& a) {
  const std::int64_t det = mat_det(a);
  if (gcd64(det, a.mod) != 1) throw NotAUnit("matrix determinant is not a unit mod " + std::to_string(a.mod));
  const std::int64_t dinv = inv_mod(det, a.mod);
  const int d = a.dim;
  std::vector<std::int64_t> out(static_cast<std::size_t>(d) * d, 0);
  std::vector<std::int64_t> minor(static_cast<std::size_t>(d - 1) * (d - 1));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int idx = 0;
      for (int r = 0; r < d; ++r) {
        if (r == i) continue;
        for (int c = 0; c < d; ++c) {
          if (c == j) continue;
          minor[idx++] = a.at(r, c);
        }
      }
      std::int64_t cof = det_exact(minor, d - 1);
      if ((i + j) & 1) cof = -cof;
      // adjugate transposes the cofactor grid
      out[static_cast<std::size_t>(j) * d + i] = checked_mul(mod_reduce(cof, a.mod), dinv) % a.mod;
    }
  return ModMatrix(a.mod, d, std::move(out));
}

ModMatrix mat_inv_transpose(const ModMatrix& a) {
  return mat_transpose(mat_inverse(a));
}

ModVector vec_mat_mul(const ModVector& y, const ModMatrix& a) {
  if (y.mod != a.mod) throw MismatchError("vector/matrix modulus mismatch");
  if (y.dim() != a.dim) throw MismatchError("vector/matrix dimension mismatch");
  const int d = a.dim;
  std::vector<std::int64_t> out(d, 0);
  for (int j = 0; j < d; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < d; ++i) s = (s + y.entries[i] * a.at(i, j)) % a.mod;
    out[j] = s;
  }
  return ModVector(a.mod, std::move(out));
}

std::int64_t dot(const ModVector& x, const ModVector& y) {
  if (x.mod != y.mod) throw MismatchError("vector modulus mismatch");
  if (x.dim() != y.dim()) throw MismatchError("vector length mismatch");
  std::int64_t s = 0;
  for (int i = 0; i < x.dim(); ++i) s = (s + x.entries[i] * y.entries[i]) % x.mod;
  return s;
}

}  // namespace superchar
