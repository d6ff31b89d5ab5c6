#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace superchar {

// Exact arithmetic in Z[zeta_n], the ring of cyclotomic integers. A value is
// an integer coefficient vector of length n against powers of zeta_n, held
// in normal form: coefficients reduced modulo the n-th cyclotomic polynomial
// Phi_n, so positions >= phi(n) are zero and equality is componentwise.
// Coefficient arithmetic is overflow-checked; nothing here is floating point
// except the to_complex bridge.

// Coefficients of Phi_n, low degree first, monic of degree phi(n).
// Computed once per n by exact recursive division of x^n - 1 and cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

struct CycValue {
  std::int64_t n = 0;                 // root order
  std::vector<std::int64_t> coeffs;   // length n, normal form

  static CycValue zero(std::int64_t n);
  static CycValue one(std::int64_t n);
  static CycValue from_integer(std::int64_t n, std::int64_t v);

  // zeta_n^(k mod n) in normal form.
  static CycValue root_power(std::int64_t n, std::int64_t k);

  // Build from an arbitrary coefficient vector (any length); exponents fold
  // mod n, then the result is reduced to normal form.
  static CycValue from_coeffs(std::int64_t n, const std::vector<std::int64_t>& raw);

  bool is_zero() const;
  bool is_integer() const;           // lies in Z, i.e. only coeffs[0] may be nonzero

  friend bool operator==(const CycValue&, const CycValue&) = default;
};

CycValue add(const CycValue& a, const CycValue& b);
CycValue sub(const CycValue& a, const CycValue& b);
CycValue mul(const CycValue& a, const CycValue& b);
CycValue negate(const CycValue& a);
CycValue scale(const CycValue& a, std::int64_t s);

// Galois conjugation zeta^k -> zeta^(n-k); an index permutation followed by
// renormalization, no complex arithmetic involved.
CycValue conj(const CycValue& a);

std::complex<double> to_complex(const CycValue& a);

// Numeric value of a raw (pre-normal-form) coefficient vector; used to check
// that normalization preserves the complex value.
std::complex<double> eval_raw(std::int64_t n, const std::vector<std::int64_t>& raw);

}  // namespace superchar
