#pragma once

#include <cstdint>

#include "superchar/errors.hpp"

namespace superchar {

// Overflow-checked signed 64-bit arithmetic. The exact layers (determinants,
// cyclotomic coefficients, orthogonality sums) route every add/mul through
// these so a wrong result can never come back silently.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in add");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit overflow in sub");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in mul");
  return r;
}

inline std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace superchar
