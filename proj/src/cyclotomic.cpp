#include "superchar/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "superchar/arith.hpp"
#include "superchar/checked.hpp"
#include "superchar/errors.hpp"

namespace superchar {

namespace {

// Exact polynomial division, low-degree-first coefficients, monic divisor.
// The remainder must vanish; cyclotomic factors always divide exactly.
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const auto dn = den.size() - 1;
  if (num.size() < den.size()) throw Error("polynomial division underflow");
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t q = num[i];
    if (q == 0) continue;
    quot[i - dn] = q;
    for (std::size_t k = 0; k <= dn; ++k)
      num[i - dn + k] = checked_sub(num[i - dn + k], checked_mul(q, den[k]));
  }
  for (auto c : num)
    if (c != 0) throw Error("inexact polynomial division");
  return quot;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw BadParams("cyclotomic polynomial needs n >= 1");
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  for (auto m : divisors(n)) {
    if (cache.count(m)) continue;
    std::vector<std::int64_t> poly(m + 1, 0);
    poly[0] = -1;
    poly[m] = 1;  // x^m - 1
    for (auto d : divisors(m))
      if (d < m) poly = poly_div_exact(std::move(poly), cache.at(d));
    cache.emplace(m, std::move(poly));
  }
  return cache.at(n);
}

namespace {

// Reduce a length-n exponent-folded vector by Phi_n in place.
void reduce_mod_phi(std::vector<std::int64_t>& c, std::int64_t n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > deg;) {
    const std::int64_t q = c[i];
    if (q == 0) continue;
    c[i] = 0;
    for (std::size_t k = 0; k < deg; ++k)
      c[i - deg + k] = checked_sub(c[i - deg + k], checked_mul(q, phi[k]));
  }
}

CycValue normalized(std::int64_t n, std::vector<std::int64_t> c) {
  reduce_mod_phi(c, n);
  return CycValue{n, std::move(c)};
}

void require_same_ring(const CycValue& a, const CycValue& b) {
  if (a.n != b.n) throw MismatchError("cyclotomic values from different rings");
}

}  // namespace

CycValue CycValue::zero(std::int64_t n) {
  if (n < 1) throw BadParams("cyclotomic order must be >= 1");
  return CycValue{n, std::vector<std::int64_t>(n, 0)};
}

CycValue CycValue::one(std::int64_t n) {
  return from_integer(n, 1);
}

CycValue CycValue::from_integer(std::int64_t n, std::int64_t v) {
  auto z = zero(n);
  z.coeffs[0] = v;
  return normalized(n, std::move(z.coeffs));  // n = 1 folds onto the constant
}

CycValue CycValue::root_power(std::int64_t n, std::int64_t k) {
  auto z = zero(n);
  z.coeffs[static_cast<std::size_t>(mod_reduce(k, n))] = 1;
  return normalized(n, std::move(z.coeffs));
}

CycValue CycValue::from_coeffs(std::int64_t n, const std::vector<std::int64_t>& raw) {
  auto z = zero(n);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto k = static_cast<std::size_t>(i % static_cast<std::size_t>(n));
    z.coeffs[k] = checked_add(z.coeffs[k], raw[i]);
  }
  return normalized(n, std::move(z.coeffs));
}

bool CycValue::is_zero() const {
  for (auto c : coeffs)
    if (c != 0) return false;
  return true;
}

bool CycValue::is_integer() const {
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) return false;
  return true;
}

CycValue add(const CycValue& a, const CycValue& b) {
  require_same_ring(a, b);
  CycValue out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = checked_add(out.coeffs[i], b.coeffs[i]);
  return out;  // sum of normal forms stays below deg Phi_n
}

CycValue sub(const CycValue& a, const CycValue& b) {
  return add(a, negate(b));
}

CycValue negate(const CycValue& a) {
  CycValue out = a;
  for (auto& c : out.coeffs) c = checked_sub(0, c);
  return out;
}

CycValue scale(const CycValue& a, std::int64_t s) {
  CycValue out = a;
  for (auto& c : out.coeffs) c = checked_mul(c, s);
  return out;
}

CycValue mul(const CycValue& a, const CycValue& b) {
  require_same_ring(a, b);
  const auto n = static_cast<std::size_t>(a.n);
  std::vector<std::int64_t> folded(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs[j] == 0) continue;
      const std::size_t k = (i + j) % n;  // zeta^n = 1
      folded[k] = checked_add(folded[k], checked_mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return normalized(a.n, std::move(folded));
}

CycValue conj(const CycValue& a) {
  const auto n = static_cast<std::size_t>(a.n);
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    if (a.coeffs[k] != 0) out[(n - k) % n] = checked_add(out[(n - k) % n], a.coeffs[k]);
  return normalized(a.n, std::move(out));
}

std::complex<double> to_complex(const CycValue& a) {
  return eval_raw(a.n, a.coeffs);
}

std::complex<double> eval_raw(std::int64_t n, const std::vector<std::int64_t>& raw) {
  std::complex<double> s{0.0, 0.0};
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k % static_cast<std::size_t>(n)) /
                     static_cast<double>(n);
    s += static_cast<double>(raw[k]) * std::complex<double>(std::cos(t), std::sin(t));
  }
  return s;
}

}  // namespace superchar
