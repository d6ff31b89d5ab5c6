#include "superchar/arith.hpp"

#include <algorithm>
#include <numeric>

#include "superchar/checked.hpp"
#include "superchar/errors.hpp"

namespace superchar {

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t n) {
  a = mod_reduce(a, n);
  std::int64_t r0 = n, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  if (r0 != 1) throw NotAUnit("not a unit mod " + std::to_string(n));
  return mod_reduce(s0, n);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n) {
  base = mod_reduce(base, n);
  std::int64_t r = mod_reduce(1, n);
  while (exp > 0) {
    if (exp & 1) r = checked_mul(r, base) % n;
    base = checked_mul(base, base) % n;
    exp >>= 1;
  }
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

bool is_odd_prime(std::int64_t n) {
  return n > 2 && is_prime(n);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t mobius(std::int64_t n) {
  std::int64_t mu = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::int64_t totient(std::int64_t n) {
  std::int64_t t = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    t = t / p * (p - 1);
  }
  return t;
}

std::int64_t primitive_root(std::int64_t p) {
  if (!is_odd_prime(p)) throw BadParams("primitive root needs an odd prime");
  auto factors = factorize(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : factors) {
      (void)e;
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error("no primitive root found");  // unreachable for odd prime p
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

}  // namespace superchar
