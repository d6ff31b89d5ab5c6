#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace superchar {

// Small-integer number theory used across the library. All arguments are
// desk scale; factorizations run by trial division.

// Reduce v into [0, n). Works for negative v.
std::int64_t mod_reduce(std::int64_t v, std::int64_t n);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Modular inverse; throws NotAUnit when gcd(a, n) != 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t n);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n);

bool is_prime(std::int64_t n);
bool is_odd_prime(std::int64_t n);

// (prime, multiplicity) pairs, ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::int64_t mobius(std::int64_t n);
std::int64_t totient(std::int64_t n);

// Smallest primitive root modulo an odd prime p.
std::int64_t primitive_root(std::int64_t p);

std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t binomial(int n, int k);

}  // namespace superchar
