#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superchar/group.hpp"

namespace superchar {

// Built-in matrix-group families. Each is constructed extensionally from its
// parametric description, with the symmetry witness it guarantees attached.
enum class Family {
  trivial,             // {I} on Z_n^d: the plain discrete Fourier transform
  sign,                // {I, -I} on Z_n^d
  diagonal,            // all invertible diagonal matrices on Z_n^d
  kloosterman,         // {diag(a, 1/a)} on Z_p^2, p odd prime
  toeplitz,            // unit upper-triangular banded Toeplitz on Z_n^d, d >= 2
  units,               // Z_n^* acting on Z_n
  quadratic_residues,  // squares of units acting on Z_p, p odd prime
  jsym3,               // [[a,b,c],[0,d,b],[0,0,a]] with a,d units on Z_p^3
  heilbronn,           // p-th powers of units acting on Z_{p^2} (experimental)
};

struct FamilySpec {
  Family name = Family::trivial;
  std::int64_t param = 0;  // the user-facing n or p
  int dim = 0;

  // Modulus of the group the family actually lives over (p^2 for heilbronn).
  std::int64_t modulus() const;
};

std::optional<Family> family_from_string(std::string_view s);
std::string_view family_name(Family f);
std::vector<Family> all_families();
int default_dim(Family f);
bool family_dim_is_fixed(Family f);

// Validate parameters and fill in the default dimension; throws BadParams.
FamilySpec make_family_spec(Family f, std::int64_t param, std::optional<int> dim = {});

// Explicit element set plus declared symmetry witness; throws BadParams.
GroupSet build_family(const FamilySpec& spec);

// Classical closed form mu(m) phi(n) / phi(m) with m = n / gcd(n, y).
std::int64_t ramanujan_oracle(std::int64_t n, std::int64_t y);

// Direct sum over units: sum_t e((a t + b t^-1) / p).
std::complex<double> kloosterman_oracle(std::int64_t p, std::int64_t a, std::int64_t b);

// The published 4x4 closed-form tables, as integers evaluated at p. The
// diagonal d=2 table carries a known misprint at position (4,4): the printed
// value is -(p-1) but the correct entry is 1 (forced by the brute-force sum,
// row orthogonality, and the published unitary matrix alike). With
// correct_errata the corrected value is emitted and flagged.
struct ClosedFormTable {
  std::vector<std::vector<std::int64_t>> entries;
  bool erratum_corrected = false;
};
ClosedFormTable closed_form_table(const FamilySpec& spec, bool correct_errata = true);

// Closed-form orbit-size histograms for the diagonal and toeplitz families
// over a prime modulus.
std::map<std::int64_t, std::int64_t> census_oracle(const FamilySpec& spec);

}  // namespace superchar
