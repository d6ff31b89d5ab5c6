#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "superchar/cyclotomic.hpp"
#include "superchar/orbits.hpp"

namespace superchar {

// The supercharacter table: entries[i][j] is the value of the i-th orbit-sum
// character at the representative of the j-th superclass, held exactly in
// Z[zeta_n]. Row and column order inherit the orbit-engine ordering.
struct SupercharTable {
  std::int64_t mod = 0;
  int dim = 0;
  OrbitPartition x_parts;  // character side (rows)
  OrbitPartition y_parts;  // superclass side (columns)
  std::vector<std::vector<CycValue>> entries;

  std::size_t rows() const { return x_parts.part_count(); }
  std::size_t cols() const { return y_parts.part_count(); }
  bool square() const { return rows() == cols(); }
  std::int64_t group_size() const { return x_parts.total(); }
};

SupercharTable build_table(const OrbitPartition& x, const OrbitPartition& y);

// Value of the i-th orbit-sum character at an arbitrary point, bypassing the
// representative. The constancy check recomputes entries this way.
CycValue character_value_at(const OrbitPartition& x, std::size_t i, const ModVector& point);

// Axiom checks. Everything exact; notes collect human-readable failures.
struct TheoryReport {
  bool is_partition_pair = false;
  bool sizes_match = false;
  bool zero_singleton = false;
  bool constancy = false;
  bool orthogonality = false;
  std::vector<std::string> notes;

  bool all_ok() const {
    return is_partition_pair && sizes_match && zero_singleton && constancy && orthogonality;
  }
};

// Above this many vectors the constancy check samples min(|class|, 64)
// members per class instead of recomputing from every member.
inline constexpr std::int64_t kConstancyExhaustiveLimit = 100'000;

TheoryReport validate_theory(const SupercharTable& t, std::uint64_t seed = 0);

// Exact row orthogonality: sum_j |Y_j| s_i(Y_j) conj(s_i'(Y_j)) equals
// delta_{ii'} n^d |X_i| as an identity in Z[zeta_n].
bool check_orthogonality(const SupercharTable& t);

struct UnitaryMatrix {
  std::size_t size = 0;
  std::vector<std::complex<double>> a;

  std::complex<double>& at(std::size_t i, std::size_t j) { return a[i * size + j]; }
  const std::complex<double>& at(std::size_t i, std::size_t j) const { return a[i * size + j]; }
};

// U[i][j] = s_i(Y_j) sqrt(|Y_j|) / (sqrt(n^d) sqrt(|X_i|)); the one
// floating-point object in the pipeline (square roots leave the ring).
UnitaryMatrix build_unitary(const SupercharTable& t);

struct UnitaryReport {
  double tol = 0.0;
  bool symmetric_required = false;
  bool unitary_ok = false;
  bool symmetric_ok = false;
  bool permutation_ok = false;
  bool fourth_power_ok = false;
  double unitary_dev = 0.0;
  double symmetric_dev = 0.0;
  double permutation_dev = 0.0;
  double fourth_power_dev = 0.0;
  std::vector<std::size_t> permutation;  // row -> column of the 1 in U^2

  // U = U^t is demanded only when the witness was plain symmetry.
  bool all_ok() const {
    return unitary_ok && permutation_ok && fourth_power_ok && (symmetric_ok || !symmetric_required);
  }
};

// Checks ||U U* - I|| <= tol, U = U^t (when required), that U^2 rounds to a
// 0/1 permutation matrix, and ||U^4 - I|| <= tol. Deviations are max-norm.
UnitaryReport verify_unitary_properties(const UnitaryMatrix& u, bool expect_symmetric, double tol = 1e-10);

}  // namespace superchar
