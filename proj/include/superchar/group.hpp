#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "superchar/residue.hpp"

namespace superchar {

enum class SymmetryKind { symmetric, j_symmetric, none };

// How a group earns the right to act on both sides: either G^t = G as a set,
// or J G = G^t J for a fixed symmetric invertible J.
struct SymmetryWitness {
  SymmetryKind kind = SymmetryKind::none;
  std::optional<ModMatrix> j;
};

// An explicit finite subset of GL_d(Z_n), canonically ordered (row-major
// lexicographic). Family constructors attach the symmetry witness they
// guarantee by construction.
struct GroupSet {
  std::int64_t mod = 0;
  int dim = 0;
  std::vector<ModMatrix> elements;
  std::optional<SymmetryWitness> witness;

  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
  bool contains(const ModMatrix& m) const;

  // Exhaustive check that the element set is closed under products and
  // inverses. Quadratic; meant for tests and small groups.
  bool is_closed() const;
};

// Deduplicate, sort canonically, and validate (identity present, every
// element invertible).
GroupSet make_group(std::int64_t mod, int dim, std::vector<ModMatrix> elements);

inline constexpr std::int64_t kDefaultClosureCap = 2'000'000;

// Multiplicative closure of the generators (BFS). Inverses arise on their
// own since every invertible matrix over Z_n has finite order. Throws
// NotAUnit for a non-invertible generator and CapExceeded past the cap.
GroupSet generate_closure(const Modulus& mod, int dim, const std::vector<ModMatrix>& generators,
                          std::int64_t cap = kDefaultClosureCap);

// Tries plain symmetry first, then the supplied J only; never searches for
// an unknown J. Throws BadWitness if j is given but not symmetric/invertible.
SymmetryWitness classify_symmetry(const GroupSet& g, const std::optional<ModMatrix>& j = {});

}  // namespace superchar
