#include "superchar/table.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "superchar/arith.hpp"
#include "superchar/checked.hpp"

namespace superchar {

namespace {

std::vector<ModVector> decoded_members(const OrbitPartition& p, const Orbit& o) {
  std::vector<ModVector> out;
  out.reserve(o.members.size());
  for (auto code : o.members) out.push_back(decode_vector(p.mod, p.dim, code));
  return out;
}

CycValue orbit_sum_at(std::int64_t n, const std::vector<ModVector>& xs, const ModVector& point) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  for (const auto& x : xs) ++counts[static_cast<std::size_t>(dot(x, point))];
  return CycValue::from_coeffs(n, counts);
}

}  // namespace

SupercharTable build_table(const OrbitPartition& x, const OrbitPartition& y) {
  if (x.mod != y.mod || x.dim != y.dim) throw MismatchError("partition modulus/dimension mismatch");
  SupercharTable t{x.mod, x.dim, x, y, {}};
  t.entries.reserve(x.part_count());
  for (const auto& xo : x.orbits) {
    const auto xs = decoded_members(x, xo);
    std::vector<CycValue> row;
    row.reserve(y.part_count());
    for (const auto& yo : y.orbits) row.push_back(orbit_sum_at(x.mod, xs, yo.representative));
    t.entries.push_back(std::move(row));
  }
  return t;
}

CycValue character_value_at(const OrbitPartition& x, std::size_t i, const ModVector& point) {
  return orbit_sum_at(x.mod, decoded_members(x, x.orbits[i]), point);
}

namespace {

bool is_partition(const OrbitPartition& p, std::vector<std::string>& notes, const char* side) {
  std::vector<char> seen(static_cast<std::size_t>(p.total()), 0);
  std::int64_t covered = 0;
  for (const auto& o : p.orbits) {
    if (o.size != static_cast<std::int64_t>(o.members.size())) {
      notes.push_back(std::string(side) + ": orbit size field disagrees with member list");
      return false;
    }
    for (auto code : o.members) {
      if (code < 0 || code >= p.total() || seen[static_cast<std::size_t>(code)]) {
        notes.push_back(std::string(side) + ": duplicate or out-of-range member");
        return false;
      }
      seen[static_cast<std::size_t>(code)] = 1;
      ++covered;
    }
  }
  if (covered != p.total()) {
    notes.push_back(std::string(side) + ": parts do not cover the whole group");
    return false;
  }
  return true;
}

bool leading_zero_singleton(const OrbitPartition& p) {
  return !p.orbits.empty() && p.orbits.front().size == 1 && p.orbits.front().members.front() == 0;
}

bool check_constancy(const SupercharTable& t, std::uint64_t seed, std::vector<std::string>& notes) {
  const bool exhaustive = t.group_size() <= kConstancyExhaustiveLimit;
  std::mt19937_64 rng(seed);
  for (std::size_t j = 0; j < t.cols(); ++j) {
    const auto& yo = t.y_parts.orbits[j];
    std::vector<std::int64_t> picks = yo.members;
    if (!exhaustive && picks.size() > 64) {
      std::shuffle(picks.begin(), picks.end(), rng);
      picks.resize(64);
    }
    for (auto code : picks) {
      const ModVector point = decode_vector(t.mod, t.dim, code);
      for (std::size_t i = 0; i < t.rows(); ++i) {
        if (character_value_at(t.x_parts, i, point) != t.entries[i][j]) {
          notes.push_back("character " + std::to_string(i) + " is not constant on superclass " +
                          std::to_string(j));
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TheoryReport validate_theory(const SupercharTable& t, std::uint64_t seed) {
  TheoryReport r;
  r.sizes_match = t.square();
  if (!r.sizes_match)
    r.notes.push_back("partition sizes differ: " + std::to_string(t.rows()) + " character parts vs " +
                      std::to_string(t.cols()) + " superclasses");
  r.is_partition_pair = is_partition(t.x_parts, r.notes, "characters") && is_partition(t.y_parts, r.notes, "superclasses");
  r.zero_singleton = leading_zero_singleton(t.x_parts) && leading_zero_singleton(t.y_parts);
  if (!r.zero_singleton) r.notes.push_back("zero part is not a leading singleton on both sides");
  r.constancy = check_constancy(t, seed, r.notes);
  r.orthogonality = r.sizes_match && check_orthogonality(t);
  if (r.sizes_match && !r.orthogonality) r.notes.push_back("exact row orthogonality fails");
  return r;
}

bool check_orthogonality(const SupercharTable& t) {
  if (!t.square()) return false;
  const std::int64_t n = t.mod;
  const std::int64_t total = t.group_size();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    std::vector<CycValue> conj_row;
    conj_row.reserve(t.cols());
    for (std::size_t j = 0; j < t.cols(); ++j) conj_row.push_back(conj(t.entries[i][j]));
    for (std::size_t k = 0; k < t.rows(); ++k) {
      CycValue sum = CycValue::zero(n);
      for (std::size_t j = 0; j < t.cols(); ++j)
        sum = add(sum, scale(mul(t.entries[k][j], conj_row[j]), t.y_parts.orbits[j].size));
      const CycValue expect =
          (i == k) ? CycValue::from_integer(n, checked_mul(total, t.x_parts.orbits[i].size))
                   : CycValue::zero(n);
      if (sum != expect) return false;
    }
  }
  return true;
}

UnitaryMatrix build_unitary(const SupercharTable& t) {
  const auto h = t.rows();
  UnitaryMatrix u{h, std::vector<std::complex<double>>(h * h)};
  const double root_order = std::sqrt(static_cast<double>(t.group_size()));
  for (std::size_t i = 0; i < h; ++i) {
    const double xw = std::sqrt(static_cast<double>(t.x_parts.orbits[i].size));
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const double yw = std::sqrt(static_cast<double>(t.y_parts.orbits[j].size));
      u.at(i, j) = to_complex(t.entries[i][j]) * yw / (root_order * xw);
    }
  }
  return u;
}

namespace {

UnitaryMatrix complex_mul(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  const auto h = a.size;
  UnitaryMatrix c{h, std::vector<std::complex<double>>(h * h)};
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t k = 0; k < h; ++k) {
      const auto aik = a.at(i, k);
      for (std::size_t j = 0; j < h; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

double max_dev_from_identity(const UnitaryMatrix& m) {
  double dev = 0.0;
  for (std::size_t i = 0; i < m.size; ++i)
    for (std::size_t j = 0; j < m.size; ++j)
      dev = std::max(dev, std::abs(m.at(i, j) - ((i == j) ? 1.0 : 0.0)));
  return dev;
}

}  // namespace

UnitaryReport verify_unitary_properties(const UnitaryMatrix& u, bool expect_symmetric, double tol) {
  if (tol <= 0) throw BadParams("tolerance must be positive");
  const auto h = u.size;
  UnitaryReport r;
  r.tol = tol;
  r.symmetric_required = expect_symmetric;

  UnitaryMatrix uh{h, std::vector<std::complex<double>>(h * h)};
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) uh.at(i, j) = std::conj(u.at(j, i));
  r.unitary_dev = max_dev_from_identity(complex_mul(u, uh));
  r.unitary_ok = r.unitary_dev <= tol;

  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      r.symmetric_dev = std::max(r.symmetric_dev, std::abs(u.at(i, j) - u.at(j, i)));
  r.symmetric_ok = r.symmetric_dev <= tol;

  const UnitaryMatrix u2 = complex_mul(u, u);
  r.permutation = std::vector<std::size_t>(h, h);
  std::vector<int> col_hits(h, 0);
  bool perm_valid = true;
  for (std::size_t i = 0; i < h; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < h; ++j) {
      const double re = u2.at(i, j).real();
      const double rounded = std::round(re);
      const double res = std::max(std::abs(re - rounded), std::abs(u2.at(i, j).imag()));
      r.permutation_dev = std::max(r.permutation_dev, res);
      if (rounded != 0.0 && rounded != 1.0) perm_valid = false;
      if (rounded == 1.0) {
        ++ones;
        r.permutation[i] = j;
        ++col_hits[j];
      }
    }
    if (ones != 1) perm_valid = false;
  }
  for (auto hits : col_hits) perm_valid = perm_valid && hits == 1;
  r.permutation_ok = perm_valid && r.permutation_dev <= tol;
  if (!r.permutation_ok) r.permutation.clear();

  r.fourth_power_dev = max_dev_from_identity(complex_mul(u2, u2));
  r.fourth_power_ok = r.fourth_power_dev <= tol;
  return r;
}

}  // namespace superchar
