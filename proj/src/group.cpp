#include "superchar/group.hpp"

#include <algorithm>
#include <set>

#include "superchar/arith.hpp"

namespace superchar {

bool GroupSet::contains(const ModMatrix& m) const {
  return std::binary_search(elements.begin(), elements.end(), m);
}

bool GroupSet::is_closed() const {
  for (const auto& a : elements) {
    if (!contains(mat_inverse(a))) return false;
    for (const auto& b : elements)
      if (!contains(mat_mul(a, b))) return false;
  }
  return true;
}

GroupSet make_group(std::int64_t mod, int dim, std::vector<ModMatrix> elements) {
  for (const auto& m : elements) {
    if (m.mod != mod || m.dim != dim) throw MismatchError("group element modulus/dimension mismatch");
    if (!is_invertible(m)) throw NotAUnit("group element is not invertible");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  GroupSet g{mod, dim, std::move(elements), std::nullopt};
  if (!g.contains(ModMatrix::identity(mod, dim))) throw BadParams("group set is missing the identity");
  return g;
}

GroupSet generate_closure(const Modulus& mod, int dim, const std::vector<ModMatrix>& generators,
                          std::int64_t cap) {
  if (cap < 1) throw BadParams("closure cap must be >= 1");
  for (const auto& g : generators) {
    if (g.mod != mod.n || g.dim != dim) throw MismatchError("generator modulus/dimension mismatch");
    if (!is_invertible(g)) throw NotAUnit("generator is not invertible over Z_" + std::to_string(mod.n));
  }

  std::set<ModMatrix> seen;
  std::vector<ModMatrix> queue;
  auto push = [&](const ModMatrix& m) {
    if (seen.insert(m).second) {
      if (static_cast<std::int64_t>(seen.size()) > cap)
        throw CapExceeded("closure exceeded cap of " + std::to_string(cap) + " elements");
      queue.push_back(m);
    }
  };

  push(ModMatrix::identity(mod.n, dim));
  for (const auto& g : generators) push(g);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ModMatrix cur = queue[head];
    for (const auto& g : generators) push(mat_mul(cur, g));
  }

  GroupSet out{mod.n, dim, std::vector<ModMatrix>(seen.begin(), seen.end()), std::nullopt};
  return out;
}

static bool sets_equal(std::vector<ModMatrix> a, std::vector<ModMatrix> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

SymmetryWitness classify_symmetry(const GroupSet& g, const std::optional<ModMatrix>& j) {
  if (j) {
    if (j->mod != g.mod || j->dim != g.dim) throw BadWitness("J modulus/dimension mismatch");
    if (*j != mat_transpose(*j)) throw BadWitness("J is not symmetric");
    if (!is_invertible(*j)) throw BadWitness("J is not invertible");
  }

  bool symmetric = true;
  for (const auto& a : g.elements)
    if (!g.contains(mat_transpose(a))) {
      symmetric = false;
      break;
    }
  if (symmetric) return SymmetryWitness{SymmetryKind::symmetric, std::nullopt};

  if (j) {
    std::vector<ModMatrix> lhs, rhs;
    lhs.reserve(g.elements.size());
    rhs.reserve(g.elements.size());
    for (const auto& a : g.elements) {
      lhs.push_back(mat_mul(*j, a));
      rhs.push_back(mat_mul(mat_transpose(a), *j));
    }
    if (sets_equal(std::move(lhs), std::move(rhs))) return SymmetryWitness{SymmetryKind::j_symmetric, *j};
  }
  return SymmetryWitness{SymmetryKind::none, std::nullopt};
}

}  // namespace superchar
