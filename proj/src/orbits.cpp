#include "superchar/orbits.hpp"

#include <algorithm>
#include <numeric>

#include "superchar/arith.hpp"
#include "superchar/checked.hpp"

namespace superchar {

namespace {
constexpr std::int64_t kMaxStates = 20'000'000;

std::int64_t state_count(std::int64_t mod, int dim) {
  std::int64_t total = checked_pow(mod, dim);
  if (total > kMaxStates)
    throw Error("state space n^d = " + std::to_string(total) + " exceeds supported size");
  return total;
}
}  // namespace

std::int64_t encode_vector(const ModVector& v) {
  std::int64_t code = 0;
  for (auto e : v.entries) code = code * v.mod + e;
  return code;
}

ModVector decode_vector(std::int64_t mod, int dim, std::int64_t code) {
  std::vector<std::int64_t> e(dim);
  for (int i = dim - 1; i >= 0; --i) {
    e[i] = code % mod;
    code /= mod;
  }
  return ModVector(mod, std::move(e));
}

OrbitPartition orbits(const GroupSet& g, Action action) {
  const std::int64_t n = g.mod;
  const int d = g.dim;
  const std::int64_t total = state_count(n, d);

  std::vector<ModMatrix> mats;
  mats.reserve(g.elements.size());
  for (const auto& a : g.elements)
    mats.push_back(action == Action::superclass ? a : mat_inv_transpose(a));

  OrbitPartition part{n, d, action, {}, std::vector<std::int32_t>(total, -1)};

  for (std::int64_t seed = 0; seed < total; ++seed) {
    if (part.index_of[seed] >= 0) continue;
    const auto id = static_cast<std::int32_t>(part.orbits.size());
    std::vector<std::int64_t> members{seed};
    part.index_of[seed] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const ModVector v = decode_vector(n, d, members[head]);
      for (const auto& m : mats) {
        const std::int64_t code = encode_vector(vec_mat_mul(v, m));
        if (part.index_of[code] < 0) {
          part.index_of[code] = id;
          members.push_back(code);
        }
      }
    }
    std::sort(members.begin(), members.end());
    Orbit o;
    o.representative = decode_vector(n, d, members.front());
    o.size = static_cast<std::int64_t>(members.size());
    o.members = std::move(members);
    part.orbits.push_back(std::move(o));
  }

  // Zero's orbit is seeded first and stays first; the rest sort by
  // (size, representative code).
  std::sort(part.orbits.begin() + 1, part.orbits.end(), [](const Orbit& a, const Orbit& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.members.front() < b.members.front();
  });
  for (std::size_t i = 0; i < part.orbits.size(); ++i)
    for (auto code : part.orbits[i].members) part.index_of[code] = static_cast<std::int32_t>(i);

  return part;
}

std::map<std::int64_t, std::int64_t> orbit_census(const OrbitPartition& p) {
  std::map<std::int64_t, std::int64_t> census;
  for (const auto& o : p.orbits) ++census[o.size];
  return census;
}

std::size_t locate(const OrbitPartition& p, const ModVector& v) {
  if (v.mod != p.mod || v.dim() != p.dim) throw MismatchError("vector does not match partition");
  return static_cast<std::size_t>(p.index_of[encode_vector(v)]);
}

OrbitPartition finest_partition(std::int64_t mod, int dim, Action action) {
  const std::int64_t total = state_count(mod, dim);
  OrbitPartition part{mod, dim, action, {}, std::vector<std::int32_t>(total)};
  part.orbits.reserve(total);
  for (std::int64_t code = 0; code < total; ++code) {
    part.orbits.push_back(Orbit{decode_vector(mod, dim, code), 1, {code}});
    part.index_of[code] = static_cast<std::int32_t>(code);
  }
  return part;
}

OrbitPartition coarsest_partition(std::int64_t mod, int dim, Action action) {
  const std::int64_t total = state_count(mod, dim);
  OrbitPartition part{mod, dim, action, {}, std::vector<std::int32_t>(total, 1)};
  part.index_of[0] = 0;
  part.orbits.push_back(Orbit{decode_vector(mod, dim, 0), 1, {0}});
  Orbit rest;
  rest.representative = decode_vector(mod, dim, 1);
  rest.size = total - 1;
  rest.members.resize(total - 1);
  std::iota(rest.members.begin(), rest.members.end(), 1);
  part.orbits.push_back(std::move(rest));
  return part;
}

}  // namespace superchar
