#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "superchar/group.hpp"
#include "superchar/residue.hpp"

namespace superchar {

// The two dual actions on Z_n^d: y -> yA on superclasses, x -> x A^{-t} on
// characters (identified with their frequency vectors).
enum class Action { superclass, supercharacter };

// Vectors are carried as base-n integer codes (entry 0 most significant),
// so the lexicographic order on vectors is the numeric order on codes.
std::int64_t encode_vector(const ModVector& v);
ModVector decode_vector(std::int64_t mod, int dim, std::int64_t code);

struct Orbit {
  ModVector representative;          // lexicographic minimum of the orbit
  std::int64_t size = 0;
  std::vector<std::int64_t> members; // sorted codes
};

// Ordering contract: the zero orbit first, then ascending by (size,
// representative). Everything downstream (tables, exports) relies on it.
struct OrbitPartition {
  std::int64_t mod = 0;
  int dim = 0;
  Action action = Action::superclass;
  std::vector<Orbit> orbits;
  std::vector<std::int32_t> index_of;  // code -> orbit index

  std::int64_t total() const { return static_cast<std::int64_t>(index_of.size()); }
  std::size_t part_count() const { return orbits.size(); }
};

// Full partition of Z_n^d under the chosen action. Orbits are generated
// transitively (BFS over repeated applications), so the result is the
// partition of the group generated by the element set even when the set
// itself is not multiplicatively closed.
OrbitPartition orbits(const GroupSet& g, Action action);

// Histogram: orbit size -> number of orbits of that size.
std::map<std::int64_t, std::int64_t> orbit_census(const OrbitPartition& p);

// Index of the unique orbit containing v.
std::size_t locate(const OrbitPartition& p, const ModVector& v);

// Trivial partitions: every vector its own part, and {0} versus the rest.
// These realize the two degenerate theories every group admits.
OrbitPartition finest_partition(std::int64_t mod, int dim, Action action);
OrbitPartition coarsest_partition(std::int64_t mod, int dim, Action action);

}  // namespace superchar
