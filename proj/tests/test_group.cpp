#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "superchar/arith.hpp"
#include "superchar/families.hpp"
#include "superchar/group.hpp"

using namespace superchar;

TEST_CASE("closure of the empty generator list is the trivial group") {
  const auto g = generate_closure(Modulus(5), 2, {});
  CHECK(g.order() == 1);
  CHECK(g.elements.front() == ModMatrix::identity(5, 2));
}

TEST_CASE("closure of diag(2,3) mod 5 has order 4") {
  // powers cycle: diag(2,3), diag(4,4), diag(3,2), diag(1,1)
  const auto g = generate_closure(Modulus(5), 2, {ModMatrix(5, 2, {2, 0, 0, 3})});
  CHECK(g.order() == 4);
  CHECK(g.contains(ModMatrix(5, 2, {4, 0, 0, 4})));
  CHECK(g.contains(ModMatrix(5, 2, {3, 0, 0, 2})));
  CHECK(g.is_closed());
}

TEST_CASE("closure of both diagonal generators mod 3 is the full diagonal group") {
  const auto g =
      generate_closure(Modulus(3), 2, {ModMatrix(3, 2, {2, 0, 0, 1}), ModMatrix(3, 2, {1, 0, 0, 2})});
  CHECK(g.order() == 4);
  CHECK(g.elements == build_family(make_family_spec(Family::diagonal, 3, 2)).elements);
}

TEST_CASE("closure is generator-order independent") {
  const std::vector<ModMatrix> gens = {ModMatrix(5, 2, {2, 0, 0, 3}), ModMatrix(5, 2, {1, 1, 0, 1}),
                                       ModMatrix(5, 2, {0, 1, 4, 0})};
  const auto base = generate_closure(Modulus(5), 2, gens);
  std::vector<ModMatrix> shuffled = {gens[2], gens[0], gens[1]};
  CHECK(generate_closure(Modulus(5), 2, shuffled).elements == base.elements);
}

TEST_CASE("closure errors") {
  CHECK_THROWS_AS(generate_closure(Modulus(6), 1, {ModMatrix(6, 1, {2})}), NotAUnit);
  CHECK_THROWS_AS(generate_closure(Modulus(5), 2, {ModMatrix(5, 2, {1, 1, 0, 1})}, 3), CapExceeded);
}

TEST_CASE("make_group validates and canonicalizes") {
  CHECK_THROWS_AS(make_group(5, 2, {ModMatrix(5, 2, {1, 1, 0, 1})}), BadParams);  // no identity
  CHECK_THROWS_AS(make_group(6, 1, {ModMatrix(6, 1, {1}), ModMatrix(6, 1, {3})}), NotAUnit);
  const auto g = make_group(5, 1, {ModMatrix(5, 1, {4}), ModMatrix(5, 1, {1}), ModMatrix(5, 1, {4})});
  CHECK(g.order() == 2);
  CHECK(std::is_sorted(g.elements.begin(), g.elements.end()));
}

TEST_CASE("classify_symmetry: diagonal groups are symmetric") {
  const auto g = build_family(make_family_spec(Family::diagonal, 5, 2));
  CHECK(classify_symmetry(g).kind == SymmetryKind::symmetric);
}

TEST_CASE("classify_symmetry: banded Toeplitz group is J-symmetric") {
  const auto g = build_family(make_family_spec(Family::toeplitz, 3, 3));
  REQUIRE(g.witness.has_value());
  const auto w = classify_symmetry(g, g.witness->j);
  CHECK(w.kind == SymmetryKind::j_symmetric);

  // the map A -> J A J^-1 carries the group onto its transposes
  const auto& j = *g.witness->j;
  const auto jinv = mat_inverse(j);
  std::vector<ModMatrix> conjugated, transposed;
  for (const auto& a : g.elements) {
    conjugated.push_back(mat_mul(mat_mul(j, a), jinv));
    transposed.push_back(mat_transpose(a));
  }
  std::sort(conjugated.begin(), conjugated.end());
  std::sort(transposed.begin(), transposed.end());
  CHECK(conjugated == transposed);
}

TEST_CASE("classify_symmetry: shear closure mod 3 has no symmetry without J") {
  const auto g = generate_closure(Modulus(3), 2, {ModMatrix(3, 2, {1, 1, 0, 1})});
  CHECK(g.order() == 3);
  CHECK(!g.contains(mat_transpose(ModMatrix(3, 2, {1, 1, 0, 1}))));
  CHECK(classify_symmetry(g).kind == SymmetryKind::none);
}

TEST_CASE("classify_symmetry rejects a bad witness") {
  const auto g = build_family(make_family_spec(Family::toeplitz, 3, 3));
  CHECK_THROWS_AS(classify_symmetry(g, ModMatrix(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0})), BadWitness);
  CHECK_THROWS_AS(classify_symmetry(g, ModMatrix(3, 3, {0, 0, 0, 0, 1, 0, 0, 0, 0})), BadWitness);
}

TEST_CASE("symmetric groups: A -> A^-t permutes the element set") {
  for (auto spec : {make_family_spec(Family::diagonal, 5, 2), make_family_spec(Family::kloosterman, 7),
                    make_family_spec(Family::units, 12)}) {
    const auto g = build_family(spec);
    std::vector<ModMatrix> mapped;
    for (const auto& a : g.elements) mapped.push_back(mat_inv_transpose(a));
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == g.elements);
  }
}

TEST_CASE("group order divides |GL_d(Z_p)| for prime p") {
  const auto gl_order = [](std::int64_t p, int d) {
    std::int64_t o = 1, pd = 1;
    for (int i = 0; i < d; ++i) pd *= p;
    std::int64_t pk = 1;
    for (int i = 0; i < d; ++i) {
      o *= pd - pk;
      pk *= p;
    }
    return o;
  };
  for (auto spec : {make_family_spec(Family::diagonal, 5, 2), make_family_spec(Family::kloosterman, 7),
                    make_family_spec(Family::toeplitz, 3, 3), make_family_spec(Family::jsym3, 5)}) {
    const auto g = build_family(spec);
    CHECK(gl_order(g.mod, g.dim) % g.order() == 0);
  }
}
