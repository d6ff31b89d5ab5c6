// End-to-end acceptance suite. Each case prints one PASS/FAIL line so the
// whole run reads as a checklist.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "superchar/arith.hpp"
#include "superchar/export.hpp"
#include "superchar/families.hpp"
#include "superchar/group_file.hpp"
#include "superchar/table.hpp"

using namespace superchar;
using ordered_json = nlohmann::ordered_json;

namespace {

bool report(const char* id, bool ok, const std::string& detail = "") {
  std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", id, detail.empty() ? "" : ": ",
              detail.c_str());
  std::fflush(stdout);
  return ok;
}

template <class F>
void criterion(const char* id, F&& f) {
  bool ok = false;
  std::string detail;
  try {
    ok = f();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  CHECK_MESSAGE(report(id, ok, detail), id);
}

SupercharTable family_table(const FamilySpec& spec) {
  const auto g = build_family(spec);
  return build_table(orbits(g, Action::supercharacter), orbits(g, Action::superclass));
}

std::vector<FamilySpec> builtin_specs(std::int64_t p) {
  std::vector<FamilySpec> specs;
  for (auto f : all_families())
    if (f != Family::units) specs.push_back(make_family_spec(f, p));
  return specs;
}

// Closed-form unitary matrices, same index order as the engine.
std::vector<std::vector<double>> diagonal_closed_form_u(std::int64_t p) {
  const double q = static_cast<double>(p - 1);
  const double rq = std::sqrt(q);
  const double s = 1.0 / static_cast<double>(p);
  return {{s * 1, s * rq, s * rq, s * q},
          {s * rq, s * -1, s * q, s * -rq},
          {s * rq, s * q, s * -1, s * -rq},
          {s * q, s * -rq, s * -rq, s * 1}};
}

std::vector<std::vector<double>> jsym3_closed_form_u(std::int64_t p) {
  const double pd = static_cast<double>(p);
  const double q = pd - 1.0;
  const double s = 1.0 / (pd * std::sqrt(pd));
  return {{s * 1, s * std::sqrt(q), s * std::sqrt(pd * q), s * pd * std::sqrt(q)},
          {s * std::sqrt(q), s * q, s * q * std::sqrt(pd), s * -pd},
          {s * std::sqrt(pd * q), s * q * std::sqrt(pd), s * -pd, 0.0},
          {s * pd * std::sqrt(q), s * -pd, 0.0, 0.0}};
}

bool matches_closed_form(const UnitaryMatrix& u, const std::vector<std::vector<double>>& cf,
                         double tol) {
  if (u.size != cf.size()) return false;
  for (std::size_t i = 0; i < u.size; ++i)
    for (std::size_t j = 0; j < u.size; ++j)
      if (std::abs(u.at(i, j) - std::complex<double>(cf[i][j], 0.0)) > tol) return false;
  return true;
}

#ifdef SUPERCHAR_CLI_PATH
struct ExecResult {
  int code = -1;
  std::string out;
};

ExecResult exec_cli(const std::string& args) {
  const std::string cmd = std::string(SUPERCHAR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  ExecResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  r.code = WEXITSTATUS(pclose(pipe));
  return r;
}
#endif

}  // namespace

TEST_CASE("01 diagonal table closed form") {
  criterion("01 diagonal Z_p^2 table equals the corrected closed form (p = 3, 5, 7)", [] {
    for (std::int64_t p : {3, 5, 7}) {
      const auto spec = make_family_spec(Family::diagonal, p, 2);
      const auto t = family_table(spec);
      const auto ref = closed_form_table(spec, true);
      if (t.rows() != 4 || t.cols() != 4) return false;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          if (t.entries[i][j] != CycValue::from_integer(p, ref.entries[i][j])) return false;
    }
    return true;
  });
}

TEST_CASE("02 diagonal unitary matrix") {
  criterion("02 diagonal Z_p^2 unitary matrix and its four properties (p = 3, 5, 7)", [] {
    for (std::int64_t p : {3, 5, 7}) {
      const auto u = build_unitary(family_table(make_family_spec(Family::diagonal, p, 2)));
      const auto cf = diagonal_closed_form_u(p);
      if (!matches_closed_form(u, cf, 1e-12)) return false;
      for (std::size_t i = 0; i < 4; ++i)  // closed form is exactly symmetric
        for (std::size_t j = 0; j < 4; ++j)
          if (cf[i][j] != cf[j][i]) return false;
      const auto rep = verify_unitary_properties(u, true, 1e-10);
      if (!(rep.unitary_ok && rep.symmetric_ok && rep.permutation_ok && rep.fourth_power_ok))
        return false;
    }
    return true;
  });
}

TEST_CASE("03 diagonal orbit census") {
  criterion("03 diagonal census: 2^d orbits of sizes (p-1)^k, both actions identical", [] {
    for (auto [p, d] : std::vector<std::pair<std::int64_t, int>>{{3, 3}, {3, 4}, {5, 3}}) {
      const auto spec = make_family_spec(Family::diagonal, p, d);
      const auto g = build_family(spec);
      const auto y = orbits(g, Action::superclass);
      const auto x = orbits(g, Action::supercharacter);
      if (y.part_count() != static_cast<std::size_t>(1) << d) return false;
      if (orbit_census(y) != census_oracle(spec)) return false;
      if (x.part_count() != y.part_count()) return false;
      for (std::size_t i = 0; i < y.part_count(); ++i)
        if (x.orbits[i].members != y.orbits[i].members) return false;
    }
    return true;
  });
}

TEST_CASE("04 jsym3 table and unitary matrix") {
  criterion("04 Z_p^3 j-symmetric family: exact table, U within 1e-12, U=U^t, U^4=I (p = 3, 5)", [] {
    for (std::int64_t p : {3, 5}) {
      const auto spec = make_family_spec(Family::jsym3, p);
      const auto t = family_table(spec);
      const auto ref = closed_form_table(spec);
      if (t.rows() != 4 || t.cols() != 4) return false;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          if (t.entries[i][j] != CycValue::from_integer(p, ref.entries[i][j])) return false;
      const auto u = build_unitary(t);
      if (!matches_closed_form(u, jsym3_closed_form_u(p), 1e-12)) return false;
      const auto rep = verify_unitary_properties(u, true, 1e-10);
      if (!(rep.unitary_ok && rep.symmetric_ok && rep.fourth_power_ok)) return false;
    }
    return true;
  });
}

TEST_CASE("05 toeplitz orbit census") {
  criterion("05 toeplitz census: 1+(p-1)d orbits, p-1 of each size p^(i-2)", [] {
    for (auto [p, d] : std::vector<std::pair<std::int64_t, int>>{{3, 3}, {3, 4}, {5, 3}}) {
      const auto spec = make_family_spec(Family::toeplitz, p, d);
      const auto y = orbits(build_family(spec), Action::superclass);
      if (y.part_count() != static_cast<std::size_t>(1 + (p - 1) * d)) return false;
      if (orbit_census(y) != census_oracle(spec)) return false;
    }
    return true;
  });
}

TEST_CASE("06 exact orthogonality across all families") {
  criterion("06 exact cyclotomic row orthogonality for every built-in family", [] {
    for (std::int64_t p : {3, 5, 7})
      for (const auto& spec : builtin_specs(p))
        if (!check_orthogonality(family_table(spec))) return false;
    for (std::int64_t n : {6, 12, 30})
      if (!check_orthogonality(family_table(make_family_spec(Family::units, n)))) return false;
    return true;
  });
}

TEST_CASE("07 units family matches the mobius/totient closed form") {
  criterion("07 units(n) entries are integers equal to the divisor-sum closed form (n = 6, 12, 30)", [] {
    for (std::int64_t n : {6, 12, 30}) {
      const auto t = family_table(make_family_spec(Family::units, n));
      for (std::size_t i = 0; i < t.rows(); ++i) {
        const std::int64_t u = gcd64(t.x_parts.orbits[i].representative.entries[0], n);
        for (std::size_t j = 0; j < t.cols(); ++j) {
          const auto& v = t.entries[i][j];
          if (!v.is_integer()) return false;
          const std::int64_t expect =
              ramanujan_oracle(n / u, t.y_parts.orbits[j].representative.entries[0]);
          if (v.coeffs[0] != expect) return false;
          if (std::abs(to_complex(v) - std::complex<double>(static_cast<double>(expect), 0)) > 1e-9)
            return false;
        }
      }
    }
    return true;
  });
}

TEST_CASE("08 kloosterman family matches the direct-sum oracle") {
  criterion("08 kloosterman(p): p+2 classes, generic entries match the oracle (p = 5, 7, 11)", [] {
    for (std::int64_t p : {5, 7, 11}) {
      const auto t = family_table(make_family_spec(Family::kloosterman, p));
      if (t.rows() != static_cast<std::size_t>(p + 2)) return false;
      if (!check_orthogonality(t)) return false;
      for (std::size_t i = 0; i < t.rows(); ++i) {
        const auto& xr = t.x_parts.orbits[i].representative.entries;
        if (xr[0] == 0 || xr[1] == 0) continue;
        for (std::size_t j = 0; j < t.cols(); ++j) {
          const auto& yr = t.y_parts.orbits[j].representative.entries;
          if (yr[0] == 0 || yr[1] == 0) continue;
          const std::int64_t label = (xr[0] * xr[1]) % p * ((yr[0] * yr[1]) % p) % p;
          if (std::abs(to_complex(t.entries[i][j]) - kloosterman_oracle(p, 1, label)) > 1e-9)
            return false;
        }
      }
    }
    return true;
  });
}

TEST_CASE("09 quadratic residue family satisfies the exact square-sum identities") {
  criterion("09 quadratic_residues(p): s_a + s_b = -1 and (s_a - s_b)^2 = +/-p exactly (p = 5, 7, 13)", [] {
    for (std::int64_t p : {5, 7, 13}) {
      const auto t = family_table(make_family_spec(Family::quadratic_residues, p));
      if (t.rows() != 3) return false;
      const auto& sa = t.entries[1][1];
      const auto& sb = t.entries[1][2];
      if (add(sa, sb) != CycValue::from_integer(p, -1)) return false;
      const auto diff = sub(sa, sb);
      const std::int64_t sign = (p % 4 == 1) ? 1 : -1;
      if (mul(diff, diff) != CycValue::from_integer(p, sign * p)) return false;
    }
    return true;
  });
}

TEST_CASE("10 axiom validator") {
  criterion("10 validator: families pass, coarsest theory passes, corrupted partition fails", [] {
    for (std::int64_t p : {3, 5, 7})
      for (const auto& spec : builtin_specs(p))
        if (!validate_theory(family_table(spec)).all_ok()) return false;
    for (std::int64_t n : {6, 12, 30})
      if (!validate_theory(family_table(make_family_spec(Family::units, n))).all_ok()) return false;

    // coarsest theory: nontrivial character takes n^d - 1 at zero, -1 elsewhere
    const auto coarse = build_table(coarsest_partition(3, 2, Action::supercharacter),
                                    coarsest_partition(3, 2, Action::superclass));
    if (coarse.entries[1][0] != CycValue::from_integer(3, 8)) return false;
    if (coarse.entries[1][1] != CycValue::from_integer(3, -1)) return false;
    if (!validate_theory(coarse).all_ok()) return false;

    // move one vector between superclasses: constancy must fail
    const auto g = build_family(make_family_spec(Family::diagonal, 3, 2));
    const auto x = orbits(g, Action::supercharacter);
    auto y = orbits(g, Action::superclass);
    auto& src = y.orbits[3];
    auto& dst = y.orbits[1];
    dst.members.push_back(src.members.back());
    src.members.pop_back();
    std::sort(dst.members.begin(), dst.members.end());
    src.size -= 1;
    dst.size += 1;
    const auto r = validate_theory(build_table(x, y));
    return !r.constancy && !r.all_ok();
  });
}

TEST_CASE("11 duality invariant") {
  criterion("11 dot(x A^-t, y A) = dot(x, y) for 200 random invertible matrices", [] {
    std::mt19937_64 rng(20260810);
    std::uniform_int_distribution<std::int64_t> mod_dist(2, 12);
    std::uniform_int_distribution<int> dim_dist(1, 4);
    for (int iter = 0; iter < 200; ++iter) {
      const std::int64_t n = mod_dist(rng);
      const int d = dim_dist(rng);
      std::uniform_int_distribution<std::int64_t> entry(0, n - 1);
      ModMatrix a(n, d, std::vector<std::int64_t>(static_cast<std::size_t>(d) * d, 0));
      do {
        std::vector<std::int64_t> e(static_cast<std::size_t>(d) * d);
        for (auto& v : e) v = entry(rng);
        a = ModMatrix(n, d, std::move(e));
      } while (!is_invertible(a));
      std::vector<std::int64_t> xe(d), ye(d);
      for (auto& v : xe) v = entry(rng);
      for (auto& v : ye) v = entry(rng);
      const ModVector x(n, xe), y(n, ye);
      if (dot(vec_mat_mul(x, mat_inv_transpose(a)), vec_mat_mul(y, a)) != dot(x, y)) return false;
    }
    return true;
  });
}

TEST_CASE("12 end-to-end command line") {
#ifndef SUPERCHAR_CLI_PATH
  criterion("12 end-to-end CLI", [] { return false; });
#else
  criterion("12 CLI: verify exits 0 on built-ins, bad inputs exit 2/3, json byte-stable", [] {
    for (std::int64_t p : {3, 5, 7})
      for (auto f : all_families()) {
        if (f == Family::units) continue;
        const std::string cmd =
            "--family " + std::string(family_name(f)) + " --p " + std::to_string(p) + " verify";
        if (exec_cli(cmd).code != 0) return false;
      }
    for (std::int64_t n : {6, 12, 30})
      if (exec_cli("--family units --n " + std::to_string(n) + " verify").code != 0) return false;

    const auto dir = std::filesystem::temp_directory_path();
    const auto bad = dir / "acceptance_bad.grp";
    std::ofstream(bad) << "n 5\nd 2\n\n1 0 0\n0 1\n";
    if (exec_cli("--input " + bad.string() + " verify").code != 2) return false;
    std::filesystem::remove(bad);

    const auto nonunit = dir / "acceptance_nonunit.grp";
    std::ofstream(nonunit) << "n 6\nd 1\n\n3\n";
    if (exec_cli("--input " + nonunit.string() + " verify").code != 3) return false;
    std::filesystem::remove(nonunit);

    const std::string json_cmd = "--family kloosterman --p 5 table --format json";
    const auto first = exec_cli(json_cmd);
    const auto second = exec_cli(json_cmd);
    if (first.code != 0 || first.out != second.out) return false;
    const auto doc = ordered_json::parse(first.out);
    return doc.dump(2) + "\n" == first.out;
  });
#endif
}
