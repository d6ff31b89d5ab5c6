#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "superchar/families.hpp"
#include "superchar/group.hpp"
#include "superchar/table.hpp"

namespace superchar {

enum class Command { orbits, table, unitary, verify, family_list };
enum class Format { json, csv, latex, text };

struct RunConfig {
  Command command = Command::verify;
  std::optional<FamilySpec> family;       // exactly one of family/input_path
  std::optional<std::string> input_path;
  Format format = Format::text;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::optional<std::string> out_path;    // default: the stream passed to run
  bool correct_errata = true;
};

// Executes one command. The emitted document goes to out (or the --out path);
// diagnostics go to err. Exit codes: 0 success, 1 verification failure,
// 2 parse error, 3 invalid input (non-unit generator, bad parameters, ...).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Renderings shared by the emitters and the tests.
std::string cyc_to_string(const CycValue& v, bool latex);
std::string cyc_value_json_text(const CycValue& v);  // {"n":..,"coeffs":[..],"re":..,"im":..}

struct VerifyOutcome {
  SymmetryKind symmetry = SymmetryKind::none;
  TheoryReport theory;
  UnitaryReport unitary;
  bool published_checked = false;
  bool published_ok = true;
  bool errata_corrected = true;
  std::vector<std::string> published_notes;

  bool passed() const { return theory.all_ok() && unitary.all_ok() && published_ok; }
};

// The verification bundle behind the `verify` command, callable in-process.
VerifyOutcome run_verification(const GroupSet& group, const SymmetryWitness& witness,
                               const SupercharTable& table, double tol, std::uint64_t seed,
                               const std::optional<FamilySpec>& family, bool correct_errata);

}  // namespace superchar
