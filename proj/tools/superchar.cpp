#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "superchar/export.hpp"

namespace {

int make_config_and_run(const std::string& family, std::int64_t p, std::int64_t n, int d,
                        const std::string& input, const std::string& format, double tol,
                        std::uint64_t seed, const std::string& out_path, bool correct_errata,
                        superchar::Command command) {
  using namespace superchar;
  RunConfig cfg;
  cfg.command = command;
  cfg.tol = tol;
  cfg.seed = seed;
  cfg.correct_errata = correct_errata;
  if (!out_path.empty()) cfg.out_path = out_path;

  if (format == "json")
    cfg.format = Format::json;
  else if (format == "csv")
    cfg.format = Format::csv;
  else if (format == "latex")
    cfg.format = Format::latex;
  else
    cfg.format = Format::text;

  if (command != Command::family_list) {
    if (!family.empty() && !input.empty()) {
      std::cerr << "error: --family and --input are mutually exclusive\n";
      return 2;
    }
    if (family.empty() && input.empty()) {
      std::cerr << "error: one of --family or --input is required\n";
      return 2;
    }
    if (!family.empty()) {
      const auto f = family_from_string(family);
      if (!f) {
        std::cerr << "error: unknown family '" << family << "' (see family-list)\n";
        return 3;
      }
      if (p != 0 && n != 0) {
        std::cerr << "error: give the parameter once, via --p or --n\n";
        return 2;
      }
      const std::int64_t param = p != 0 ? p : n;
      if (param == 0) {
        std::cerr << "error: --family needs a parameter (--p or --n)\n";
        return 2;
      }
      try {
        cfg.family = make_family_spec(*f, param, d > 0 ? std::optional<int>(d) : std::nullopt);
      } catch (const superchar::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
      }
    } else {
      cfg.input_path = input;
    }
  }

  return superchar::run(cfg, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supercharacter tables of Z_n^d from matrix-group actions"};
  app.fallthrough();

  std::string family, input, format = "text", out_path;
  std::int64_t p = 0, n = 0;
  int d = 0;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  bool correct_errata = true;

  app.add_option("--family", family, "built-in family name (see family-list)");
  app.add_option("--p", p, "family parameter (prime families)");
  app.add_option("--n", n, "family parameter (general modulus)");
  app.add_option("--d", d, "dimension, where the family allows one");
  app.add_option("--input", input, "group file with generators and optional J block");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
  app.add_option("--tol", tol, "tolerance for the floating-point unitary checks");
  app.add_option("--seed", seed, "seed for sampled constancy checks");
  app.add_option("--out", out_path, "write the document to this path instead of stdout");
  app.add_flag("--correct-errata,!--no-correct-errata", correct_errata,
               "apply the documented correction to the published diagonal table (default on)");

  app.add_subcommand("orbits", "emit both orbit partitions with censuses");
  app.add_subcommand("table", "emit the exact supercharacter table");
  app.add_subcommand("unitary", "emit the unitary matrix U");
  app.add_subcommand("verify", "run all identity checks; exit 0 iff they pass");
  app.add_subcommand("family-list", "list built-in families");
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  superchar::Command command = superchar::Command::verify;
  if (app.got_subcommand("orbits")) command = superchar::Command::orbits;
  else if (app.got_subcommand("table")) command = superchar::Command::table;
  else if (app.got_subcommand("unitary")) command = superchar::Command::unitary;
  else if (app.got_subcommand("verify")) command = superchar::Command::verify;
  else if (app.got_subcommand("family-list")) command = superchar::Command::family_list;

  return make_config_and_run(family, p, n, d, input, format, tol, seed, out_path, correct_errata,
                             command);
}
