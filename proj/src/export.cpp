#include "superchar/export.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "superchar/arith.hpp"
#include "superchar/group_file.hpp"

namespace superchar {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kind_name(SymmetryKind k) {
  switch (k) {
    case SymmetryKind::symmetric: return "symmetric";
    case SymmetryKind::j_symmetric: return "j-symmetric";
    case SymmetryKind::none: return "none";
  }
  return "none";
}

struct Workspace {
  GroupSet group;
  SymmetryWitness witness;
  OrbitPartition x;  // supercharacter side
  OrbitPartition y;  // superclass side
};

Workspace build_workspace(const RunConfig& cfg) {
  Workspace w;
  if (cfg.family && cfg.input_path) throw BadParams("supply either a family or an input file, not both");
  if (cfg.family) {
    w.group = build_family(*cfg.family);
    w.witness = *w.group.witness;
  } else if (cfg.input_path) {
    std::ifstream in(*cfg.input_path);
    if (!in) throw BadParams("cannot open input file '" + *cfg.input_path + "'");
    const GroupFileData data = parse_group_file(in);
    w.group = generate_closure(Modulus(data.n), data.dim, data.generators);
    w.witness = classify_symmetry(w.group, data.j);
    w.group.witness = w.witness;
  } else {
    throw BadParams("no group source given: use --family or --input");
  }
  w.x = orbits(w.group, Action::supercharacter);
  w.y = orbits(w.group, Action::superclass);
  return w;
}

// ---- shared renderings ----------------------------------------------------

std::string double_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string rep_text(const ModVector& v) {
  std::string s;
  for (int i = 0; i < v.dim(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v.entries[i]);
  }
  return s;
}

ordered_json rep_json(const ModVector& v) {
  return ordered_json(v.entries);
}

ordered_json parts_json(const OrbitPartition& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& o : p.orbits) arr.push_back({{"rep", rep_json(o.representative)}, {"size", o.size}});
  return arr;
}

ordered_json census_json(const OrbitPartition& p) {
  ordered_json arr = ordered_json::array();
  for (auto [size, count] : orbit_census(p)) arr.push_back({size, count});
  return arr;
}

ordered_json meta_json(const Workspace& w) {
  return {{"n", w.group.mod},
          {"d", w.group.dim},
          {"group_order", w.group.order()},
          {"symmetry", kind_name(w.witness.kind)}};
}

ordered_json table_json(const SupercharTable& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.entries) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) {
      const auto z = to_complex(v);
      r.push_back({{"coeffs", v.coeffs}, {"re", z.real()}, {"im", z.imag()}});
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

ordered_json unitary_json(const UnitaryMatrix& u) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < u.size; ++i) {
    ordered_json r = ordered_json::array();
    for (std::size_t j = 0; j < u.size; ++j)
      r.push_back({u.at(i, j).real(), u.at(i, j).imag()});
    rows.push_back(std::move(r));
  }
  return rows;
}

ordered_json checks_json(const VerifyOutcome& v) {
  ordered_json j = {{"is_partition_pair", v.theory.is_partition_pair},
                    {"sizes_match", v.theory.sizes_match},
                    {"zero_singleton", v.theory.zero_singleton},
                    {"constancy", v.theory.constancy},
                    {"orthogonality", v.theory.orthogonality},
                    {"unitary", v.unitary.unitary_ok},
                    {"unitary_symmetric", v.unitary.symmetric_ok},
                    {"unitary_symmetric_required", v.unitary.symmetric_required},
                    {"square_is_permutation", v.unitary.permutation_ok},
                    {"fourth_power_identity", v.unitary.fourth_power_ok}};
  if (v.published_checked) {
    j["published_table"] = v.published_ok;
    j["errata_corrected"] = v.errata_corrected;
  }
  ordered_json notes = ordered_json::array();
  for (const auto& s : v.theory.notes) notes.push_back(s);
  for (const auto& s : v.published_notes) notes.push_back(s);
  j["notes"] = std::move(notes);
  j["passed"] = v.passed();
  return j;
}

void write_json(std::ostream& out, const ordered_json& doc) {
  out << doc.dump(2) << '\n';
}

}  // namespace

std::string cyc_to_string(const CycValue& v, bool latex) {
  if (v.is_zero()) return "0";
  std::string s;
  for (std::size_t k = v.coeffs.size(); k-- > 0;) {
    const std::int64_t c = v.coeffs[k];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (s.empty())
      s += (c < 0) ? "-" : "";
    else
      s += (c < 0) ? " - " : " + ";
    if (k == 0 || mag != 1) s += std::to_string(mag);
    if (k > 0) {
      s += latex ? "\\zeta" : "z";
      if (k > 1) s += latex ? ("^{" + std::to_string(k) + "}") : ("^" + std::to_string(k));
    }
  }
  return s;
}

std::string cyc_value_json_text(const CycValue& v) {
  const auto z = to_complex(v);
  ordered_json j = {{"n", v.n}, {"coeffs", v.coeffs}, {"re", z.real()}, {"im", z.imag()}};
  return j.dump();
}

VerifyOutcome run_verification(const GroupSet& group, const SymmetryWitness& witness,
                               const SupercharTable& table, double tol, std::uint64_t seed,
                               const std::optional<FamilySpec>& family, bool correct_errata) {
  VerifyOutcome out;
  out.symmetry = witness.kind;
  out.theory = validate_theory(table, seed);
  out.unitary = verify_unitary_properties(build_unitary(table), witness.kind == SymmetryKind::symmetric, tol);
  (void)group;

  if (family) {
    const bool has_closed_form =
        (family->name == Family::diagonal && family->dim == 2 && is_prime(family->param)) ||
        family->name == Family::jsym3;
    if (has_closed_form) {
      out.published_checked = true;
      out.errata_corrected = correct_errata;
      const ClosedFormTable ref = closed_form_table(*family, correct_errata);
      for (std::size_t i = 0; i < ref.entries.size(); ++i)
        for (std::size_t j = 0; j < ref.entries[i].size(); ++j) {
          const CycValue expect = CycValue::from_integer(table.mod, ref.entries[i][j]);
          if (table.entries[i][j] != expect) {
            out.published_ok = false;
            std::string note = "published table mismatch at (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + "): computed " +
                               cyc_to_string(table.entries[i][j], false) + ", published " +
                               std::to_string(ref.entries[i][j]);
            if (!correct_errata && i == 3 && j == 3 && family->name == Family::diagonal)
              note += " (known misprint in the published table; rerun with --correct-errata)";
            out.published_notes.push_back(std::move(note));
          }
        }
    }
  }
  return out;
}

namespace {

// ---- per-format emitters ---------------------------------------------------

void emit_orbits_text(std::ostream& out, const Workspace& w) {
  out << "group: n=" << w.group.mod << " d=" << w.group.dim << " order=" << w.group.order()
      << " symmetry=" << kind_name(w.witness.kind) << '\n';
  const auto dump_side = [&](const char* name, const OrbitPartition& p) {
    out << name << " (" << p.part_count() << " parts):\n";
    for (std::size_t i = 0; i < p.part_count(); ++i)
      out << "  " << i << "  size " << p.orbits[i].size << "  rep (" << rep_text(p.orbits[i].representative)
          << ")\n";
    out << "  census:";
    for (auto [size, count] : orbit_census(p)) out << ' ' << count << " x size " << size;
    out << '\n';
  };
  dump_side("superclasses", w.y);
  dump_side("supercharacters", w.x);
}

void emit_orbits_csv(std::ostream& out, const Workspace& w) {
  out << "action,index,size,rep\n";
  for (std::size_t i = 0; i < w.y.part_count(); ++i)
    out << "superclass," << i << ',' << w.y.orbits[i].size << ",\"" << rep_text(w.y.orbits[i].representative)
        << "\"\n";
  for (std::size_t i = 0; i < w.x.part_count(); ++i)
    out << "supercharacter," << i << ',' << w.x.orbits[i].size << ",\""
        << rep_text(w.x.orbits[i].representative) << "\"\n";
}

void emit_table_text(std::ostream& out, const Workspace& w, const SupercharTable& t) {
  out << "group: n=" << w.group.mod << " d=" << w.group.dim << " order=" << w.group.order()
      << " symmetry=" << kind_name(w.witness.kind) << '\n';
  out << "superclass sizes:";
  for (const auto& o : t.y_parts.orbits) out << ' ' << o.size;
  out << "\nsuperclass reps:";
  for (const auto& o : t.y_parts.orbits) out << " (" << rep_text(o.representative) << ")";
  out << "\ntable (exact, z = primitive root of unity of order " << t.mod << "):\n";
  for (std::size_t i = 0; i < t.rows(); ++i) {
    out << "  s" << (i + 1) << " |";
    for (std::size_t j = 0; j < t.cols(); ++j) out << ' ' << cyc_to_string(t.entries[i][j], false);
    out << '\n';
  }
}

void emit_table_csv(std::ostream& out, const SupercharTable& t) {
  out << "i,j,re,im,coeffs\n";
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const auto z = to_complex(t.entries[i][j]);
      out << i << ',' << j << ',' << double_text(z.real()) << ',' << double_text(z.imag()) << ",\"";
      const auto& c = t.entries[i][j].coeffs;
      for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << c[k];
      out << "\"\n";
    }
}

// Mirrors the published layout: header row of superclass sizes, one row per
// supercharacter.
void emit_table_latex(std::ostream& out, const SupercharTable& t) {
  out << "\\begin{tabular}{|c|";
  for (std::size_t j = 0; j < t.cols(); ++j) out << "c|";
  out << "}\\hline\n & ";
  for (std::size_t j = 0; j < t.cols(); ++j) out << "$Y_{" << (j + 1) << "}$" << (j + 1 < t.cols() ? " & " : " \\\\\n");
  out << " superclass size & ";
  for (std::size_t j = 0; j < t.cols(); ++j)
    out << t.y_parts.orbits[j].size << (j + 1 < t.cols() ? " & " : " \\\\ \\hline\n");
  for (std::size_t i = 0; i < t.rows(); ++i) {
    out << " $\\sigma_{" << (i + 1) << "}$ & ";
    for (std::size_t j = 0; j < t.cols(); ++j)
      out << '$' << cyc_to_string(t.entries[i][j], true) << '$' << (j + 1 < t.cols() ? " & " : " \\\\\n");
  }
  out << "\\hline\n\\end{tabular}\n";
}

void emit_unitary_text(std::ostream& out, const UnitaryMatrix& u) {
  out << "unitary matrix (" << u.size << " x " << u.size << "):\n";
  for (std::size_t i = 0; i < u.size; ++i) {
    out << " ";
    for (std::size_t j = 0; j < u.size; ++j) {
      char buf[64];
      const auto z = u.at(i, j);
      if (std::abs(z.imag()) < 1e-14)
        std::snprintf(buf, sizeof(buf), " %10.6f", z.real());
      else
        std::snprintf(buf, sizeof(buf), " %9.6f%+.6fi", z.real(), z.imag());
      out << buf;
    }
    out << '\n';
  }
}

void emit_unitary_csv(std::ostream& out, const UnitaryMatrix& u) {
  out << "i,j,re,im\n";
  for (std::size_t i = 0; i < u.size; ++i)
    for (std::size_t j = 0; j < u.size; ++j)
      out << i << ',' << j << ',' << double_text(u.at(i, j).real()) << ','
          << double_text(u.at(i, j).imag()) << '\n';
}

void emit_unitary_latex(std::ostream& out, const UnitaryMatrix& u) {
  out << "\\begin{bmatrix}\n";
  for (std::size_t i = 0; i < u.size; ++i) {
    for (std::size_t j = 0; j < u.size; ++j) {
      char buf[64];
      const auto z = u.at(i, j);
      if (std::abs(z.imag()) < 1e-14)
        std::snprintf(buf, sizeof(buf), "%.6f", z.real());
      else
        std::snprintf(buf, sizeof(buf), "%.6f%+.6fi", z.real(), z.imag());
      out << buf << (j + 1 < u.size ? " & " : "");
    }
    out << (i + 1 < u.size ? " \\\\\n" : "\n");
  }
  out << "\\end{bmatrix}\n";
}

void emit_verify_text(std::ostream& out, const Workspace& w, const VerifyOutcome& v) {
  const auto line = [&](const char* name, bool ok, const std::string& detail = "") {
    out << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) out << "  (" << detail << ")";
    out << '\n';
  };
  out << "group: n=" << w.group.mod << " d=" << w.group.dim << " order=" << w.group.order()
      << " symmetry=" << kind_name(w.witness.kind) << '\n';
  line("partition pair", v.theory.is_partition_pair);
  line("sizes match", v.theory.sizes_match);
  line("zero singleton", v.theory.zero_singleton);
  line("constancy", v.theory.constancy);
  line("orthogonality (exact)", v.theory.orthogonality);
  line("unitary", v.unitary.unitary_ok, "max dev " + double_text(v.unitary.unitary_dev));
  if (v.unitary.symmetric_required)
    line("U = U^t", v.unitary.symmetric_ok, "max dev " + double_text(v.unitary.symmetric_dev));
  else
    out << "info  U = U^t " << (v.unitary.symmetric_ok ? "holds" : "does not hold")
        << " (not required for this witness; max dev " << double_text(v.unitary.symmetric_dev) << ")\n";
  line("U^2 is a permutation", v.unitary.permutation_ok);
  line("U^4 = I", v.unitary.fourth_power_ok, "max dev " + double_text(v.unitary.fourth_power_dev));
  if (v.published_checked)
    line(v.errata_corrected ? "published table (errata corrected)" : "published table (literal)",
         v.published_ok);
  for (const auto& s : v.theory.notes) out << "note  " << s << '\n';
  for (const auto& s : v.published_notes) out << "note  " << s << '\n';
  out << (v.passed() ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << '\n';
}

void emit_verify_csv(std::ostream& out, const VerifyOutcome& v) {
  out << "check,pass\n";
  out << "is_partition_pair," << v.theory.is_partition_pair << '\n';
  out << "sizes_match," << v.theory.sizes_match << '\n';
  out << "zero_singleton," << v.theory.zero_singleton << '\n';
  out << "constancy," << v.theory.constancy << '\n';
  out << "orthogonality," << v.theory.orthogonality << '\n';
  out << "unitary," << v.unitary.unitary_ok << '\n';
  out << "unitary_symmetric," << v.unitary.symmetric_ok << '\n';
  out << "square_is_permutation," << v.unitary.permutation_ok << '\n';
  out << "fourth_power_identity," << v.unitary.fourth_power_ok << '\n';
  if (v.published_checked) out << "published_table," << v.published_ok << '\n';
  out << "passed," << v.passed() << '\n';
}

void emit_family_list(std::ostream& out, Format format) {
  if (format == Format::json) {
    ordered_json arr = ordered_json::array();
    for (auto f : all_families()) {
      ordered_json j = {{"name", std::string(family_name(f))},
                        {"default_d", default_dim(f)},
                        {"d_fixed", family_dim_is_fixed(f)}};
      if (f == Family::kloosterman || f == Family::quadratic_residues || f == Family::jsym3 ||
          f == Family::heilbronn)
        j["requires"] = "odd prime p";
      else
        j["requires"] = "n >= 2";
      if (f == Family::heilbronn) j["experimental"] = true;
      arr.push_back(std::move(j));
    }
    write_json(out, arr);
    return;
  }
  out << "built-in families (--family NAME, parameter via --p or --n):\n";
  for (auto f : all_families()) {
    out << "  " << family_name(f);
    out << "  d=" << default_dim(f) << (family_dim_is_fixed(f) ? " (fixed)" : " (default)");
    if (f == Family::kloosterman || f == Family::quadratic_residues || f == Family::jsym3 ||
        f == Family::heilbronn)
      out << "  requires odd prime p";
    if (f == Family::heilbronn) out << "  [experimental; group lives over Z_{p^2}]";
    out << '\n';
  }
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == Command::family_list) {
    emit_family_list(out, cfg.format);
    return 0;
  }

  Workspace w = build_workspace(cfg);

  if (cfg.command == Command::orbits) {
    switch (cfg.format) {
      case Format::json: {
        ordered_json doc = {{"meta", meta_json(w)},
                            {"superclasses", parts_json(w.y)},
                            {"supercharacters", parts_json(w.x)},
                            {"censuses",
                             {{"superclass", census_json(w.y)}, {"supercharacter", census_json(w.x)}}}};
        write_json(out, doc);
        break;
      }
      case Format::csv:
        emit_orbits_csv(out, w);
        break;
      default:
        emit_orbits_text(out, w);
        break;
    }
    return 0;
  }

  const SupercharTable table = build_table(w.x, w.y);

  if (cfg.command == Command::table) {
    switch (cfg.format) {
      case Format::json: {
        ordered_json doc = {{"meta", meta_json(w)},
                            {"superclasses", parts_json(w.y)},
                            {"supercharacters", parts_json(w.x)},
                            {"table", table_json(table)}};
        write_json(out, doc);
        break;
      }
      case Format::csv:
        emit_table_csv(out, table);
        break;
      case Format::latex:
        emit_table_latex(out, table);
        break;
      case Format::text:
        emit_table_text(out, w, table);
        break;
    }
    return 0;
  }

  if (cfg.command == Command::unitary) {
    const UnitaryMatrix u = build_unitary(table);
    switch (cfg.format) {
      case Format::json: {
        ordered_json doc = {{"meta", meta_json(w)},
                            {"superclasses", parts_json(w.y)},
                            {"supercharacters", parts_json(w.x)},
                            {"unitary", unitary_json(u)}};
        write_json(out, doc);
        break;
      }
      case Format::csv:
        emit_unitary_csv(out, u);
        break;
      case Format::latex:
        emit_unitary_latex(out, u);
        break;
      case Format::text:
        emit_unitary_text(out, u);
        break;
    }
    return 0;
  }

  // verify
  const VerifyOutcome v =
      run_verification(w.group, w.witness, table, cfg.tol, cfg.seed, cfg.family, cfg.correct_errata);
  switch (cfg.format) {
    case Format::json: {
      ordered_json doc = {{"meta", meta_json(w)},
                          {"superclasses", parts_json(w.y)},
                          {"supercharacters", parts_json(w.x)},
                          {"checks", checks_json(v)}};
      write_json(out, doc);
      break;
    }
    case Format::csv:
      emit_verify_csv(out, v);
      break;
    default:
      emit_verify_text(out, w, v);
      break;
  }
  return v.passed() ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.tol <= 0) throw BadParams("tolerance must be positive");
    if (cfg.out_path) {
      std::ofstream file(*cfg.out_path);
      if (!file) throw BadParams("cannot open output file '" + *cfg.out_path + "'");
      return dispatch(cfg, file);
    }
    return dispatch(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace superchar
