// latnull: validate lattice files, run the existence/uniqueness analysis for
// idempotent nullnorms, materialize the explicit constructions, verify
// externally supplied tables, and cross-check everything against the
// brute-force enumeration oracle.
//
// Exit codes: 0 success (or existence), 1 definite negative result (not a
// lattice, axioms fail, nothing exists, discrepancy found), 2 usage or input
// error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latnull/axioms.hpp"
#include "latnull/characterization.hpp"
#include "latnull/constructions.hpp"
#include "latnull/io.hpp"
#include "latnull/random_lattice.hpp"

namespace {

using namespace latnull;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleError:
    case ErrorKind::NotALattice:
    case ErrorKind::BadBounds:
    case ErrorKind::RedundantCover:
    case ErrorKind::PreconditionFailed:
    case ErrorKind::GenerationExhausted:
      return 1;
    default:
      return 2;
  }
}

struct Loaded {
  LatticeDocument doc;
  Lattice lattice;
};

Loaded load_lattice(const std::string& path) {
  LatticeDocument doc = read_lattice_file(path);
  Lattice lattice = Lattice::build_from_covers(doc.spec);
  return {std::move(doc), std::move(lattice)};
}

ZeroPoint resolve_zero(const Loaded& in, const std::string& override_label) {
  if (!override_label.empty()) return ZeroPoint(in.lattice, override_label);
  if (in.doc.zero) return ZeroPoint(in.lattice, *in.doc.zero);
  throw Error(ErrorKind::BadZero,
              "no zero element designated (add a 'zero' directive or pass "
              "--zero)");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << content;
}

std::string label_set(const Lattice& L, const std::vector<ElementId>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ", ";
    out += L.label(ids[i]);
  }
  out += "}";
  return out;
}

const char* kConditionNames[4] = {"(i)  ", "(ii) ", "(iii)", "(iv) "};

std::string conditions_held(const ExistenceVerdict& verdict) {
  static const char* roman[4] = {"(i)", "(ii)", "(iii)", "(iv)"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (!verdict.conditions[i].holds) continue;
    if (!out.empty()) out += ",";
    out += roman[i];
  }
  return out;
}

void print_conditions(std::string& out, const ExistenceVerdict& verdict) {
  for (int i = 0; i < 4; ++i) {
    const auto& c = verdict.conditions[i];
    out += std::string("  ") + kConditionNames[i] + " " +
           (c.holds ? "yes  " : "no   ") + c.detail + "\n";
  }
}

std::string witness_tuple(const AxiomReport& report) {
  std::string out = "(";
  for (std::size_t i = 0; i < report.witness.size(); ++i) {
    if (i > 0) out += ",";
    out += report.witness[i];
  }
  out += ")";
  return out;
}

void flush_out(const std::string& out) {
  std::fwrite(out.data(), 1, out.size(), stdout);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

SearchSpace parse_search_space(const std::string& text) {
  if (text == "lemma") return SearchSpace::LemmaRestricted;
  if (text == "full") return SearchSpace::Full;
  throw Error(ErrorKind::ParseError,
              "--search-space must be 'lemma' or 'full', got '" + text + "'");
}

int cmd_validate(const std::string& path) {
  LatticeDocument doc = read_lattice_file(path);
  std::string out;
  try {
    Lattice L = Lattice::build_from_covers(doc.spec);
    out += "OK: '" + doc.name + "' is a bounded lattice with " +
           std::to_string(L.size()) + " elements (bottom " +
           L.label(L.bottom()) + ", top " + L.label(L.top()) + ")\n";
    out += std::string("distributive: ") +
           (L.is_distributive() ? "yes" : "no") + "\n";
    if (doc.zero) {
      ZeroPoint zero(L, *doc.zero);
      out += "zero: " + *doc.zero +
             ", I_a = " + label_set(L, L.incomparables(zero)) + "\n";
    }
    flush_out(out);
    return 0;
  } catch (const Error& e) {
    if (exit_code_for(e.kind()) != 1) throw;
    out += std::string("INVALID (") + to_string(e.kind()) + "): " + e.what() +
           "\n";
    flush_out(out);
    return 1;
  }
}

int cmd_analyze(const std::string& path, const std::string& zero_override) {
  Loaded in = load_lattice(path);
  const Lattice& L = in.lattice;
  std::string out;
  out += "lattice " + in.doc.name + ": " + std::to_string(L.size()) +
         " elements\n";
  out += "bottom = " + L.label(L.bottom()) + ", top = " + L.label(L.top()) +
         "\n";
  out += std::string("distributive: ") + (L.is_distributive() ? "yes" : "no") +
         "\n";
  if (zero_override.empty() && !in.doc.zero) {
    out += "zero: (none designated)\n";
    flush_out(out);
    return 0;
  }
  ZeroPoint zero = resolve_zero(in, zero_override);
  auto inc = L.incomparables(zero);
  out += "zero: " + L.label(zero.id()) + "\n";
  out += "I_a = " + label_set(L, inc) + " (" + std::to_string(inc.size()) +
         " elements)\n";
  if (inc.size() != 2) {
    out += "the existence test requires |I_a| = 2; skipping conditions\n";
    flush_out(out);
    return 0;
  }
  ExistenceVerdict verdict = decide_existence(L, zero);
  out += "conditions (p = " + verdict.p_label + ", q = " + verdict.q_label +
         "):\n";
  print_conditions(out, verdict);
  auto variants = applicable_variants(L, zero);
  out += "applicable variants: ";
  if (variants.empty()) {
    out += "(none)";
  } else {
    for (std::size_t i = 0; i < variants.size(); ++i) {
      if (i > 0) out += ", ";
      out += to_string(variants[i]);
    }
  }
  out += "\n";
  flush_out(out);
  return 0;
}

int cmd_decide(const std::string& path, const std::string& zero_override) {
  Loaded in = load_lattice(path);
  ZeroPoint zero = resolve_zero(in, zero_override);
  ExistenceVerdict verdict = decide_existence(in.lattice, zero);
  std::string out;
  if (verdict.exists) {
    out += "EXISTS via " + conditions_held(verdict) + "\n";
  } else {
    out += "NOT EXISTS\n";
  }
  out += "zero: " + in.lattice.label(zero.id()) + ", p = " + verdict.p_label +
         ", q = " + verdict.q_label + "\n";
  print_conditions(out, verdict);
  flush_out(out);
  return verdict.exists ? 0 : 1;
}

int cmd_classify(const std::string& path, const std::string& zero_override) {
  Loaded in = load_lattice(path);
  ZeroPoint zero = resolve_zero(in, zero_override);
  ExistenceVerdict verdict = decide_existence(in.lattice, zero);
  UniquenessClass cls = classify_uniqueness(in.lattice, zero);
  std::string out;
  out += "zero: " + in.lattice.label(zero.id()) + ", p = " + verdict.p_label +
         ", q = " + verdict.q_label + "\n";
  if (verdict.exists) {
    out += "existence: yes, via " + conditions_held(verdict) + "\n";
  } else {
    out += "existence: no\n";
  }
  out += "classification: ";
  switch (cls.kind) {
    case UniquenessKind::UniqueV3:
      out += "unique_v3 — exactly one idempotent nullnorm, the V3 table";
      break;
    case UniquenessKind::UniqueV4:
      out += "unique_v4 — exactly one idempotent nullnorm, the V4 table";
      break;
    case UniquenessKind::ExactlyTwo:
      out += "exactly_two — exactly two idempotent nullnorms, V3 and V4";
      break;
    case UniquenessKind::Other:
      out += "other — no uniqueness certificate applies";
      break;
  }
  out += "\n";
  if (cls.certified_count) {
    out += "certified count: " + std::to_string(*cls.certified_count) + "\n";
  }
  flush_out(out);
  return verdict.exists ? 0 : 1;
}

int cmd_construct(const std::string& path, const std::string& variant_text,
                  const std::string& zero_override,
                  const std::string& out_path) {
  Loaded in = load_lattice(path);
  ZeroPoint zero = resolve_zero(in, zero_override);
  auto variant = variant_from_string(variant_text);
  if (!variant) {
    throw Error(ErrorKind::ParseError,
                "unknown variant '" + variant_text + "' (use v1..v6)");
  }
  OpTable table = construct_variant(in.lattice, zero, *variant);
  std::string csv = emit_op_table_csv(table);
  if (out_path.empty()) {
    flush_out(csv);
  } else {
    write_text_file(out_path, csv);
    flush_out(std::string("constructed ") + to_string(*variant) + " on '" +
              in.doc.name + "', wrote " + out_path + "\n");
  }
  return 0;
}

int cmd_verify(const std::string& table_path, const std::string& lattice_path,
               const std::string& zero_override) {
  Loaded in = load_lattice(lattice_path);
  ZeroPoint zero = resolve_zero(in, zero_override);
  OpTable table = parse_op_table_csv(read_text_file(table_path), in.lattice);
  NullnormCheck check = is_idempotent_nullnorm(table, zero);
  std::string out;
  int failed = 0;
  for (const AxiomReport& report : check.reports) {
    out += std::string(to_string(report.axiom)) + ": ";
    if (report.passed) {
      out += "PASS\n";
    } else {
      ++failed;
      out += "FAIL at " + witness_tuple(report) + ": " + report.detail + "\n";
    }
  }
  if (check.passed) {
    out += "RESULT: idempotent nullnorm with zero element " +
           in.lattice.label(zero.id()) + "\n";
  } else {
    out += "RESULT: not an idempotent nullnorm (" + std::to_string(failed) +
           " of 5 checks failed)\n";
  }
  flush_out(out);
  return check.passed ? 0 : 1;
}

int cmd_enumerate(const std::string& path, const std::string& zero_override,
                  const std::string& space_text, int jobs,
                  const std::string& out_dir) {
  Loaded in = load_lattice(path);
  ZeroPoint zero = resolve_zero(in, zero_override);
  SearchSpace space = parse_search_space(space_text);
  auto tables = enumerate_idempotent_nullnorms(in.lattice, zero, space, jobs);
  std::string out;
  out += "found " + std::to_string(tables.size()) +
         " idempotent nullnorm(s) (search space: " + space_text + ")\n";
  if (out_dir.empty()) {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      out += "\n# table " + std::to_string(i + 1) + "\n";
      out += emit_op_table_csv(tables[i]);
    }
  } else {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < tables.size(); ++i) {
      std::string file = out_dir + "/" + in.doc.name + "_nullnorm_" +
                         std::to_string(i + 1) + ".csv";
      write_text_file(file, emit_op_table_csv(tables[i]));
      out += "wrote " + file + "\n";
    }
  }
  flush_out(out);
  return tables.empty() ? 1 : 0;
}

int cmd_export_dot(const std::string& path, const std::string& out_path) {
  Loaded in = load_lattice(path);
  std::string dot = emit_dot(in.lattice, in.doc.name);
  if (out_path.empty()) {
    flush_out(dot);
  } else {
    write_text_file(out_path, dot);
    flush_out("wrote " + out_path + "\n");
  }
  return 0;
}

int cmd_gen(std::uint64_t seed, int size, const std::string& out_path) {
  if (size < 2) {
    throw Error(ErrorKind::ParseError, "--size must be at least 2");
  }
  Lattice L = random_bounded_lattice(seed, size);
  std::string name =
      "rand_s" + std::to_string(seed) + "_n" + std::to_string(size);
  std::string text = emit_lattice_file(document_from_lattice(L, name));
  if (out_path.empty()) {
    flush_out(text);
  } else {
    write_text_file(out_path, text);
    flush_out("wrote " + out_path + " (" + std::to_string(size) +
              " elements, seed " + std::to_string(seed) + ")\n");
  }
  return 0;
}

int cmd_fuzz(std::uint64_t seed, int count, int max_size,
             const std::string& space_text) {
  if (max_size < 5) {
    throw Error(ErrorKind::ParseError,
                "--max-size must be at least 5 (|I_a| = 2 needs 5 elements)");
  }
  if (count < 1) {
    throw Error(ErrorKind::ParseError, "--count must be positive");
  }
  SearchSpace space = parse_search_space(space_text);
  std::string out;
  int instances = 0;
  std::uint64_t round = 0;
  while (instances < count) {
    const std::uint64_t lattice_seed = splitmix64(seed + round);
    const int n = 5 + static_cast<int>(splitmix64(lattice_seed) %
                                       static_cast<std::uint64_t>(max_size - 4));
    ++round;
    std::optional<Lattice> generated;
    try {
      generated = random_bounded_lattice(lattice_seed, n);
    } catch (const Error&) {
      continue;
    }
    const Lattice& L = *generated;
    for (ElementId x = 0; x < L.size() && instances < count; ++x) {
      if (x == L.bottom() || x == L.top()) continue;
      ZeroPoint zero(L, x);
      if (L.incomparables(zero).size() != 2) continue;
      ++instances;
      ExistenceVerdict verdict = decide_existence(L, zero);
      auto tables = enumerate_idempotent_nullnorms(L, zero, space);
      if (verdict.exists == !tables.empty()) continue;
      out += "DISCREPANCY at instance " + std::to_string(instances) +
             " (lattice seed " + std::to_string(lattice_seed) + ", zero " +
             L.label(x) + ")\n";
      out += verdict.exists
                 ? "decide_existence: EXISTS via " + conditions_held(verdict) +
                       "\n"
                 : std::string("decide_existence: NOT EXISTS\n");
      out += "oracle count: " + std::to_string(tables.size()) + "\n";
      out += "--- lattice file ---\n";
      std::string name = "fuzz_s" + std::to_string(lattice_seed) + "_n" +
                         std::to_string(n);
      out += emit_lattice_file(
          document_from_lattice(L, name, L.label(x)));
      out += "--- oracle tables ---\n";
      for (const auto& t : tables) out += emit_op_table_csv(t) + "\n";
      flush_out(out);
      return 1;
    }
  }
  out += "fuzz: checked " + std::to_string(instances) +
         " instances with |I_a| = 2 (seed " + std::to_string(seed) +
         ", sizes 5.." + std::to_string(max_size) +
         ", search space: " + space_text + ")\n";
  out += "result: no discrepancies\n";
  flush_out(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "latnull — finite bounded lattices and idempotent nullnorms:\n"
      "validation, existence decision, explicit constructions, axiom\n"
      "verification, and a brute-force enumeration oracle"};
  app.require_subcommand(1);

  std::string file, table_file, lattice_file, out_path, zero_label;
  std::string variant_text, space_text = "lemma";
  int jobs = 1, size = 6, count = 100, max_size = 9;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "check a .lat file");
  validate->add_option("file", file, "lattice file")->required();

  auto* analyze = app.add_subcommand(
      "analyze", "print order facts, I_a, the four conditions, variants");
  analyze->add_option("file", file)->required();
  analyze->add_option("--zero", zero_label, "override the zero element");

  auto* decide = app.add_subcommand(
      "decide", "decide existence of an idempotent nullnorm (|I_a| = 2)");
  decide->add_option("file", file)->required();
  decide->add_option("--zero", zero_label);

  auto* classify = app.add_subcommand(
      "classify", "uniqueness classification for |I_a| = 2");
  classify->add_option("file", file)->required();
  classify->add_option("--zero", zero_label);

  auto* construct =
      app.add_subcommand("construct", "materialize one of V1..V6 as CSV");
  construct->add_option("file", file)->required();
  construct->add_option("--variant", variant_text, "v1..v6")->required();
  construct->add_option("--zero", zero_label);
  construct->add_option("--out", out_path, "write CSV here");

  auto* verify = app.add_subcommand(
      "verify", "run the five axiom checks on an external table CSV");
  verify->add_option("table", table_file, "operation table CSV")->required();
  verify->add_option("--lattice", lattice_file, "lattice file")->required();
  verify->add_option("--zero", zero_label);

  auto* enumerate = app.add_subcommand(
      "enumerate", "brute-force all idempotent nullnorms");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--zero", zero_label);
  enumerate->add_option("--search-space", space_text, "lemma|full");
  enumerate->add_option("--jobs", jobs, "worker threads");
  enumerate->add_option("--out", out_path, "write one CSV per table here");

  auto* export_dot =
      app.add_subcommand("export-dot", "emit the Hasse diagram as DOT");
  export_dot->add_option("file", file)->required();
  export_dot->add_option("--out", out_path);

  auto* gen = app.add_subcommand("gen", "write a random lattice file");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--size", size, "element count")->required();
  gen->add_option("--out", out_path);

  auto* fuzz = app.add_subcommand(
      "fuzz", "random lattices: decide_existence vs the oracle");
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--count", count, "instances with |I_a| = 2 to check");
  fuzz->add_option("--max-size", max_size);
  fuzz->add_option("--search-space", space_text, "lemma|full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (analyze->parsed()) return cmd_analyze(file, zero_label);
    if (decide->parsed()) return cmd_decide(file, zero_label);
    if (classify->parsed()) return cmd_classify(file, zero_label);
    if (construct->parsed()) {
      return cmd_construct(file, variant_text, zero_label, out_path);
    }
    if (verify->parsed()) {
      return cmd_verify(table_file, lattice_file, zero_label);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(file, zero_label, space_text, jobs, out_path);
    }
    if (export_dot->parsed()) return cmd_export_dot(file, out_path);
    if (gen->parsed()) return cmd_gen(seed, size, out_path);
    if (fuzz->parsed()) return cmd_fuzz(seed, count, max_size, space_text);
  } catch (const latnull::Error& e) {
    std::fprintf(stderr, "error: %s: %s\n", to_string(e.kind()), e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
