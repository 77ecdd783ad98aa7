#include "latnull/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace latnull {

namespace {

bool valid_label(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> split_csv_row(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      break;
    }
    out.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

}  // namespace

LatticeDocument parse_lattice_file(std::string_view text) {
  LatticeDocument doc;
  bool have_name = false, have_elements = false;
  bool have_bottom = false, have_top = false, have_zero = false;
  int bottom_line = 0, top_line = 0, zero_line = 0;
  std::string bottom_label, top_label, zero_label;
  std::vector<std::pair<std::pair<std::string, std::string>, int>> covers;

  int lineno = 0;
  for (std::string_view raw : split_lines(text)) {
    ++lineno;
    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0];

    if (directive == "lattice") {
      if (tokens.size() != 2) parse_fail(lineno, "'lattice' takes one name");
      if (have_name) parse_fail(lineno, "duplicate 'lattice' directive");
      if (!valid_label(tokens[1])) {
        parse_fail(lineno, "invalid lattice name '" + tokens[1] + "'");
      }
      doc.name = tokens[1];
      have_name = true;
    } else if (directive == "elements") {
      if (tokens.size() < 2) {
        parse_fail(lineno, "'elements' needs at least one label");
      }
      if (have_elements) parse_fail(lineno, "duplicate 'elements' directive");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!valid_label(tokens[i])) {
          parse_fail(lineno, "invalid element label '" + tokens[i] + "'");
        }
        if (std::find(doc.spec.names.begin(), doc.spec.names.end(),
                      tokens[i]) != doc.spec.names.end()) {
          throw Error(ErrorKind::DuplicateElement,
                      "line " + std::to_string(lineno) +
                          ": duplicate element '" + tokens[i] + "'");
        }
        doc.spec.names.push_back(tokens[i]);
      }
      have_elements = true;
    } else if (directive == "bottom" || directive == "top" ||
               directive == "zero") {
      if (tokens.size() != 2) {
        parse_fail(lineno, "'" + directive + "' takes one label");
      }
      bool& have = directive == "bottom"
                       ? have_bottom
                       : (directive == "top" ? have_top : have_zero);
      if (have) parse_fail(lineno, "duplicate '" + directive + "' directive");
      have = true;
      if (directive == "bottom") {
        bottom_label = tokens[1];
        bottom_line = lineno;
      } else if (directive == "top") {
        top_label = tokens[1];
        top_line = lineno;
      } else {
        zero_label = tokens[1];
        zero_line = lineno;
      }
    } else if (directive == "cover") {
      if (tokens.size() != 3) {
        parse_fail(lineno, "'cover' takes two labels (lower upper)");
      }
      if (tokens[1] == tokens[2]) {
        parse_fail(lineno, "self-cover '" + tokens[1] + "'");
      }
      for (const auto& [pair, at] : covers) {
        if (pair.first == tokens[1] && pair.second == tokens[2]) {
          parse_fail(lineno, "duplicate cover '" + tokens[1] + "' '" +
                                 tokens[2] + "' (first at line " +
                                 std::to_string(at) + ")");
        }
      }
      covers.push_back({{tokens[1], tokens[2]}, lineno});
    } else {
      parse_fail(lineno, "unknown directive '" + directive + "'");
    }
  }

  if (!have_name) parse_fail(lineno, "missing 'lattice' directive");
  if (!have_elements) parse_fail(lineno, "missing 'elements' directive");
  if (!have_bottom) parse_fail(lineno, "missing 'bottom' directive");
  if (!have_top) parse_fail(lineno, "missing 'top' directive");

  auto declared = [&](const std::string& label) {
    return std::find(doc.spec.names.begin(), doc.spec.names.end(), label) !=
           doc.spec.names.end();
  };
  auto require_declared = [&](const std::string& label, int line,
                              const char* context) {
    if (!declared(label)) {
      throw Error(ErrorKind::UnknownLabel,
                  "line " + std::to_string(line) + ": unknown label '" +
                      label + "' in " + context);
    }
  };
  require_declared(bottom_label, bottom_line, "'bottom'");
  require_declared(top_label, top_line, "'top'");
  doc.spec.bottom = bottom_label;
  doc.spec.top = top_label;
  for (const auto& [pair, line] : covers) {
    require_declared(pair.first, line, "'cover'");
    require_declared(pair.second, line, "'cover'");
    doc.spec.covers.push_back(pair);
  }
  if (have_zero) {
    require_declared(zero_label, zero_line, "'zero'");
    if (zero_label == bottom_label || zero_label == top_label) {
      throw Error(ErrorKind::BadZero,
                  "line " + std::to_string(zero_line) + ": zero element '" +
                      zero_label + "' must differ from bottom and top");
    }
    doc.zero = zero_label;
  }
  return doc;
}

LatticeDocument read_lattice_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_lattice_file(buffer.str());
}

std::string emit_lattice_file(const LatticeDocument& doc) {
  std::string out;
  out += "lattice " + doc.name + "\n";
  out += "elements";
  for (const std::string& name : doc.spec.names) out += " " + name;
  out += "\n";
  out += "bottom " + doc.spec.bottom + "\n";
  out += "top " + doc.spec.top + "\n";
  if (doc.zero) out += "zero " + *doc.zero + "\n";
  for (const auto& [lo, hi] : doc.spec.covers) {
    out += "cover " + lo + " " + hi + "\n";
  }
  return out;
}

LatticeDocument document_from_lattice(const Lattice& lattice, std::string name,
                                      std::optional<std::string> zero) {
  LatticeDocument doc;
  doc.name = std::move(name);
  for (int i = 0; i < lattice.size(); ++i) {
    doc.spec.names.push_back(lattice.label(i));
  }
  doc.spec.bottom = lattice.label(lattice.bottom());
  doc.spec.top = lattice.label(lattice.top());
  for (const auto& [lo, hi] : lattice.cover_pairs()) {
    doc.spec.covers.emplace_back(lattice.label(lo), lattice.label(hi));
  }
  doc.zero = std::move(zero);
  return doc;
}

std::string emit_dot(const Lattice& lattice, std::string_view name) {
  std::string out;
  out += "digraph \"";
  out += name;
  out += "\" {\n  rankdir=BT;\n";
  for (int i = 0; i < lattice.size(); ++i) {
    out += "  \"" + lattice.label(i) + "\";\n";
  }
  for (const auto& [lo, hi] : lattice.cover_pairs()) {
    out += "  \"" + lattice.label(lo) + "\" -> \"" + lattice.label(hi) +
           "\";\n";
  }
  out += "}\n";
  return out;
}

namespace {

template <typename CellText>
std::string emit_csv(const Lattice& L, CellText&& cell_text) {
  std::string out;
  for (int y = 0; y < L.size(); ++y) {
    out += ",";
    out += L.label(y);
  }
  out += "\n";
  for (int x = 0; x < L.size(); ++x) {
    out += L.label(x);
    for (int y = 0; y < L.size(); ++y) {
      out += ",";
      out += cell_text(x, y);
    }
    out += "\n";
  }
  return out;
}

}  // namespace

std::string emit_op_table_csv(const OpTable& table) {
  const Lattice& L = table.lattice();
  return emit_csv(L, [&](int x, int y) { return L.label(table.at(x, y)); });
}

std::string emit_op_table_csv(const PartialOpTable& table) {
  const Lattice& L = table.lattice();
  return emit_csv(L, [&](int x, int y) -> std::string {
    auto v = table.get(x, y);
    return v ? L.label(*v) : std::string("?");
  });
}

OpTable parse_op_table_csv(std::string_view text, const Lattice& lattice) {
  const int n = lattice.size();
  std::vector<std::string_view> lines = split_lines(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorKind::ParseError,
                "expected " + std::to_string(n + 1) + " CSV rows, found " +
                    std::to_string(lines.size()));
  }

  const auto header = split_csv_row(lines[0]);
  if (header.size() != static_cast<std::size_t>(n) + 1 || !header[0].empty()) {
    throw Error(ErrorKind::ParseError,
                "CSV header must be an empty corner followed by " +
                    std::to_string(n) + " element labels");
  }
  std::vector<ElementId> col_ids;
  std::vector<char> seen_col(n, 0);
  for (int c = 0; c < n; ++c) {
    ElementId id = lattice.id_of(header[c + 1]);
    if (seen_col[id]) {
      throw Error(ErrorKind::ParseError,
                  "duplicate column '" + header[c + 1] + "' in CSV header");
    }
    seen_col[id] = 1;
    col_ids.push_back(id);
  }

  OpTable table(lattice);
  std::vector<char> seen_row(n, 0);
  for (int r = 0; r < n; ++r) {
    const auto row = split_csv_row(lines[r + 1]);
    if (row.size() != static_cast<std::size_t>(n) + 1) {
      throw Error(ErrorKind::ParseError,
                  "CSV row " + std::to_string(r + 2) + " has " +
                      std::to_string(row.size()) + " fields, expected " +
                      std::to_string(n + 1));
    }
    ElementId x = lattice.id_of(row[0]);
    if (seen_row[x]) {
      throw Error(ErrorKind::ParseError,
                  "duplicate row '" + row[0] + "' in CSV");
    }
    seen_row[x] = 1;
    for (int c = 0; c < n; ++c) {
      if (row[c + 1] == "?") {
        throw Error(ErrorKind::ParseError,
                    "undetermined cell (" + row[0] + "," +
                        lattice.label(col_ids[c]) +
                        ") is not allowed in a total table");
      }
      table.set(x, col_ids[c], lattice.id_of(row[c + 1]));
    }
  }
  return table;
}

}  // namespace latnull
