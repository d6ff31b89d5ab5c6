#include "superchar/group_file.hpp"

#include <charconv>
#include <sstream>

#include "superchar/errors.hpp"

namespace superchar {

namespace {

struct Line {
  int number = 0;
  std::string text;
  bool blank() const {
    return text.find_first_not_of(" \t\r") == std::string::npos;
  }
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string s;
  int num = 0;
  while (std::getline(in, s)) lines.push_back(Line{++num, std::move(s)});
  return lines;
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

std::int64_t parse_int(const std::string& tok, int line) {
  std::int64_t v = 0;
  const auto* begin = tok.data();
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

std::int64_t parse_header(const std::vector<Line>& lines, std::size_t& pos, const std::string& key) {
  while (pos < lines.size() && lines[pos].blank()) ++pos;
  if (pos >= lines.size())
    throw ParseError(lines.empty() ? 1 : lines.back().number, "missing '" + key + "' header");
  const auto toks = tokens(lines[pos].text);
  if (toks.size() != 2 || toks[0] != key)
    throw ParseError(lines[pos].number, "expected header '" + key + " <int>'");
  const std::int64_t v = parse_int(toks[1], lines[pos].number);
  ++pos;
  return v;
}

// Reads d consecutive non-blank rows of exactly d integers each.
ModMatrix parse_block(const std::vector<Line>& lines, std::size_t& pos, std::int64_t n, int d) {
  std::vector<std::int64_t> entries;
  entries.reserve(static_cast<std::size_t>(d) * d);
  for (int row = 0; row < d; ++row) {
    if (pos >= lines.size())
      throw ParseError(lines.back().number, "matrix block ends after " + std::to_string(row) + " of " +
                                                std::to_string(d) + " rows");
    const Line& line = lines[pos];
    if (line.blank())
      throw ParseError(line.number, "blank line inside a matrix block");
    const auto toks = tokens(line.text);
    if (static_cast<int>(toks.size()) != d)
      throw ParseError(line.number, "expected " + std::to_string(d) + " entries, got " +
                                        std::to_string(toks.size()));
    for (const auto& t : toks) entries.push_back(parse_int(t, line.number));
    ++pos;
  }
  return ModMatrix(n, d, std::move(entries));
}

}  // namespace

GroupFileData parse_group_file(std::istream& in) {
  const auto lines = read_lines(in);
  std::size_t pos = 0;

  GroupFileData data;
  data.n = parse_header(lines, pos, "n");
  if (data.n < 2) throw ParseError(lines[pos - 1].number, "modulus must be >= 2");
  const std::int64_t d = parse_header(lines, pos, "d");
  if (d < 1 || d > 64) throw ParseError(lines[pos - 1].number, "dimension out of range");
  data.dim = static_cast<int>(d);

  bool saw_j = false;
  while (true) {
    while (pos < lines.size() && lines[pos].blank()) ++pos;
    if (pos >= lines.size()) break;
    if (saw_j) throw ParseError(lines[pos].number, "content after the J block");
    const auto toks = tokens(lines[pos].text);
    if (toks.size() == 1 && toks[0] == "J:") {
      ++pos;
      while (pos < lines.size() && lines[pos].blank()) ++pos;
      data.j = parse_block(lines, pos, data.n, data.dim);
      saw_j = true;
      continue;
    }
    data.generators.push_back(parse_block(lines, pos, data.n, data.dim));
  }

  if (data.generators.empty())
    throw ParseError(lines.empty() ? 1 : lines.back().number, "at least one generator block is required");
  return data;
}

GroupFileData parse_group_file_text(const std::string& text) {
  std::istringstream in(text);
  return parse_group_file(in);
}

}  // namespace superchar
