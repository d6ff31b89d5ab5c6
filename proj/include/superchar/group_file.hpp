#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "superchar/residue.hpp"

namespace superchar {

// Plain-text group description:
//
//   n 5
//   d 2
//
//   2 0
//   0 3
//
//   J:
//   0 1
//   1 0
//
// Header lines first, then blank-line-separated d x d generator blocks, then
// an optional J block introduced by a line "J:". Entries are arbitrary
// integers and are reduced mod n. Errors are ParseError carrying the
// offending 1-based line number.
struct GroupFileData {
  std::int64_t n = 0;
  int dim = 0;
  std::vector<ModMatrix> generators;
  std::optional<ModMatrix> j;
};

GroupFileData parse_group_file(std::istream& in);
GroupFileData parse_group_file_text(const std::string& text);

}  // namespace superchar
