#pragma once

// JSON bundle files:
//
//   {
//     "curve": {"length": "5/2", "charts": 3},
//     "rank": 2,
//     "transitions": [
//       {"overlap": 1, "perm": [2, 1],
//        "entries": [{"slope": -1, "value_at_ref": "0"}, {"slope": 0, "value_at_ref": "1/2"}]}
//     ]
//   }
//
// perm lists the 1-based column of each row's finite entry; entry i is that
// entry as an affine function whose value at the left end of the overlap is
// value_at_ref. Omitted overlaps carry the identity.

#include "tropbundle/bundle.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tropbundle {

/// Malformed or schema-violating bundle file. what() names the location
/// (byte offset for syntax errors, JSON pointer for schema errors).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Bundle parse_bundle(std::string_view text);
Bundle read_bundle_file(const std::filesystem::path& path);

/// Serializes a bundle whose transitions are all monomial; identity
/// transitions are omitted. Output ends with a newline.
std::string format_bundle(const Bundle& f);

}  // namespace tropbundle
