#pragma once

// JSON and text serialization of set functions and ray catalogues.
//
// Document format:
//   {"variables": ["a", "b"], "values": {"": "0", "a": "0", "b": "0", "a,b": "1"}}
// Subset keys are comma-joined labels (any order; canonicalized on read),
// values are rational strings "p" or "p/q". Every subset must appear exactly once.

#include <stdexcept>
#include <string>

#include "supermod/enumerate.hpp"
#include "supermod/set_function.hpp"

namespace supermod::io {

/// Malformed or inconsistent input document.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SetFunction parse_set_function(const std::string& text);
/// Pretty-printed document, keys in subset-mask order, trailing newline.
std::string serialize(const SetFunction& m);

SetFunction read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// {"n": k, "generators": [document values...], "orbits": [...]} with deterministic bytes.
std::string catalogue_json(const RayCatalogue& catalogue);
/// One generator per line, values in subset-mask order, tab-separated.
std::string catalogue_table(const RayCatalogue& catalogue);
/// Orbit sizes and representatives, one orbit per line.
std::string orbit_summary(const RayCatalogue& catalogue);

}  // namespace supermod::io
