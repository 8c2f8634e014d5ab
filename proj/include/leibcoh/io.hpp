#pragma once

#include "leibcoh/algebra.hpp"

#include <json.hpp>

#include <string>

namespace leibcoh {

// File format (all indices 1-based, coefficients exact rational strings):
//
//   {
//     "dim": 3,
//     "name": "n3",                      // optional, display only
//     "brackets": [
//       { "i": 2, "j": 3, "terms": [ { "k": 1, "c": "1" } ] },
//       { "i": 3, "j": 2, "terms": [ { "k": 1, "c": "-1" } ] }
//     ]
//   }
//
// Omitted (i,j) pairs are zero brackets. A duplicated (i,j) entry is an
// error, as is any coefficient not of the form "p" or "p/q".
AlgebraSpec algebra_from_json(const nlohmann::json& j);

// Canonical emission: brackets sorted by (i,j), terms sorted by k, zero
// terms dropped, name included only when nonempty.
nlohmann::json algebra_to_json(const AlgebraSpec& a);

AlgebraSpec load_algebra_file(const std::string& path);

// Canonical byte serialization of the mathematical content (dim and
// structure constants; the display name is excluded so a builtin and its
// shipped data file fingerprint identically).
std::string canonical_serialization(const AlgebraSpec& a);

// 16 lowercase hex digits: FNV-1a 64-bit over canonical_serialization.
std::string fingerprint_hex(const AlgebraSpec& a);

} // namespace leibcoh
