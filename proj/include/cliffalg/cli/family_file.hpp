#pragma once

#include <string>

#include "cliffalg/clifford/quadric_family.hpp"

namespace cliffalg::cli {

// YAML document with fields n, k, an optional label and matrices: a list of
// k row-major n x n arrays whose entries are integers or "p/q" strings.
//
//   n: 2
//   k: 2
//   matrices:
//     - [[1, 0], [0, 0]]
//     - [[0, 0], [0, 1]]
//
// Syntax errors and malformed rationals raise ParseError with the 1-based
// line and column; shape, symmetry and independence failures raise
// ValidationError.
clifford::QuadricFamily parse_family_file(const std::string& path);
clifford::QuadricFamily parse_family_text(const std::string& text, const std::string& label = {});

}  // namespace cliffalg::cli
