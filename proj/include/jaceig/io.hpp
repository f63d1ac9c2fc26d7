#ifndef JACEIG_IO_HPP
#define JACEIG_IO_HPP

#include <string>

#include "jaceig/core_model.hpp"

namespace jaceig {

// Matrix document: one field per line, whitespace-separated values.
//
//   d 3
//   alpha 5 2 9
//   beta 1/10 1/7
//   gamma 1/10 2/7
//
// Blank lines and lines starting with '#' are skipped.  Values are exact
// rationals "num" or "num/den"; decimal literals are admitted only when
// allow_decimals is set (float evaluation mode) and are converted exactly.
JacobiMatrix parse_matrix_text(const std::string& text, bool allow_decimals = false);
JacobiMatrix parse_matrix_file(const std::string& path, bool allow_decimals = false);

std::string matrix_to_text(const JacobiMatrix& M);

} // namespace jaceig

#endif
