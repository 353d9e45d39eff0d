#pragma once

#include "bott/bott_matrix.hpp"

#include <stdexcept>
#include <string>

namespace bott::cli {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatrixDocument {
  std::string source;
  BottMatrix matrix;
};

/// Matrix file format: n non-empty lines of n whitespace-separated 0/1
/// tokens; '#' starts a comment. Throws ParseError.
MatrixDocument parse_matrix_text(const std::string& text);

/// Inline form: rows separated by ';', each row either "0110" or
/// whitespace-separated tokens. Throws ParseError.
MatrixDocument parse_inline_matrix(const std::string& text);

/// Reads and parses a file; unreadable files are a ParseError too.
MatrixDocument read_matrix_file(const std::string& path);

/// The file format, one row per line, entries separated by single spaces.
std::string format_matrix(const BottMatrix& a);

}  // namespace bott::cli
