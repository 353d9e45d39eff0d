#include "matrix_document.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace bott::cli {

namespace {

int parse_entry(const std::string& token, std::size_t row) {
  if (token == "0") return 0;
  if (token == "1") return 1;
  throw ParseError("row " + std::to_string(row) + ": invalid entry '" + token + "' (expected 0 or 1)");
}

BottMatrix build(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw ParseError("empty matrix");
  try {
    return BottMatrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

MatrixDocument parse_matrix_text(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<int> row;
    std::string token;
    while (tokens >> token) row.push_back(parse_entry(token, rows.size() + 1));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return {text, build(rows)};
}

MatrixDocument parse_inline_matrix(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string chunk;
  while (std::getline(in, chunk, ';')) {
    std::istringstream tokens(chunk);
    std::vector<std::string> parts;
    std::string token;
    while (tokens >> token) parts.push_back(token);
    if (parts.empty()) continue;
    std::vector<int> row;
    if (parts.size() == 1) {
      for (char c : parts[0]) row.push_back(parse_entry(std::string(1, c), rows.size() + 1));
    } else {
      for (const auto& p : parts) row.push_back(parse_entry(p, rows.size() + 1));
    }
    rows.push_back(std::move(row));
  }
  return {text, build(rows)};
}

MatrixDocument read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read matrix file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_text(buffer.str());
}

std::string format_matrix(const BottMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j > 0) out += ' ';
      out += a(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace bott::cli
