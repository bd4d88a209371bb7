#pragma once

// Matrix text format:
//
//   n m
//   <n lines of exactly m characters from {0,1}>
//
// Several matrices in one stream are separated by a blank line.

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bicanon/matrix.hpp"

namespace bicanon {

// Throws ParseError with a 1-based line number on malformed input.
BinaryMatrix parse_matrix(std::string_view text);
std::vector<BinaryMatrix> parse_matrices(std::string_view text);

std::string format_matrix(const BinaryMatrix& a);
void write_matrix(std::ostream& out, const BinaryMatrix& a);

BinaryMatrix read_matrix_file(const std::string& path);

// Whole file contents; throws ParseError (line 0) when the file cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace bicanon
