#include "bicanon/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "bicanon/errors.hpp"

namespace bicanon {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    auto end = text.find('\n');
    auto line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t") == std::string_view::npos;
}

int parse_int(std::string_view token, std::size_t line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Parses one matrix starting at lines[pos]; advances pos past it.
BinaryMatrix parse_one(const std::vector<Line>& lines, std::size_t& pos) {
  const Line& header = lines[pos];
  auto head = tokens(header.text);
  if (head.size() != 2) throw ParseError(header.number, "expected header 'n m'");
  const int n = parse_int(head[0], header.number, "row count");
  const int m = parse_int(head[1], header.number, "column count");
  if (n < 0 || n > kMaxSide || m < 0 || m > kMaxSide) {
    throw ParseError(header.number, "matrix sides must be in [0, " + std::to_string(kMaxSide) + "]");
  }
  ++pos;
  std::vector<Code> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i, ++pos) {
    if (pos >= lines.size()) {
      throw ParseError(lines.back().number, "expected " + std::to_string(n) + " rows, got " +
                                                std::to_string(i));
    }
    const Line& row = lines[pos];
    if (static_cast<int>(row.text.size()) != m) {
      throw ParseError(row.number, "expected " + std::to_string(m) + " characters, got " +
                                       std::to_string(row.text.size()));
    }
    Code x = 0;
    for (char c : row.text) {
      if (c != '0' && c != '1') {
        throw ParseError(row.number, std::string("invalid character '") + c + "'");
      }
      x = (x << 1) | static_cast<Code>(c - '0');
    }
    rows.push_back(x);
  }
  return BinaryMatrix::from_rows(m, std::move(rows));
}

}  // namespace

std::vector<BinaryMatrix> parse_matrices(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<BinaryMatrix> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < lines.size() && is_blank(lines[pos].text)) ++pos;
    if (pos >= lines.size()) break;
    out.push_back(parse_one(lines, pos));
    if (pos < lines.size() && !is_blank(lines[pos].text)) {
      throw ParseError(lines[pos].number, "unexpected content after matrix");
    }
  }
  return out;
}

BinaryMatrix parse_matrix(std::string_view text) {
  auto all = parse_matrices(text);
  if (all.empty()) throw ParseError(1, "empty input, expected header 'n m'");
  if (all.size() > 1) throw ParseError(0, "expected a single matrix, found " + std::to_string(all.size()));
  return std::move(all.front());
}

void write_matrix(std::ostream& out, const BinaryMatrix& a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  std::string line(static_cast<std::size_t>(a.cols()), '0');
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) line[j] = a.at(i, j) ? '1' : '0';
    out << line << '\n';
  }
}

std::string format_matrix(const BinaryMatrix& a) {
  std::ostringstream os;
  write_matrix(os, a);
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

BinaryMatrix read_matrix_file(const std::string& path) {
  try {
    return parse_matrix(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

}  // namespace bicanon
