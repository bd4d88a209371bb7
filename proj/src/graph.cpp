#include "bicanon/graph.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "bicanon/errors.hpp"
#include "bicanon/text_format.hpp"

namespace bicanon {

BipartiteGraph::BipartiteGraph(int n, int m, std::set<Edge> edges)
    : n_(n), m_(m), edges_(std::move(edges)) {
  if (n < 0 || m < 0 || n > kMaxSide || m > kMaxSide) {
    throw DomainError("part sizes must be in [0, " + std::to_string(kMaxSide) + "]");
  }
  for (const auto& [r, c] : edges_) {
    if (r < 1 || r > n || c < 1 || c > m) {
      throw DomainError("edge (" + std::to_string(r) + ", " + std::to_string(c) +
                        ") lies outside the parts");
    }
  }
}

BipartiteGraph BipartiteGraph::relabeled(const Permutation& row_map, const Permutation& col_map) const {
  if (row_map.size() != n_ || col_map.size() != m_) throw DomainError("relabeling size mismatch");
  std::set<Edge> out;
  for (const auto& [r, c] : edges_) out.emplace(row_map(r - 1) + 1, col_map(c - 1) + 1);
  return BipartiteGraph(n_, m_, std::move(out));
}

BinaryMatrix to_matrix(const BipartiteGraph& g) {
  std::vector<Code> rows(static_cast<std::size_t>(g.left_size()), 0);
  for (const auto& [r, c] : g.edges()) rows[r - 1] |= column_bit(g.right_size(), c - 1);
  return BinaryMatrix::from_rows(g.right_size(), std::move(rows));
}

BipartiteGraph from_matrix(const BinaryMatrix& a) {
  std::set<BipartiteGraph::Edge> edges;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j)) edges.emplace(i + 1, j + 1);
  return BipartiteGraph(a.rows(), a.cols(), std::move(edges));
}

bool isomorphic(const BipartiteGraph& g, const BipartiteGraph& h, const CanonizeOptions& options) {
  if (g.left_size() != h.left_size() || g.right_size() != h.right_size()) return false;
  if (g.edges().size() != h.edges().size()) return false;
  return canonicalize(to_matrix(g), options) == canonicalize(to_matrix(h), options);
}

Orientation match_orientation(const BipartiteGraph& g, const BipartiteGraph& h,
                              const CanonizeOptions& options) {
  if (isomorphic(g, h, options)) return Orientation::direct;
  const auto flipped = from_matrix(to_matrix(h).transpose());
  if (isomorphic(g, flipped, options)) return Orientation::transposed;
  return Orientation::none;
}

RowCode canonical_key(const BipartiteGraph& g, const CanonizeOptions& options) {
  return row_code(canonicalize(to_matrix(g), options));
}

namespace {

std::vector<int> line_ints(std::string_view line, std::size_t number) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    const std::size_t used = static_cast<std::size_t>(ptr - (line.data() + i));
    if (ec != std::errc{} || used == 0 ||
        (i + used < line.size() && line[i + used] != ' ' && line[i + used] != '\t')) {
      throw ParseError(number, "expected integers, got '" + std::string(line) + "'");
    }
    out.push_back(value);
    i += used;
  }
  return out;
}

}  // namespace

BipartiteGraph parse_graph(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    auto line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) lines.emplace_back(number, line);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  if (lines.empty()) throw ParseError(1, "empty input, expected header 'n m e'");

  const auto head = line_ints(lines[0].second, lines[0].first);
  if (head.size() != 3) throw ParseError(lines[0].first, "expected header 'n m e'");
  const int n = head[0];
  const int m = head[1];
  const int e = head[2];
  if (n < 0 || m < 0 || n > kMaxSide || m > kMaxSide || e < 0) {
    throw ParseError(lines[0].first, "part sizes must be in [0, " + std::to_string(kMaxSide) +
                                         "] and the edge count nonnegative");
  }
  if (static_cast<int>(lines.size()) - 1 != e) {
    throw ParseError(lines.back().first, "header announces " + std::to_string(e) + " edges, found " +
                                             std::to_string(lines.size() - 1));
  }
  std::set<BipartiteGraph::Edge> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [num, line] = lines[k];
    const auto v = line_ints(line, num);
    if (v.size() != 2) throw ParseError(num, "expected edge 'r c'");
    if (v[0] < 1 || v[0] > n || v[1] < 1 || v[1] > m) {
      throw ParseError(num, "edge (" + std::to_string(v[0]) + ", " + std::to_string(v[1]) +
                                ") lies outside the parts");
    }
    if (!edges.emplace(v[0], v[1]).second) {
      throw ParseError(num, "duplicate edge (" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ")");
    }
  }
  return BipartiteGraph(n, m, std::move(edges));
}

std::string format_graph(const BipartiteGraph& g) {
  std::ostringstream os;
  os << g.left_size() << ' ' << g.right_size() << ' ' << g.edges().size() << '\n';
  for (const auto& [r, c] : g.edges()) os << r << ' ' << c << '\n';
  return os.str();
}

BipartiteGraph read_graph_file(const std::string& path) {
  try {
    return parse_graph(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

}  // namespace bicanon
