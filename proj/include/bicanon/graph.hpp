#pragma once

// Bipartite graphs with parts R = {1..n} and C = {1..m}, their biadjacency
// matrices, and part-preserving isomorphism through canonical forms.
//
// Graph text format:
//
//   n m e
//   <e lines "r c", 1-based>
//
// Duplicate edges are rejected on load; the writer emits edges row-major.

#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "bicanon/canonical.hpp"
#include "bicanon/matrix.hpp"

namespace bicanon {

class BipartiteGraph {
 public:
  using Edge = std::pair<int, int>;  // (r, c), 1-based

  BipartiteGraph() = default;
  // Throws DomainError for edges outside [1,n] x [1,m] or sides above kMaxSide.
  BipartiteGraph(int n, int m, std::set<Edge> edges);

  int left_size() const noexcept { return n_; }
  int right_size() const noexcept { return m_; }
  const std::set<Edge>& edges() const noexcept { return edges_; }

  // Graph with vertex r renamed to row_map(r-1)+1 and c to col_map(c-1)+1.
  BipartiteGraph relabeled(const Permutation& row_map, const Permutation& col_map) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::set<Edge> edges_;
};

BinaryMatrix to_matrix(const BipartiteGraph& g);
BipartiteGraph from_matrix(const BinaryMatrix& a);

// Parts are never swapped: R maps to R and C to C.
bool isomorphic(const BipartiteGraph& g, const BipartiteGraph& h, const CanonizeOptions& options = {});

enum class Orientation { none, direct, transposed };

// Like isomorphic, but also tries exchanging the parts of h.
Orientation match_orientation(const BipartiteGraph& g, const BipartiteGraph& h,
                              const CanonizeOptions& options = {});

// Row code of the canonical form of the biadjacency matrix.
RowCode canonical_key(const BipartiteGraph& g, const CanonizeOptions& options = {});

BipartiteGraph parse_graph(std::string_view text);
std::string format_graph(const BipartiteGraph& g);
BipartiteGraph read_graph_file(const std::string& path);

}  // namespace bicanon
