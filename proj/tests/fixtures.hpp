#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "bicanon/matrix.hpp"

namespace fixtures {

using bicanon::BinaryMatrix;

// Graph of the worked three-row example: r = <12,14,1>, c = <6,6,2,1>.
inline BinaryMatrix figure_graph() {
  return BinaryMatrix::from_grid({{1, 1, 0, 0}, {1, 1, 1, 0}, {0, 0, 0, 1}});
}

// Two equivalent semi-canonical matrices that are not canonical, and the
// canonical member of their class.
inline BinaryMatrix example_a() {
  return BinaryMatrix::from_grid({{0, 0, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 0}, {1, 0, 0, 0}});
}
inline BinaryMatrix example_b() {
  return BinaryMatrix::from_grid({{0, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 0}});
}
inline BinaryMatrix example_c() {
  return BinaryMatrix::from_grid({{0, 0, 0, 1}, {0, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}});
}

inline BinaryMatrix all_ones(int n, int m) {
  return BinaryMatrix::from_rows(m, std::vector<bicanon::Code>(n, bicanon::low_mask(m)));
}

// Matrix number `bits` among all n x m matrices, first row in the high bits.
inline BinaryMatrix nth_matrix(int n, int m, std::uint64_t bits) {
  std::vector<bicanon::Code> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = static_cast<bicanon::Code>(bits >> (m * (n - 1 - i))) & bicanon::low_mask(m);
  return BinaryMatrix::from_rows(m, rows);
}

inline BinaryMatrix random_matrix(std::mt19937_64& rng, int n, int m) {
  std::vector<bicanon::Code> rows(n);
  for (auto& x : rows) x = static_cast<bicanon::Code>(rng()) & bicanon::low_mask(m);
  return BinaryMatrix::from_rows(m, rows);
}

// Sparse-ish or dense-ish random matrix to reach structured corners.
inline BinaryMatrix random_biased(std::mt19937_64& rng, int n, int m, double p) {
  std::bernoulli_distribution bit(p);
  std::vector<std::vector<int>> grid(n, std::vector<int>(m));
  for (auto& row : grid)
    for (auto& v : row) v = bit(rng) ? 1 : 0;
  return BinaryMatrix::from_grid(grid);
}

inline bicanon::Permutation random_permutation(std::mt19937_64& rng, int k) {
  std::vector<int> images(k);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return bicanon::Permutation(images);
}

inline std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace fixtures
