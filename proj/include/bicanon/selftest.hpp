#pragma once

// Exhaustive agreement sweep between the recursive canonicity test and the
// brute-force orbit minimum.

#include <cstdint>
#include <optional>
#include <vector>

#include "bicanon/matrix.hpp"
#include "bicanon/oracle.hpp"

namespace bicanon {

struct SweepResult {
  int n = 0;
  int m = 0;
  std::uint64_t matrices = 0;
  std::uint64_t canonical = 0;   // matrices the oracle calls canonical
  std::uint64_t mismatches = 0;
  std::optional<BinaryMatrix> first_mismatch;  // smallest by encoding

  bool passed() const noexcept { return mismatches == 0; }
};

// Checks is_canonical(A) == (A == brute_force_canonical(A)) for all 2^(n*m)
// matrices. Throws ResourceError when the shape exceeds the oracle budget.
SweepResult sweep_shape(int n, int m, unsigned jobs = 1, const oracle::Budget& budget = {});

// Shapes with n, m >= 1, n*m <= max_cells and both sides within the oracle
// budget, ordered by (n, m).
std::vector<std::pair<int, int>> sweep_shapes(int max_cells, const oracle::Budget& budget = {});

}  // namespace bicanon
