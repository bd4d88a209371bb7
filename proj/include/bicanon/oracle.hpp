#pragma once

// Brute-force ground truth for the equivalence A ~ B (equal up to a row
// permutation and a column permutation) and its lexicographically minimal
// representative. Everything here is deliberately direct; the fast path in
// canonical.hpp is validated against it.

#include <cstdint>

#include "bicanon/matrix.hpp"

namespace bicanon::oracle {

enum class Strategy {
  // For every column permutation, the best row permutation is the sorted row
  // tuple. Cost m! * n log n.
  sorted_rows,
  // Every (row permutation, column permutation) pair. Cost n! * m! * n.
  exhaustive,
};

// Structural budget: orbit searches are refused above these sizes.
struct Budget {
  int max_side = 7;        // n and m each
  int max_cells = 20;      // n * m, for count_classes only
};

struct ClassSummary {
  BinaryMatrix canonical_rep;
  std::uint64_t class_size = 0;  // number of distinct matrices in the orbit
  int n = 0;
  int m = 0;
};

// Orbit member with lexicographically minimal row code.
// Throws ResourceError when n or m exceeds budget.max_side.
BinaryMatrix brute_force_canonical(const BinaryMatrix& a, Strategy strategy = Strategy::sorted_rows,
                                   const Budget& budget = {});

// Different shapes compare unequal.
bool equivalent(const BinaryMatrix& a, const BinaryMatrix& b, const Budget& budget = {});

ClassSummary summarize_class(const BinaryMatrix& a, const Budget& budget = {});

// Number of distinct canonical forms over all 2^(n*m) matrices, split across
// `jobs` threads (0 = hardware concurrency). Thread count never changes the result.
std::uint64_t count_classes(int n, int m, const Budget& budget = {}, unsigned jobs = 1);

}  // namespace bicanon::oracle
