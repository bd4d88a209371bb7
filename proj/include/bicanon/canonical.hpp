#pragma once

// Semi-canonicity, the recursive canonicity test and canonicalization.
//
// A matrix is canonical when its row code is the lexicographic minimum over
// all matrices obtainable by permuting its rows and columns. The test below
// never enumerates that orbit. It checks structural conditions on the first
// block of equal rows, compares against the few competitors that could start
// with a different block, and recurses on the remaining rows with the columns
// split into the groups the first block distinguishes.
//
// Condition numbering used in reports:
//   1  rows are nondecreasing
//   2  the first row is 0...01...1 inside every column group
//   3  no row can be rearranged into something smaller than the first row
//   4  no other block of rows with the same minimal shape is longer
//   5  the columns under the ones of the first row are nondecreasing
//   6  no competing first block yields a smaller completion
//   7  the remaining rows are canonical under the refined column groups

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bicanon/matrix.hpp"

namespace bicanon {

bool is_semi_canonical(const BinaryMatrix& a);

// First row is a run of 0s followed by a run of 1s, and so is the first column.
bool first_row_structure_holds(const BinaryMatrix& a);

// A = [O E; B C] where the first t rows equal 0^(m-s) 1^s.
struct BlockDecomposition {
  int s = 0;  // ones in the first row
  int t = 0;  // number of rows equal to the first row
  BinaryMatrix zero_block;  // t x (m-s), all 0
  BinaryMatrix one_block;   // t x s, all 1
  BinaryMatrix b_block;     // (n-t) x (m-s)
  BinaryMatrix c_block;     // (n-t) x s

  BinaryMatrix reassemble() const;
};

// Requires conditions 1-4; throws StructureError naming the first one that fails.
BlockDecomposition block_decompose(const BinaryMatrix& a);

// The equivalent matrix that starts with the block of rows containing row i
// instead of the first block: the two row blocks are swapped, then the columns
// where row i has its ones move, in ascending order, to the last s positions
// while the other columns keep their relative order in front of them.
// Requires conditions 1-5, i (0-based) outside the first block, row i with as
// many ones as the first row and a block as long as the first block;
// throws DomainError otherwise.
BinaryMatrix condition6_competitor(const BinaryMatrix& a, int i);

struct CanonicityReport {
  bool is_canonical = true;
  std::optional<int> failed_condition;
  std::string witness;  // human-readable, 1-based indices
  int depth = 0;        // recursion level where the failure was found
};

struct CanonicityOptions {
  // Accept early when the first row is all ones or all rows are equal.
  bool shortcuts = true;
  // Fill CanonicityReport::witness on failure.
  bool witness = true;
  // Node limit for the competitor searches of condition 6.
  std::uint64_t node_limit = 50'000'000;
};

// Total on valid inputs; only a search exceeding node_limit throws ResourceError.
CanonicityReport is_canonical(const BinaryMatrix& a, const CanonicityOptions& options = {});

struct CanonizeOptions {
  std::uint64_t node_limit = 50'000'000;
};

// The canonical member of the class of a. Throws ResourceError past node_limit.
BinaryMatrix canonicalize(const BinaryMatrix& a, const CanonizeOptions& options = {});

// Same as canonicalize, but columns may only be permuted inside consecutive
// groups of the given sizes (which must sum to a.cols()).
BinaryMatrix canonicalize_grouped(const BinaryMatrix& a, std::span<const int> group_sizes,
                                  const CanonizeOptions& options = {});

// is_canonical under the same grouped equivalence.
CanonicityReport is_canonical_grouped(const BinaryMatrix& a, std::span<const int> group_sizes,
                                      const CanonicityOptions& options = {});

}  // namespace bicanon
