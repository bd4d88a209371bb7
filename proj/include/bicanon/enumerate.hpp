#pragma once

// Orderly generation of semi-canonical and canonical matrices.
//
// Both families are produced by backtracking over nondecreasing row tuples
// x1 <= x2 <= ... <= xn, pruning a branch as soon as some pair of adjacent
// columns is already forced into decreasing order. The canonical family adds
// the prefix-decidable conditions (first row 0...01...1, no row with fewer
// ones) during descent and runs the full canonicity test on each leaf.
// Output is always in increasing row-code order, whatever the thread count.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bicanon/matrix.hpp"

namespace bicanon {

enum class Family { semi_canonical, canonical };

struct CountTable {
  int n = 0;
  int m = 0;
  std::vector<std::uint64_t> by_ones;  // index k = number of ones, size n*m+1
  std::uint64_t total = 0;

  // by_ones[k] == by_ones[n*m-k] for every k.
  bool is_palindromic() const;

  // One "k,count" line per k, no header.
  std::string to_csv() const;
  // {"n":..,"m":..,"by_ones":[..],"total":..} on one line.
  std::string to_json() const;

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

// Largest side accepted by the generators.
inline constexpr int kMaxEnumerationSide = 8;

// Calls visit for every member of the family, in increasing row-code order.
// jobs = 0 uses the hardware concurrency. Throws DomainError for sides outside
// [0, kMaxEnumerationSide].
void for_each_matrix(Family family, int n, int m,
                     const std::function<void(const BinaryMatrix&)>& visit, unsigned jobs = 1);

std::vector<BinaryMatrix> enumerate_semi_canonical(int n, int m, unsigned jobs = 1);
std::vector<BinaryMatrix> enumerate_canonical(int n, int m, unsigned jobs = 1);

CountTable count_family(Family family, int n, int m, unsigned jobs = 1);
CountTable count_semi_canonical(int n, int m, unsigned jobs = 1);
CountTable count_canonical(int n, int m, unsigned jobs = 1);

}  // namespace bicanon
