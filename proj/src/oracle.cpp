#include "bicanon/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bicanon/errors.hpp"
#include "parallel.hpp"

namespace bicanon::oracle {

namespace {

void check_budget(int n, int m, const Budget& budget) {
  if (n > budget.max_side || m > budget.max_side) {
    throw ResourceError("orbit search for a " + std::to_string(n) + "x" + std::to_string(m) +
                        " matrix exceeds the oracle budget of " +
                        std::to_string(budget.max_side) + " rows and columns");
  }
}

std::vector<int> iota_vector(int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Minimum over column permutations of the sorted, column-permuted rows.
std::vector<Code> min_sorted_rows(std::span<const Code> rows, int m) {
  auto order = iota_vector(m);
  std::vector<Code> best(rows.begin(), rows.end());
  std::sort(best.begin(), best.end());
  std::vector<Code> candidate(rows.size());
  do {
    for (std::size_t i = 0; i < rows.size(); ++i) candidate[i] = permute_code_columns(rows[i], m, order);
    std::sort(candidate.begin(), candidate.end());
    if (candidate < best) best = candidate;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::vector<Code> min_all_pairs(std::span<const Code> rows, int m) {
  const int n = static_cast<int>(rows.size());
  auto col_order = iota_vector(m);
  std::vector<Code> best(rows.begin(), rows.end());
  std::vector<Code> permuted(rows.size());
  std::vector<Code> candidate(rows.size());
  do {
    for (int i = 0; i < n; ++i) permuted[i] = permute_code_columns(rows[i], m, col_order);
    auto row_order = iota_vector(n);
    do {
      for (int i = 0; i < n; ++i) candidate[i] = permuted[row_order[i]];
      if (candidate < best) best = candidate;
    } while (std::next_permutation(row_order.begin(), row_order.end()));
  } while (std::next_permutation(col_order.begin(), col_order.end()));
  return best;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

BinaryMatrix brute_force_canonical(const BinaryMatrix& a, Strategy strategy, const Budget& budget) {
  check_budget(a.rows(), a.cols(), budget);
  auto best = strategy == Strategy::exhaustive ? min_all_pairs(a.row_codes(), a.cols())
                                               : min_sorted_rows(a.row_codes(), a.cols());
  return BinaryMatrix::from_rows(a.cols(), std::move(best));
}

bool equivalent(const BinaryMatrix& a, const BinaryMatrix& b, const Budget& budget) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return brute_force_canonical(a, Strategy::sorted_rows, budget) ==
         brute_force_canonical(b, Strategy::sorted_rows, budget);
}

ClassSummary summarize_class(const BinaryMatrix& a, const Budget& budget) {
  check_budget(a.rows(), a.cols(), budget);
  const int n = a.rows();
  const int m = a.cols();
  // Each distinct row multiset reachable by a column permutation contributes
  // its number of distinct row orderings; different multisets never collide.
  std::set<std::vector<Code>> multisets;
  auto order = iota_vector(m);
  std::vector<Code> candidate(static_cast<std::size_t>(n));
  do {
    for (int i = 0; i < n; ++i) candidate[i] = permute_code_columns(a.row(i), m, order);
    std::sort(candidate.begin(), candidate.end());
    multisets.insert(candidate);
  } while (std::next_permutation(order.begin(), order.end()));

  std::uint64_t size = 0;
  for (const auto& rows : multisets) {
    std::uint64_t arrangements = factorial(n);
    for (std::size_t i = 0; i < rows.size();) {
      std::size_t k = i;
      while (k < rows.size() && rows[k] == rows[i]) ++k;
      arrangements /= factorial(static_cast<int>(k - i));
      i = k;
    }
    size += arrangements;
  }
  return {BinaryMatrix::from_rows(m, *multisets.begin()), size, n, m};
}

std::uint64_t count_classes(int n, int m, const Budget& budget, unsigned jobs) {
  check_budget(n, m, budget);
  if (n * m > budget.max_cells) {
    throw ResourceError("class count over " + std::to_string(n) + "x" + std::to_string(m) +
                        " matrices exceeds the oracle budget of " +
                        std::to_string(budget.max_cells) + " cells");
  }
  if (n == 0 || m == 0) return 1;
  const std::uint64_t total = std::uint64_t{1} << (n * m);
  const std::uint64_t chunk = std::min<std::uint64_t>(total, 1u << 12);
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::vector<std::uint64_t> partial(chunks, 0);
  const Code mask = low_mask(m);

  detail::parallel_for(chunks, jobs, [&](std::size_t c) {
    std::vector<Code> rows(static_cast<std::size_t>(n));
    const std::uint64_t begin = c * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    std::uint64_t found = 0;
    for (std::uint64_t bits = begin; bits < end; ++bits) {
      for (int i = 0; i < n; ++i) rows[i] = static_cast<Code>(bits >> (m * (n - 1 - i))) & mask;
      // Only row-sorted matrices can be orbit minima.
      if (!std::is_sorted(rows.begin(), rows.end())) continue;
      if (min_sorted_rows(rows, m) == rows) ++found;
    }
    partial[c] = found;
  });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

}  // namespace bicanon::oracle
