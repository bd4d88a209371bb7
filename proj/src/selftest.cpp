#include "bicanon/selftest.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "bicanon/canonical.hpp"
#include "bicanon/errors.hpp"
#include "parallel.hpp"

namespace bicanon {

SweepResult sweep_shape(int n, int m, unsigned jobs, const oracle::Budget& budget) {
  if (n < 0 || m < 0 || n > budget.max_side || m > budget.max_side || n * m > 30) {
    throw ResourceError("sweep over " + std::to_string(n) + "x" + std::to_string(m) +
                        " matrices exceeds the oracle budget");
  }
  SweepResult result;
  result.n = n;
  result.m = m;
  const std::uint64_t total = std::uint64_t{1} << (n * m);
  result.matrices = total;
  const std::uint64_t chunk = std::min<std::uint64_t>(total, 1u << 10);
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);

  struct Partial {
    std::uint64_t canonical = 0;
    std::uint64_t mismatches = 0;
    std::optional<BinaryMatrix> first;
  };
  std::vector<Partial> partial(chunks);
  const Code mask = low_mask(m);
  CanonicityOptions options;
  options.witness = false;

  detail::parallel_for(chunks, jobs, [&](std::size_t c) {
    Partial& out = partial[c];
    std::vector<Code> rows(static_cast<std::size_t>(n));
    const std::uint64_t end = std::min(total, (c + 1) * chunk);
    for (std::uint64_t bits = c * chunk; bits < end; ++bits) {
      for (int i = 0; i < n; ++i) rows[i] = static_cast<Code>(bits >> (m * (n - 1 - i))) & mask;
      const auto a = BinaryMatrix::from_rows(m, rows);
      const bool expected = oracle::brute_force_canonical(a, oracle::Strategy::sorted_rows, budget) == a;
      if (expected) ++out.canonical;
      if (is_canonical(a, options).is_canonical != expected) {
        if (!out.first) out.first = a;
        ++out.mismatches;
      }
    }
  });

  for (auto& p : partial) {
    result.canonical += p.canonical;
    result.mismatches += p.mismatches;
    if (!result.first_mismatch && p.first) result.first_mismatch = std::move(p.first);
  }
  return result;
}

std::vector<std::pair<int, int>> sweep_shapes(int max_cells, const oracle::Budget& budget) {
  std::vector<std::pair<int, int>> shapes;
  for (int n = 1; n <= budget.max_side; ++n)
    for (int m = 1; m <= budget.max_side; ++m)
      if (n * m <= max_cells) shapes.emplace_back(n, m);
  return shapes;
}

}  // namespace bicanon
