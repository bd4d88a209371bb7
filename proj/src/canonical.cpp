#include "bicanon/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "bicanon/errors.hpp"
#include "check.hpp"

namespace bicanon {

namespace {

// Consecutive column groups; columns may only move inside their group.
class ColumnGroups {
 public:
  ColumnGroups(int m, std::vector<int> sizes) : m_(m), sizes_(std::move(sizes)) {
    int start = 0;
    for (int size : sizes_) {
      if (size <= 0) throw DomainError("column group sizes must be positive");
      starts_.push_back(start);
      masks_.push_back(low_mask(size) << (m_ - start - size));
      start += size;
    }
    if (start != m_) {
      throw DomainError("column group sizes sum to " + std::to_string(start) + ", expected " +
                        std::to_string(m_));
    }
  }

  static ColumnGroups single(int m) {
    return m == 0 ? ColumnGroups(0, {}) : ColumnGroups(m, {m});
  }

  int width() const noexcept { return m_; }
  std::size_t count() const noexcept { return sizes_.size(); }

  // Smallest code reachable from x by permuting columns inside groups:
  // every group holds its ones at its right end.
  Code aligned(Code x) const noexcept {
    Code out = 0;
    for (std::size_t g = 0; g < sizes_.size(); ++g) {
      const int ones = popcount(x & masks_[g]);
      out |= low_mask(ones) << (m_ - starts_[g] - sizes_[g]);
    }
    return out;
  }

  // Column order that aligns x: inside each group, the columns where x is 0
  // followed by the columns where x is 1, both ascending.
  std::vector<int> align_order(Code x) const {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(m_));
    for (std::size_t g = 0; g < sizes_.size(); ++g) {
      const int end = starts_[g] + sizes_[g];
      for (int j = starts_[g]; j < end; ++j)
        if ((x & column_bit(m_, j)) == 0) order.push_back(j);
      for (int j = starts_[g]; j < end; ++j)
        if ((x & column_bit(m_, j)) != 0) order.push_back(j);
    }
    return order;
  }

  // Groups split by an aligned row: zeros part, then ones part.
  ColumnGroups refined(Code aligned_row) const {
    std::vector<int> sizes;
    for (std::size_t g = 0; g < sizes_.size(); ++g) {
      const int ones = popcount(aligned_row & masks_[g]);
      if (sizes_[g] - ones > 0) sizes.push_back(sizes_[g] - ones);
      if (ones > 0) sizes.push_back(ones);
    }
    return ColumnGroups(m_, std::move(sizes));
  }

  // Columns (ascending) of the ones part of x inside each group, group by group.
  std::vector<std::vector<int>> ones_columns(Code x) const {
    std::vector<std::vector<int>> out(sizes_.size());
    for (std::size_t g = 0; g < sizes_.size(); ++g)
      for (int j = starts_[g]; j < starts_[g] + sizes_[g]; ++j)
        if ((x & column_bit(m_, j)) != 0) out[g].push_back(j);
    return out;
  }

  Code all_ones() const noexcept { return low_mask(m_); }

 private:
  int m_;
  std::vector<int> sizes_;
  std::vector<int> starts_;
  std::vector<Code> masks_;
};

std::vector<Code> permuted_rows(std::span<const Code> rows, int m, std::span<const int> order) {
  std::vector<Code> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = permute_code_columns(rows[i], m, order);
  return out;
}

Code column_value(std::span<const Code> rows, int m, int j) {
  Code y = 0;
  for (Code x : rows) y = (y << 1) | ((x >> (m - 1 - j)) & 1u);
  return y;
}

// Branch and bound for the lexicographically smallest row tuple reachable by
// row permutations and in-group column permutations. The tuple always starts
// with the longest block of rows equal to the smallest aligned row; each
// choice of that block fixes where its ones go and refines the groups for the
// remaining rows.
class MinimumSearch {
 public:
  MinimumSearch(int m, std::uint64_t node_limit) : m_(m), node_limit_(node_limit) {}

  // Start from a known candidate; run() then reports only strict improvements.
  void set_incumbent(std::vector<Code> rows) {
    best_ = std::move(rows);
    have_best_ = true;
  }

  // rows must be sorted.
  void run(std::vector<Code> rows, const ColumnGroups& groups) { descend(std::move(rows), groups, false); }

  bool improved() const noexcept { return improved_; }
  const std::vector<Code>& best() const noexcept { return best_; }

 private:
  void descend(std::vector<Code> rows, const ColumnGroups& groups, bool ahead) {
    if (++nodes_ > node_limit_) {
      throw ResourceError("canonical form search exceeded the node limit of " +
                          std::to_string(node_limit_));
    }
    if (rows.empty()) {
      if (!have_best_ || current_ < best_) {
        best_ = current_;
        have_best_ = true;
        improved_ = true;
      }
      return;
    }

    Code lead = groups.all_ones();
    for (Code x : rows) lead = std::min(lead, groups.aligned(x));

    // Candidate first blocks: distinct rows whose aligned form is `lead`,
    // restricted to those with the largest multiplicity.
    std::vector<std::pair<Code, int>> candidates;
    for (std::size_t i = 0; i < rows.size();) {
      std::size_t k = i;
      while (k < rows.size() && rows[k] == rows[i]) ++k;
      if (groups.aligned(rows[i]) == lead) candidates.emplace_back(rows[i], static_cast<int>(k - i));
      i = k;
    }
    int block = 0;
    for (const auto& c : candidates) block = std::max(block, c.second);

    const std::size_t pos = current_.size();
    if (have_best_ && !ahead) {
      for (int k = 0; k < block; ++k) {
        const Code rival = best_[pos + k];
        if (lead > rival) return;
        if (lead < rival) {
          ahead = true;
          break;
        }
      }
    }
    current_.insert(current_.end(), static_cast<std::size_t>(block), lead);

    const ColumnGroups next = groups.refined(lead);
    std::set<std::vector<Code>> seen;
    for (const auto& [value, count] : candidates) {
      if (count != block) continue;
      std::vector<Code> rest;
      rest.reserve(rows.size() - static_cast<std::size_t>(block));
      int skipped = 0;
      for (Code x : rows) {
        if (x == value && skipped < block) {
          ++skipped;
          continue;
        }
        rest.push_back(x);
      }
      const auto order = groups.align_order(value);
      rest = permuted_rows(rest, m_, order);
      std::sort(rest.begin(), rest.end());
      // Identical residual multisets lead to identical subtrees.
      if (!seen.insert(rest).second) continue;
      descend(std::move(rest), next, ahead);
    }
    current_.resize(pos);
  }

  int m_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<Code> current_;
  std::vector<Code> best_;
  bool have_best_ = false;
  bool improved_ = false;
};

std::vector<Code> minimum_rows(std::span<const Code> rows, const ColumnGroups& groups,
                               std::uint64_t node_limit) {
  std::vector<Code> sorted(rows.begin(), rows.end());
  std::sort(sorted.begin(), sorted.end());
  MinimumSearch search(groups.width(), node_limit);
  search.run(std::move(sorted), groups);
  return search.best();
}

std::string row_list(std::span<const Code> rows) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i];
  os << '>';
  return os.str();
}

class CanonicityChecker {
 public:
  CanonicityChecker(int m, const CanonicityOptions& options) : m_(m), options_(options) {}

  CanonicityReport check(std::span<const Code> rows, const ColumnGroups& groups, int depth) {
    const int n = static_cast<int>(rows.size());
    if (n == 0 || m_ == 0) return {};

    // 1
    for (int i = 1; i < n; ++i) {
      if (rows[i - 1] > rows[i]) {
        return fail(1, depth, [&] {
          return "row " + std::to_string(i + 1) + " (" + std::to_string(rows[i]) +
                 ") is smaller than row " + std::to_string(i) + " (" +
                 std::to_string(rows[i - 1]) + ")";
        });
      }
    }
    const Code first = rows[0];
    if (options_.shortcuts && first == groups.all_ones()) return {};

    // 2
    if (groups.aligned(first) != first) {
      return fail(2, depth, [&] {
        return "first row " + std::to_string(first) + " is not of the form 0...01...1 (expected " +
               std::to_string(groups.aligned(first)) + ")";
      });
    }

    int block = 1;
    while (block < n && rows[block] == first) ++block;
    if (options_.shortcuts && block == n) return {};

    // 3
    for (int i = 1; i < n; ++i) {
      if (groups.aligned(rows[i]) < first) {
        return fail(3, depth, [&] {
          return "row " + std::to_string(i + 1) + " has fewer ones than the first row";
        });
      }
    }

    // Blocks of equal rows after the first block.
    struct Run {
      int start;
      int length;
    };
    std::vector<Run> rivals;
    for (int i = block; i < n;) {
      int k = i;
      while (k < n && rows[k] == rows[i]) ++k;
      if (groups.aligned(rows[i]) == first) rivals.push_back({i, k - i});
      i = k;
    }

    // 4
    for (const auto& run : rivals) {
      if (run.length > block) {
        return fail(4, depth, [&] {
          return "rows " + std::to_string(run.start + 1) + ".." +
                 std::to_string(run.start + run.length) + " form a block of " +
                 std::to_string(run.length) + " equal rows with the first row's shape, longer than the first block (" +
                 std::to_string(block) + ")";
        });
      }
    }

    // 5
    for (const auto& cols : groups.ones_columns(first)) {
      for (std::size_t k = 1; k < cols.size(); ++k) {
        const Code left = column_value(rows, m_, cols[k - 1]);
        const Code right = column_value(rows, m_, cols[k]);
        if (left > right) {
          return fail(5, depth, [&] {
            return "column " + std::to_string(cols[k - 1] + 1) + " (" + std::to_string(left) +
                   ") is larger than column " + std::to_string(cols[k] + 1) + " (" +
                   std::to_string(right) + ")";
          });
        }
      }
    }

    const std::span<const Code> residual = rows.subspan(static_cast<std::size_t>(block));
    const ColumnGroups next = groups.refined(first);

    // 6
    for (const auto& run : rivals) {
      if (run.length != block) continue;
      std::vector<Code> swapped(rows.begin(), rows.end());
      std::swap_ranges(swapped.begin(), swapped.begin() + block, swapped.begin() + run.start);
      const auto order = groups.align_order(rows[run.start]);
      auto competitor = permuted_rows(std::span<const Code>(swapped).subspan(static_cast<std::size_t>(block)), m_, order);
      std::sort(competitor.begin(), competitor.end());

      MinimumSearch search(m_, options_.node_limit);
      search.set_incumbent({residual.begin(), residual.end()});
      search.run(std::move(competitor), next);
      if (search.improved()) {
        return fail(6, depth, [&] {
          std::vector<Code> better(rows.begin(), rows.begin() + block);
          better.insert(better.end(), search.best().begin(), search.best().end());
          return "starting with rows " + std::to_string(run.start + 1) + ".." +
                 std::to_string(run.start + run.length) + " reaches " + row_list(better) +
                 ", smaller than " + row_list(rows);
        });
      }
    }

    // 7
    BICANON_CHECK(std::is_sorted(residual.begin(), residual.end()));
    return check(residual, next, depth + 1);
  }

 private:
  template <class Describe>
  CanonicityReport fail(int condition, int depth, Describe&& describe) const {
    CanonicityReport report;
    report.is_canonical = false;
    report.failed_condition = condition;
    report.depth = depth;
    if (options_.witness) report.witness = describe();
    return report;
  }

  int m_;
  const CanonicityOptions& options_;
};

bool nondecreasing(const std::vector<Code>& v) { return std::is_sorted(v.begin(), v.end()); }

// 1-based index of the first of conditions 1-4 violated by a, or 0.
int first_structural_failure(const BinaryMatrix& a) {
  const auto rows = a.row_codes();
  if (!std::is_sorted(rows.begin(), rows.end())) return 1;
  if (a.rows() == 0) return 0;
  const int s = popcount(rows[0]);
  if (rows[0] != low_mask(s)) return 2;
  for (Code x : rows)
    if (popcount(x) < s) return 3;
  const auto stats = row_stats(a);
  const int t = stats.zeta[0];
  for (int i = t; i < a.rows(); ++i)
    if (stats.eps[i] == s && stats.zeta[i] > t) return 4;
  return 0;
}

bool condition5_holds(const BinaryMatrix& a) {
  if (a.rows() == 0) return true;
  const int s = popcount(a.row(0));
  const auto y = col_code(a).values;
  return std::is_sorted(y.end() - s, y.end());
}

BinaryMatrix slice(const BinaryMatrix& a, int row_begin, int row_end, int col_begin, int col_end) {
  const int width = col_end - col_begin;
  std::vector<Code> rows;
  for (int i = row_begin; i < row_end; ++i)
    rows.push_back((a.row(i) >> (a.cols() - col_end)) & low_mask(width));
  return BinaryMatrix::from_rows(width, std::move(rows));
}

}  // namespace

bool is_semi_canonical(const BinaryMatrix& a) {
  return nondecreasing(row_code(a).values) && nondecreasing(col_code(a).values);
}

bool first_row_structure_holds(const BinaryMatrix& a) {
  if (a.empty()) return true;
  const Code x1 = a.row(0);
  const Code y1 = col_code(a).values.front();
  return x1 == low_mask(popcount(x1)) && y1 == low_mask(popcount(y1));
}

BinaryMatrix BlockDecomposition::reassemble() const {
  const int n = zero_block.rows() + b_block.rows();
  const int m = zero_block.cols() + one_block.cols();
  std::vector<Code> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < t; ++i) rows.push_back((zero_block.row(i) << s) | one_block.row(i));
  for (int i = 0; i < b_block.rows(); ++i) rows.push_back((b_block.row(i) << s) | c_block.row(i));
  return BinaryMatrix::from_rows(m, std::move(rows));
}

BlockDecomposition block_decompose(const BinaryMatrix& a) {
  if (const int failed = first_structural_failure(a); failed != 0) {
    throw StructureError(failed, "matrix has no block form: condition " + std::to_string(failed) +
                                     " does not hold");
  }
  const int n = a.rows();
  const int m = a.cols();
  BlockDecomposition d;
  d.s = n == 0 ? 0 : popcount(a.row(0));
  d.t = n == 0 ? 0 : row_stats(a).zeta[0];
  d.zero_block = slice(a, 0, d.t, 0, m - d.s);
  d.one_block = slice(a, 0, d.t, m - d.s, m);
  d.b_block = slice(a, d.t, n, 0, m - d.s);
  d.c_block = slice(a, d.t, n, m - d.s, m);
  return d;
}

BinaryMatrix condition6_competitor(const BinaryMatrix& a, int i) {
  if (i < 0 || i >= a.rows()) throw DomainError("row index out of range");
  if (const int failed = first_structural_failure(a); failed != 0) {
    throw DomainError("competitor needs conditions 1-5; condition " + std::to_string(failed) +
                      " fails");
  }
  if (!condition5_holds(a)) throw DomainError("competitor needs conditions 1-5; condition 5 fails");
  const auto stats = row_stats(a);
  const int s = stats.eps[0];
  const int t = stats.zeta[0];
  if (i < t) throw DomainError("row " + std::to_string(i + 1) + " lies in the first block");
  if (stats.eps[i] != s || stats.zeta[i] != t) {
    throw DomainError("row " + std::to_string(i + 1) +
                      " does not match the first block's ones count and multiplicity");
  }
  int start = i;
  while (start > 0 && a.row(start - 1) == a.row(i)) --start;

  std::vector<Code> rows(a.row_codes().begin(), a.row_codes().end());
  std::swap_ranges(rows.begin(), rows.begin() + t, rows.begin() + start);
  const auto order = ColumnGroups::single(a.cols()).align_order(a.row(i));
  return BinaryMatrix::from_rows(a.cols(), permuted_rows(rows, a.cols(), order));
}

CanonicityReport is_canonical_grouped(const BinaryMatrix& a, std::span<const int> group_sizes,
                                      const CanonicityOptions& options) {
  const ColumnGroups groups(a.cols(), {group_sizes.begin(), group_sizes.end()});
  CanonicityChecker checker(a.cols(), options);
  return checker.check(a.row_codes(), groups, 0);
}

CanonicityReport is_canonical(const BinaryMatrix& a, const CanonicityOptions& options) {
  CanonicityChecker checker(a.cols(), options);
  return checker.check(a.row_codes(), ColumnGroups::single(a.cols()), 0);
}

BinaryMatrix canonicalize_grouped(const BinaryMatrix& a, std::span<const int> group_sizes,
                                  const CanonizeOptions& options) {
  const ColumnGroups groups(a.cols(), {group_sizes.begin(), group_sizes.end()});
  if (a.empty()) return a;
  return BinaryMatrix::from_rows(a.cols(), minimum_rows(a.row_codes(), groups, options.node_limit));
}

BinaryMatrix canonicalize(const BinaryMatrix& a, const CanonizeOptions& options) {
  if (a.empty()) return a;
  return BinaryMatrix::from_rows(
      a.cols(), minimum_rows(a.row_codes(), ColumnGroups::single(a.cols()), options.node_limit));
}

}  // namespace bicanon
