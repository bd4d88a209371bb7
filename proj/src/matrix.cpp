#include "bicanon/matrix.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "bicanon/errors.hpp"
#include "check.hpp"

namespace bicanon {

namespace {

void check_side(int side, const char* what) {
  if (side < 0 || side > kMaxSide) {
    throw DomainError(std::string(what) + " must be in [0, " + std::to_string(kMaxSide) +
                      "], got " + std::to_string(side));
  }
}

}  // namespace

int popcount(Code x) noexcept { return std::popcount(x); }

BinaryMatrix::BinaryMatrix(int n, int m) {
  check_side(n, "row count");
  check_side(m, "column count");
  n_ = n;
  m_ = m;
  rows_.assign(static_cast<std::size_t>(n), 0);
}

BinaryMatrix BinaryMatrix::from_rows(int m, std::vector<Code> rows) {
  check_side(m, "column count");
  if (rows.size() > static_cast<std::size_t>(kMaxSide)) {
    throw DomainError("row count must be at most " + std::to_string(kMaxSide) + ", got " +
                      std::to_string(rows.size()));
  }
  const Code mask = low_mask(m);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((rows[i] & ~mask) != 0) {
      throw DomainError("row code " + std::to_string(rows[i]) + " at row " +
                        std::to_string(i + 1) + " does not fit in " + std::to_string(m) +
                        " columns");
    }
  }
  const int n = static_cast<int>(rows.size());
  return BinaryMatrix(n, m, std::move(rows));
}

BinaryMatrix BinaryMatrix::from_grid(const std::vector<std::vector<int>>& grid) {
  const int m = grid.empty() ? 0 : static_cast<int>(grid.front().size());
  check_side(m, "column count");
  std::vector<Code> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (static_cast<int>(grid[i].size()) != m) {
      throw DomainError("row " + std::to_string(i + 1) + " has " +
                        std::to_string(grid[i].size()) + " entries, expected " +
                        std::to_string(m));
    }
    Code x = 0;
    for (int v : grid[i]) {
      if (v != 0 && v != 1) {
        throw DomainError("entry " + std::to_string(v) + " in row " + std::to_string(i + 1) +
                          " is not 0 or 1");
      }
      x = (x << 1) | static_cast<Code>(v);
    }
    rows.push_back(x);
  }
  return from_rows(m, std::move(rows));
}

int BinaryMatrix::ones() const noexcept {
  int total = 0;
  for (Code x : rows_) total += popcount(x);
  return total;
}

std::vector<std::vector<int>> BinaryMatrix::to_grid() const {
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(n_),
                                     std::vector<int>(static_cast<std::size_t>(m_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < m_; ++j) grid[i][j] = at(i, j) ? 1 : 0;
  return grid;
}

BinaryMatrix BinaryMatrix::transpose() const {
  return BinaryMatrix(m_, n_, col_code(*this).values);
}

RowCode row_code(const BinaryMatrix& a) {
  auto codes = a.row_codes();
  return RowCode{{codes.begin(), codes.end()}};
}

ColCode col_code(const BinaryMatrix& a) {
  const int n = a.rows();
  const int m = a.cols();
  ColCode out;
  out.values.assign(static_cast<std::size_t>(m), 0);
  for (int j = 0; j < m; ++j) {
    const Code bit = column_bit(m, j);
    Code y = 0;
    for (int i = 0; i < n; ++i) y = (y << 1) | ((a.row(i) & bit) != 0 ? 1u : 0u);
    out.values[j] = y;
  }
  return out;
}

BinaryMatrix decode_row_code(const RowCode& rc, int m) { return BinaryMatrix::from_rows(m, rc.values); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= size() || seen[x]) {
      throw DomainError("not a permutation of {0, ..., " + std::to_string(size() - 1) + "}");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int k, int u, int v) {
  if (u < 0 || v < 0 || u >= k || v >= k) throw DomainError("transposition index out of range");
  auto p = identity(k);
  std::swap(p.images_[u], p.images_[v]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < size(); ++x) inv[images_[x]] = x;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::after(const Permutation& first) const {
  if (first.size() != size()) throw DomainError("composing permutations of different sizes");
  std::vector<int> out(images_.size());
  for (int x = 0; x < size(); ++x) out[x] = images_[first(x)];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Code permute_code_columns(Code x, int m, std::span<const int> order) noexcept {
  Code out = 0;
  for (int j = 0; j < m; ++j) out = (out << 1) | ((x >> (m - 1 - order[j])) & 1u);
  return out;
}

BinaryMatrix apply_perms(const BinaryMatrix& a, const Permutation& row_perm,
                         const Permutation& col_perm) {
  if (row_perm.size() != a.rows() || col_perm.size() != a.cols()) {
    throw DomainError("permutation sizes (" + std::to_string(row_perm.size()) + ", " +
                      std::to_string(col_perm.size()) + ") do not match matrix shape (" +
                      std::to_string(a.rows()) + ", " + std::to_string(a.cols()) + ")");
  }
  // Target column j takes source column col_perm^-1(j).
  const auto source_col = col_perm.inverse();
  std::vector<Code> rows(static_cast<std::size_t>(a.rows()));
  for (int r = 0; r < a.rows(); ++r) {
    rows[row_perm(r)] = permute_code_columns(a.row(r), a.cols(), source_col.images());
  }
  return BinaryMatrix::from_rows(a.cols(), std::move(rows));
}

RowStats row_stats(const BinaryMatrix& a) {
  const int n = a.rows();
  const int m = a.cols();
  RowStats st;
  st.eps.resize(n);
  st.zeta.resize(n);
  st.upsilon_sets.resize(n);

  std::map<Code, int> multiplicity;
  for (int i = 0; i < n; ++i) ++multiplicity[a.row(i)];

  for (int i = 0; i < n; ++i) {
    const Code x = a.row(i);
    st.eps[i] = popcount(x);
    st.zeta[i] = multiplicity[x];
    for (int j = 0; j < m; ++j)
      if (a.at(i, j)) st.upsilon_sets[i].push_back(j);
  }

  for (int i = 0; i < n;) {
    int k = i;
    while (k < n && a.row(k) == a.row(i)) ++k;
    st.blocks.push_back({i, k - i, a.row(i)});
    i = k;
  }

  // Sorted rows: every value forms exactly one run, so run length equals zeta.
  const auto codes = a.row_codes();
  if (std::is_sorted(codes.begin(), codes.end())) {
    for (const auto& run : st.blocks) BICANON_CHECK(st.zeta[run.start] == run.length);
  }
  return st;
}

}  // namespace bicanon
