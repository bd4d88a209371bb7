#pragma once

// Binary matrices stored as per-row bit codes.
//
// Row i of an n x m matrix is the integer whose binary digits, most significant
// first, are a(i,1) ... a(i,m). Column codes are read the same way top to
// bottom. Indices in this API are 0-based; text formats and reports use 1-based
// numbering where noted.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bicanon {

using Code = std::uint32_t;

inline constexpr int kMaxSide = 32;

// All-ones code of the given width.
constexpr Code low_mask(int width) noexcept {
  return width >= 32 ? ~Code{0} : (Code{1} << width) - 1;
}

// Bit of column j (0-based) inside a row code of width m.
constexpr Code column_bit(int m, int j) noexcept { return Code{1} << (m - 1 - j); }

struct RowCode {
  std::vector<Code> values;

  friend auto operator<=>(const RowCode&, const RowCode&) = default;
  friend bool operator==(const RowCode&, const RowCode&) = default;
};

struct ColCode {
  std::vector<Code> values;

  friend auto operator<=>(const ColCode&, const ColCode&) = default;
  friend bool operator==(const ColCode&, const ColCode&) = default;
};

class BinaryMatrix {
 public:
  // 0 x 0 matrix.
  BinaryMatrix() = default;
  // n x m zero matrix.
  BinaryMatrix(int n, int m);

  // Throws DomainError when a code does not fit in m bits or a side exceeds kMaxSide.
  static BinaryMatrix from_rows(int m, std::vector<Code> rows);
  static BinaryMatrix from_rows(int m, std::initializer_list<Code> rows) {
    return from_rows(m, std::vector<Code>(rows));
  }
  // Every inner vector must have the same length and hold only 0/1.
  static BinaryMatrix from_grid(const std::vector<std::vector<int>>& grid);

  int rows() const noexcept { return n_; }
  int cols() const noexcept { return m_; }
  bool empty() const noexcept { return n_ == 0 || m_ == 0; }

  bool at(int i, int j) const noexcept { return (rows_[i] & column_bit(m_, j)) != 0; }
  Code row(int i) const noexcept { return rows_[i]; }
  std::span<const Code> row_codes() const noexcept { return rows_; }

  int ones() const noexcept;
  std::vector<std::vector<int>> to_grid() const;
  BinaryMatrix transpose() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  BinaryMatrix(int n, int m, std::vector<Code> rows) : n_(n), m_(m), rows_(std::move(rows)) {}

  int n_ = 0;
  int m_ = 0;
  std::vector<Code> rows_;
};

RowCode row_code(const BinaryMatrix& a);
ColCode col_code(const BinaryMatrix& a);

// Inverse of row_code for a given column count.
BinaryMatrix decode_row_code(const RowCode& rc, int m);

// A bijection of {0, ..., k-1}.
class Permutation {
 public:
  Permutation() = default;
  // images[x] is the image of x. Throws DomainError if not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int k);
  // Swaps u and v.
  static Permutation transposition(int k, int u, int v);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const noexcept { return images_[x]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  // (*this after first)(x) = (*this)(first(x)).
  Permutation after(const Permutation& first) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Moves source row r to position row_perm(r) and source column c to
// position col_perm(c): result(i, j) = a(row_perm^-1(i), col_perm^-1(j)).
BinaryMatrix apply_perms(const BinaryMatrix& a, const Permutation& row_perm,
                         const Permutation& col_perm);

// Rearranges the columns of each code so that target column j holds source
// column order[j]. order must be a permutation of {0, ..., m-1}.
Code permute_code_columns(Code x, int m, std::span<const int> order) noexcept;

struct RowRun {
  int start = 0;
  int length = 0;
  Code value = 0;

  friend bool operator==(const RowRun&, const RowRun&) = default;
};

struct RowStats {
  std::vector<int> eps;    // ones per row
  std::vector<int> zeta;   // number of rows equal to row i, anywhere in the matrix
  std::vector<RowRun> blocks;  // maximal runs of equal consecutive rows
  std::vector<std::vector<int>> upsilon_sets;  // ascending columns holding a 1, per row

  const std::vector<int>& upsilon(int i) const { return upsilon_sets[i]; }
};

RowStats row_stats(const BinaryMatrix& a);

int popcount(Code x) noexcept;

}  // namespace bicanon
