#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "bicanon/canonical.hpp"
#include "bicanon/errors.hpp"
#include "bicanon/oracle.hpp"
#include "fixtures.hpp"

using namespace bicanon;

namespace {

std::vector<Code> codes(std::initializer_list<Code> v) { return v; }

bool oracle_canonical(const BinaryMatrix& a) { return oracle::brute_force_canonical(a) == a; }

// Minimum over row permutations and column permutations that keep every
// column inside its group; groups are consecutive with the given sizes.
std::vector<Code> grouped_minimum(const BinaryMatrix& a, const std::vector<int>& sizes) {
  std::vector<int> order(a.cols());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Code> best;
  bool first = true;
  // Permute each group independently by iterating next_permutation per group
  // as an odometer.
  std::vector<int> starts;
  for (int s = 0, k = 0; k < static_cast<int>(sizes.size()); s += sizes[k++]) starts.push_back(s);
  while (true) {
    std::vector<Code> rows;
    for (int i = 0; i < a.rows(); ++i) rows.push_back(permute_code_columns(a.row(i), a.cols(), order));
    std::sort(rows.begin(), rows.end());
    if (first || rows < best) best = rows;
    first = false;
    int g = static_cast<int>(sizes.size()) - 1;
    for (; g >= 0; --g) {
      auto begin = order.begin() + starts[g];
      if (std::next_permutation(begin, begin + sizes[g])) break;
    }
    if (g < 0) break;
  }
  return best;
}

// The seven conditions read with a plain recursion on the left residual block
// and an unsorted competitor. Kept only to document where it goes wrong.
bool unrefined_conditions(const BinaryMatrix& a) {
  const int n = a.rows();
  const int m = a.cols();
  if (n == 0 || m == 0) return true;
  const auto x = a.row_codes();
  if (!std::is_sorted(x.begin(), x.end())) return false;
  const auto st = row_stats(a);
  const int s = st.eps[0];
  if (x[0] != low_mask(s)) return false;
  for (int e : st.eps)
    if (e < s) return false;
  const int t = st.zeta[0];
  for (int i = t; i < n; ++i)
    if (st.eps[i] == s && st.zeta[i] > t) return false;
  const auto y = col_code(a).values;
  if (!std::is_sorted(y.end() - s, y.end())) return false;
  if (s == m || t == n) return true;
  for (int i = t; i < n; ++i) {
    if (i > t && x[i] == x[i - 1]) continue;
    if (st.eps[i] == s && st.zeta[i] == t && row_code(condition6_competitor(a, i)) < row_code(a)) return false;
  }
  return unrefined_conditions(block_decompose(a).b_block);
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("semi-canonicity") {
    CHECK(is_semi_canonical(fixtures::example_a()));
    CHECK(is_semi_canonical(fixtures::example_b()));
    CHECK_FALSE(is_semi_canonical(BinaryMatrix::from_grid({{1, 0}, {0, 1}})));
    CHECK(is_semi_canonical(BinaryMatrix(0, 0)));
    CHECK(is_semi_canonical(BinaryMatrix(2, 3)));
  }

  TEST_CASE("first row and first column structure") {
    CHECK(first_row_structure_holds(BinaryMatrix(3, 3)));
    CHECK_FALSE(first_row_structure_holds(BinaryMatrix::from_grid({{1, 0}, {1, 1}})));
    int semi = 0;
    for (std::uint64_t bits = 0; bits < 512; ++bits) {
      const auto a = fixtures::nth_matrix(3, 3, bits);
      if (!is_semi_canonical(a)) continue;
      ++semi;
      REQUIRE(first_row_structure_holds(a));
    }
    CHECK(semi == 45);
  }

  TEST_CASE("block decomposition of the canonical example") {
    const auto d = block_decompose(fixtures::example_c());
    CHECK(d.s == 1);
    CHECK(d.t == 1);
    CHECK(d.b_block == BinaryMatrix::from_grid({{0, 0, 1}, {1, 1, 0}, {1, 1, 0}}));
    CHECK(row_code(d.b_block).values == codes({1, 6, 6}));
    CHECK(d.c_block == BinaryMatrix(3, 1));
    CHECK(d.zero_block == BinaryMatrix(1, 3));
    CHECK(d.one_block == fixtures::all_ones(1, 1));
    CHECK(d.reassemble() == fixtures::example_c());
  }

  TEST_CASE("block decomposition edge shapes") {
    const auto ones = block_decompose(fixtures::all_ones(3, 4));
    CHECK(ones.s == 4);
    CHECK(ones.t == 3);
    CHECK(ones.b_block.rows() == 0);
    CHECK(ones.c_block.rows() == 0);

    const auto zero = block_decompose(BinaryMatrix(2, 3));
    CHECK(zero.s == 0);
    CHECK(zero.t == 2);
    CHECK(zero.zero_block == BinaryMatrix(2, 3));
    CHECK(zero.one_block.cols() == 0);
    CHECK(zero.reassemble() == BinaryMatrix(2, 3));
  }

  TEST_CASE("block decomposition rejects matrices without block form") {
    auto condition_of = [](const BinaryMatrix& a) {
      try {
        block_decompose(a);
      } catch (const StructureError& e) {
        return e.condition();
      }
      return 0;
    };
    CHECK(condition_of(BinaryMatrix::from_rows(2, {2, 1})) == 1);
    CHECK(condition_of(BinaryMatrix::from_rows(3, {2, 3})) == 2);
    CHECK(condition_of(fixtures::example_a()) == 3);
    CHECK(condition_of(BinaryMatrix::from_rows(3, {1, 2, 2})) == 4);
  }

  TEST_CASE("block decomposition reassembles") {
    for (std::uint64_t bits = 0; bits < (1u << 16); ++bits) {
      const auto a = fixtures::nth_matrix(4, 4, bits);
      BlockDecomposition d;
      try {
        d = block_decompose(a);
      } catch (const StructureError&) {
        continue;
      }
      REQUIRE(d.reassemble() == a);
      REQUIRE(d.zero_block.ones() == 0);
      REQUIRE(d.one_block.ones() == d.s * d.t);
      if (d.t < a.rows() && d.s < a.cols()) REQUIRE(d.b_block.row(0) != 0);
      // Deleting the first block and the last s columns keeps rows sorted.
      const auto b = d.b_block.row_codes();
      REQUIRE(std::is_sorted(b.begin(), b.end()));
    }
  }

  TEST_CASE("competitor of a symmetric matrix is the matrix itself") {
    const auto a = BinaryMatrix::from_grid({{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}});
    CHECK(condition6_competitor(a, 2) == a);
    CHECK(condition6_competitor(a, 3) == a);
  }

  TEST_CASE("competitor keeps a column already in its target slot") {
    // Row 2 has its ones in columns 2 and 4; column 4 is already last.
    const auto a = BinaryMatrix::from_rows(4, {3, 5});
    const auto b = condition6_competitor(a, 1);
    CHECK(b == a);
    // Same result through explicit permutations: swap the rows, send
    // columns (1,2,3,4) to positions (1,3,2,4).
    CHECK(apply_perms(a, Permutation::transposition(2, 0, 1), Permutation({0, 2, 1, 3})) == b);
  }

  TEST_CASE("competitor preconditions") {
    const auto c = fixtures::example_c();
    CHECK_THROWS_AS(condition6_competitor(c, 0), DomainError);  // inside the first block
    CHECK_THROWS_AS(condition6_competitor(c, 2), DomainError);  // different ones count
    CHECK_THROWS_AS(condition6_competitor(c, 9), DomainError);
    CHECK_THROWS_AS(condition6_competitor(fixtures::example_a(), 2), DomainError);  // condition 3 fails
    CHECK(condition6_competitor(c, 1) == BinaryMatrix::from_rows(4, {1, 2, 12, 12}));
  }

  TEST_CASE("competitors stay in the class and expose non-canonical matrices") {
    int eligible = 0;
    for (std::uint64_t bits = 0; bits < (1u << 16); ++bits) {
      const auto a = fixtures::nth_matrix(4, 4, bits);
      if (!is_semi_canonical(a)) continue;
      const auto st = row_stats(a);
      for (int i = st.zeta[0]; i < 4; ++i) {
        if (st.eps[i] != st.eps[0] || st.zeta[i] != st.zeta[0]) continue;
        BinaryMatrix rival;
        try {
          rival = condition6_competitor(a, i);
        } catch (const DomainError&) {
          continue;  // conditions 1-5 do not all hold
        }
        ++eligible;
        REQUIRE(oracle::equivalent(rival, a));
        if (row_code(rival) < row_code(a)) REQUIRE_FALSE(oracle_canonical(a));
      }
    }
    CHECK(eligible > 0);
  }

  TEST_CASE("verdicts on the worked examples") {
    const auto a = is_canonical(fixtures::example_a());
    CHECK_FALSE(a.is_canonical);
    CHECK(a.failed_condition == 3);
    CHECK(a.depth == 0);
    CHECK_FALSE(a.witness.empty());

    const auto b = is_canonical(fixtures::example_b());
    CHECK_FALSE(b.is_canonical);
    CHECK(b.failed_condition == 6);

    const auto c = is_canonical(fixtures::example_c());
    CHECK(c.is_canonical);
    CHECK_FALSE(c.failed_condition.has_value());

    CHECK(is_canonical(fixtures::all_ones(3, 3)).is_canonical);
    CHECK(is_canonical(BinaryMatrix(0, 0)).is_canonical);
    CHECK(is_canonical(BinaryMatrix(3, 0)).is_canonical);
    CHECK(is_canonical(BinaryMatrix(0, 3)).is_canonical);

    const auto unsorted = is_canonical(BinaryMatrix::from_rows(2, {2, 1}));
    CHECK(unsorted.failed_condition == 1);
    const auto shape = is_canonical(BinaryMatrix::from_rows(3, {2, 3}));
    CHECK(shape.failed_condition == 2);
    const auto longer = is_canonical(BinaryMatrix::from_rows(3, {1, 2, 2}));
    CHECK(longer.failed_condition == 4);
    const auto columns = is_canonical(BinaryMatrix::from_rows(4, {3, 6}));
    CHECK(columns.failed_condition == 5);
  }

  TEST_CASE("failures deeper in the recursion report their depth") {
    // First block 001; the remaining rows 010, 100, 101 are not minimal
    // under the refined groups (2 | 1).
    bool saw_deep = false;
    for (std::uint64_t bits = 0; bits < (1u << 16) && !saw_deep; ++bits) {
      const auto r = is_canonical(fixtures::nth_matrix(4, 4, bits));
      if (!r.is_canonical && r.depth > 0) saw_deep = true;
    }
    CHECK(saw_deep);
  }

  TEST_CASE("recursive test agrees with brute force on every small matrix") {
    std::vector<std::pair<int, int>> shapes;
    for (int n = 1; n <= 4; ++n)
      for (int m = 1; m <= 4; ++m) shapes.emplace_back(n, m);
    shapes.insert(shapes.end(), {{2, 5}, {5, 2}});
    for (auto [n, m] : shapes) {
      std::uint64_t canonical = 0;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * m)); ++bits) {
        const auto a = fixtures::nth_matrix(n, m, bits);
        const bool fast = is_canonical(a).is_canonical;
        INFO(n << "x" << m << " rows " << bits);
        REQUIRE(fast == oracle_canonical(a));
        if (fast) {
          ++canonical;
          REQUIRE(is_semi_canonical(a));
        }
      }
      CHECK(canonical == oracle::count_classes(n, m));
    }
  }

  TEST_CASE("shortcuts agree with the full evaluation") {
    CanonicityOptions full;
    full.shortcuts = false;
    for (auto [n, m] : {std::pair{3, 3}, std::pair{4, 4}, std::pair{2, 5}}) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * m)); ++bits) {
        const auto a = fixtures::nth_matrix(n, m, bits);
        const auto quick = is_canonical(a);
        const auto slow = is_canonical(a, full);
        REQUIRE(quick.is_canonical == slow.is_canonical);
        REQUIRE(quick.failed_condition == slow.failed_condition);
      }
    }
  }

  TEST_CASE("random larger matrices agree with brute force") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 400; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 4);
      const int m = 3 + static_cast<int>(rng() % 4);
      const auto a = fixtures::random_biased(rng, n, m, 0.2 + 0.6 * (trial % 5) / 4.0);
      const auto rep = oracle::brute_force_canonical(a);
      REQUIRE(is_canonical(rep).is_canonical);
      std::vector<Code> sorted(a.row_codes().begin(), a.row_codes().end());
      std::sort(sorted.begin(), sorted.end());
      const auto s = BinaryMatrix::from_rows(m, sorted);
      REQUIRE(is_canonical(s).is_canonical == (s == rep));
    }
  }

  TEST_CASE("unrefined recursion accepts and rejects the wrong matrices") {
    // Passes the plain conditions, yet <1,2,5> is reachable.
    const auto accepted = BinaryMatrix::from_rows(3, {1, 3, 4});
    CHECK(unrefined_conditions(accepted));
    CHECK_FALSE(oracle_canonical(accepted));
    CHECK_FALSE(is_canonical(accepted).is_canonical);
    CHECK(row_code(oracle::brute_force_canonical(accepted)).values == codes({1, 2, 5}));

    // Canonical, but its left residual block <1,2,2> is not.
    const auto rejected = BinaryMatrix::from_rows(3, {1, 2, 5, 5});
    CHECK_FALSE(unrefined_conditions(rejected));
    CHECK(oracle_canonical(rejected));
    CHECK(is_canonical(rejected).is_canonical);
    CHECK_FALSE(is_canonical(block_decompose(rejected).b_block).is_canonical);
  }

  TEST_CASE("canonicalize") {
    CHECK(canonicalize(fixtures::example_b()) == fixtures::example_c());
    CHECK(canonicalize(fixtures::example_a()) == fixtures::example_c());
    CHECK(canonicalize(fixtures::example_c()) == fixtures::example_c());
    CHECK(canonicalize(BinaryMatrix(0, 4)) == BinaryMatrix(0, 4));
    CHECK(canonicalize(BinaryMatrix(2, 0)) == BinaryMatrix(2, 0));

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 500; ++trial) {
      const auto a = fixtures::random_biased(rng, 5, 5, 0.25 + 0.5 * (trial % 3) / 2.0);
      const auto c = canonicalize(a);
      REQUIRE(c == oracle::brute_force_canonical(a));
      REQUIRE(is_canonical(c).is_canonical);
      REQUIRE(canonicalize(c) == c);
    }
  }

  TEST_CASE("canonicalize handles large highly symmetric matrices") {
    std::vector<Code> identity;
    for (int i = 0; i < 32; ++i) identity.push_back(Code{1} << i);
    const auto a = BinaryMatrix::from_rows(32, identity);
    std::vector<Code> sorted = identity;
    std::sort(sorted.begin(), sorted.end());
    const auto c = canonicalize(a);
    CHECK(c == BinaryMatrix::from_rows(32, sorted));
    CHECK(is_canonical(c).is_canonical);

    std::mt19937_64 rng(44);
    const auto big = fixtures::random_matrix(rng, 20, 20);
    const auto moved = apply_perms(big, fixtures::random_permutation(rng, 20), fixtures::random_permutation(rng, 20));
    CHECK(canonicalize(big) == canonicalize(moved));
  }

  TEST_CASE("node limit") {
    CanonizeOptions tight;
    tight.node_limit = 2;
    CHECK_THROWS_AS(canonicalize(fixtures::example_b(), tight), ResourceError);
  }

  TEST_CASE("grouped canonical forms match a grouped brute force") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 5);
      const int m = 2 + static_cast<int>(rng() % 4);
      std::vector<int> sizes;
      for (int left = m; left > 0;) {
        const int g = 1 + static_cast<int>(rng() % left);
        sizes.push_back(g);
        left -= g;
      }
      const auto a = fixtures::random_matrix(rng, n, m);
      const auto expected = grouped_minimum(a, sizes);
      const auto c = canonicalize_grouped(a, sizes);
      REQUIRE(row_code(c).values == expected);
      REQUIRE(is_canonical_grouped(c, sizes).is_canonical);
      std::vector<Code> sorted(a.row_codes().begin(), a.row_codes().end());
      std::sort(sorted.begin(), sorted.end());
      const auto s = BinaryMatrix::from_rows(m, sorted);
      REQUIRE(is_canonical_grouped(s, sizes).is_canonical == (sorted == expected));
    }
    CHECK_THROWS_AS(canonicalize_grouped(BinaryMatrix(2, 3), std::vector<int>{1, 1}), DomainError);
    CHECK_THROWS_AS(canonicalize_grouped(BinaryMatrix(2, 3), std::vector<int>{3, 0}), DomainError);
  }
}
