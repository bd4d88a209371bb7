#include "bicanon/enumerate.hpp"

#include <json.hpp>
#include <numeric>
#include <sstream>

#include "bicanon/canonical.hpp"
#include "bicanon/errors.hpp"
#include "parallel.hpp"

namespace bicanon {

namespace {

void check_shape(int n, int m) {
  if (n < 0 || m < 0 || n > kMaxEnumerationSide || m > kMaxEnumerationSide) {
    throw DomainError("enumeration sides must be in [0, " + std::to_string(kMaxEnumerationSide) +
                      "], got " + std::to_string(n) + "x" + std::to_string(m));
  }
}

// Backtracking state shared by both families. Adjacent column pairs are kept
// as a bitmask: bit p stands for the pair (column at bit p+1, column at bit p).
// A pair stays "tied" while every row so far agrees on both columns; the first
// row that separates them must put its 1 on the right.
class Generator {
 public:
  Generator(Family family, int n, int m)
      : family_(family), n_(n), m_(m), max_code_(low_mask(m)), pairs_(low_mask(m > 0 ? m - 1 : 0)) {
    rows_.resize(static_cast<std::size_t>(n));
  }

  struct Prefix {
    int depth = 0;
    Code tied = 0;
    int ones = 0;
  };

  Prefix root() const { return {0, pairs_, 0}; }

  // Tries to append x; returns false when the branch is dead.
  bool extend(const Prefix& p, Code x, Prefix& out) {
    const Code left = x >> 1;
    if ((p.tied & left & ~x) != 0) return false;
    if (family_ == Family::canonical) {
      if (p.depth == 0) {
        if (x != low_mask(popcount(x))) return false;
      } else if (popcount(x) < popcount(rows_[0])) {
        return false;
      }
    }
    rows_[p.depth] = x;
    out = {p.depth + 1, p.tied & ~(left ^ x), p.ones + popcount(x)};
    return true;
  }

  Code row(int i) const { return rows_[i]; }

  // Visits every completion of p in increasing order.
  template <class Leaf>
  void complete(const Prefix& p, Leaf&& leaf) {
    if (p.depth == n_) {
      if (accept()) leaf(rows_, p.ones);
      return;
    }
    const Code start = p.depth == 0 ? 0 : rows_[p.depth - 1];
    Prefix next;
    for (Code x = start;; ++x) {
      if (extend(p, x, next)) complete(next, leaf);
      if (x == max_code_) break;
    }
  }

  int rows() const { return n_; }
  Code max_code() const { return max_code_; }

 private:
  bool accept() {
    if (family_ == Family::semi_canonical) return true;
    CanonicityOptions options;
    options.witness = false;
    return is_canonical(BinaryMatrix::from_rows(m_, rows_), options).is_canonical;
  }

  Family family_;
  int n_;
  int m_;
  Code max_code_;
  Code pairs_;
  std::vector<Code> rows_;
};

// Independent subtrees: the first one or two rows, in increasing order.
std::vector<std::vector<Code>> split_prefixes(Family family, int n, int m) {
  Generator g(family, n, m);
  std::vector<std::vector<Code>> out;
  const int depth = std::min(n, 2);
  std::vector<Code> chosen;
  auto walk = [&](auto&& self, const Generator::Prefix& p) -> void {
    if (p.depth == depth) {
      out.push_back(chosen);
      return;
    }
    const Code start = p.depth == 0 ? 0 : chosen.back();
    Generator::Prefix next;
    for (Code x = start;; ++x) {
      if (g.extend(p, x, next)) {
        chosen.push_back(x);
        self(self, next);
        chosen.pop_back();
      }
      if (x == g.max_code()) break;
    }
  };
  walk(walk, g.root());
  return out;
}

// Runs leaf(rows, ones) over the subtree below `prefix` with a private generator.
template <class Leaf>
void run_subtree(Family family, int n, int m, const std::vector<Code>& prefix, Leaf&& leaf) {
  Generator g(family, n, m);
  Generator::Prefix p = g.root();
  for (Code x : prefix) {
    Generator::Prefix next;
    g.extend(p, x, next);
    p = next;
  }
  g.complete(p, leaf);
}

CountTable empty_table(int n, int m) {
  CountTable t;
  t.n = n;
  t.m = m;
  t.by_ones.assign(static_cast<std::size_t>(n * m + 1), 0);
  return t;
}

}  // namespace

bool CountTable::is_palindromic() const {
  for (std::size_t k = 0, j = by_ones.size(); k < j; ++k) {
    --j;
    if (by_ones[k] != by_ones[j]) return false;
  }
  return true;
}

std::string CountTable::to_csv() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < by_ones.size(); ++k) os << k << ',' << by_ones[k] << '\n';
  return os.str();
}

std::string CountTable::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["m"] = m;
  j["by_ones"] = by_ones;
  j["total"] = total;
  return j.dump();
}

void for_each_matrix(Family family, int n, int m,
                     const std::function<void(const BinaryMatrix&)>& visit, unsigned jobs) {
  check_shape(n, m);
  if (n == 0 || m == 0) {
    // A single matrix; for m == 0 every row code is 0.
    visit(BinaryMatrix(n, m));
    return;
  }
  const auto prefixes = split_prefixes(family, n, m);
  jobs = detail::resolve_jobs(jobs);
  if (jobs == 1) {
    for (const auto& prefix : prefixes) {
      run_subtree(family, n, m, prefix, [&](const std::vector<Code>& rows, int) {
        visit(BinaryMatrix::from_rows(m, rows));
      });
    }
    return;
  }
  std::vector<std::vector<BinaryMatrix>> buckets(prefixes.size());
  detail::parallel_for(prefixes.size(), jobs, [&](std::size_t i) {
    run_subtree(family, n, m, prefixes[i], [&](const std::vector<Code>& rows, int) {
      buckets[i].push_back(BinaryMatrix::from_rows(m, rows));
    });
  });
  for (auto& bucket : buckets)
    for (const auto& a : bucket) visit(a);
}

std::vector<BinaryMatrix> enumerate_semi_canonical(int n, int m, unsigned jobs) {
  std::vector<BinaryMatrix> out;
  for_each_matrix(Family::semi_canonical, n, m, [&](const BinaryMatrix& a) { out.push_back(a); }, jobs);
  return out;
}

std::vector<BinaryMatrix> enumerate_canonical(int n, int m, unsigned jobs) {
  std::vector<BinaryMatrix> out;
  for_each_matrix(Family::canonical, n, m, [&](const BinaryMatrix& a) { out.push_back(a); }, jobs);
  return out;
}

CountTable count_family(Family family, int n, int m, unsigned jobs) {
  check_shape(n, m);
  CountTable table = empty_table(n, m);
  if (n == 0 || m == 0) {
    table.by_ones[0] = 1;
    table.total = 1;
    return table;
  }
  const auto prefixes = split_prefixes(family, n, m);
  std::vector<std::vector<std::uint64_t>> partial(prefixes.size());
  detail::parallel_for(prefixes.size(), jobs, [&](std::size_t i) {
    auto& counts = partial[i];
    counts.assign(table.by_ones.size(), 0);
    run_subtree(family, n, m, prefixes[i], [&](const std::vector<Code>&, int ones) { ++counts[ones]; });
  });
  for (const auto& counts : partial)
    for (std::size_t k = 0; k < counts.size(); ++k) table.by_ones[k] += counts[k];
  table.total = std::accumulate(table.by_ones.begin(), table.by_ones.end(), std::uint64_t{0});
  return table;
}

CountTable count_semi_canonical(int n, int m, unsigned jobs) {
  return count_family(Family::semi_canonical, n, m, jobs);
}

CountTable count_canonical(int n, int m, unsigned jobs) {
  return count_family(Family::canonical, n, m, jobs);
}

}  // namespace bicanon
