#include "shadowidx/f2_linalg.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

namespace {

f2::bit_matrix from_ints(const std::vector<std::vector<int>>& rows) {
  f2::bit_matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] & 1) m.set(r, c);
  return m;
}

f2::bit_vector vec_from_ints(const std::vector<int>& v) {
  f2::bit_vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] & 1) out.set(i);
  return out;
}

}  // namespace

TEST_SUITE("f2_linalg") {

TEST_CASE("duplicate rows collapse to rank 1") {
  auto m = from_ints({{1, 1}, {1, 1}});
  auto rr = f2::row_reduce(m);
  CHECK(rr.rank() == 1);
  REQUIRE(rr.pivots.size() == 1);
  CHECK(rr.pivots[0] == 0);
}

TEST_CASE("identity has full rank") {
  auto m = from_ints({{1, 0}, {0, 1}});
  auto rr = f2::row_reduce(m);
  CHECK(rr.rank() == 2);
  CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rank agrees with the naive eliminator on random 64x64 matrices") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<int>> rows(64, std::vector<int>(64));
    for (auto& r : rows)
      for (auto& x : r) x = int(rng() & 1);
    auto rr = f2::row_reduce(from_ints(rows));
    CHECK(int(rr.rank()) == oracle::rank_mod2(rows));
  }
}

TEST_CASE("zero vector and matrix rows are always in the rowspace") {
  std::mt19937_64 rng(5);
  std::vector<std::vector<int>> rows(8, std::vector<int>(20));
  for (auto& r : rows)
    for (auto& x : r) x = int(rng() & 1);
  auto m = from_ints(rows);
  CHECK(f2::in_rowspace(f2::bit_vector(20), m));
  for (const auto& r : rows) CHECK(f2::in_rowspace(vec_from_ints(r), m));
}

TEST_CASE("membership agrees with exhaustive subset sums") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int nrows = 1 + int(rng() % 12);
    int ncols = 4 + int(rng() % 12);
    std::vector<std::vector<int>> rows(nrows, std::vector<int>(ncols));
    for (auto& r : rows)
      for (auto& x : r) x = int(rng() & 1);
    std::vector<int> v(ncols);
    for (auto& x : v) x = int(rng() & 1);
    bool expect = oracle::subset_membership_mod2(v, rows);
    CHECK(f2::in_rowspace(vec_from_ints(v), from_ints(rows)) == expect);
  }
}

TEST_CASE("length mismatch is rejected") {
  auto m = from_ints({{1, 0, 1}});
  CHECK_THROWS_AS((void)f2::in_rowspace(f2::bit_vector(2), m), std::invalid_argument);
}

TEST_CASE("rank is bounded and permutation invariant") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    int nrows = 1 + int(rng() % 10);
    int ncols = 1 + int(rng() % 10);
    std::vector<std::vector<int>> rows(nrows, std::vector<int>(ncols));
    for (auto& r : rows)
      for (auto& x : r) x = int(rng() & 1);
    auto rank0 = f2::row_reduce(from_ints(rows)).rank();
    CHECK(rank0 <= std::min<std::size_t>(nrows, ncols));
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(f2::row_reduce(from_ints(rows)).rank() == rank0);
  }
}

TEST_CASE("rowspace membership is closed under addition") {
  std::mt19937_64 rng(7);
  std::vector<std::vector<int>> rows(6, std::vector<int>(16));
  for (auto& r : rows)
    for (auto& x : r) x = int(rng() & 1);
  auto m = from_ints(rows);
  auto rr = f2::row_reduce(m);
  // u = row0 + row2, v = row1 + row2: both members, so u + v must be too
  f2::bit_vector u(16), v(16), w(16);
  for (int c = 0; c < 16; ++c) {
    if ((rows[0][c] ^ rows[2][c]) & 1) u.set(c);
    if ((rows[1][c] ^ rows[2][c]) & 1) v.set(c);
    if ((rows[0][c] ^ rows[1][c]) & 1) w.set(c);  // u + v
  }
  REQUIRE(f2::in_rowspace(u, rr));
  REQUIRE(f2::in_rowspace(v, rr));
  CHECK(f2::in_rowspace(w, rr));
}

TEST_CASE("reduce_vector returns a residual supported off the pivots") {
  std::mt19937_64 rng(31);
  std::vector<std::vector<int>> rows(10, std::vector<int>(24));
  for (auto& r : rows)
    for (auto& x : r) x = int(rng() & 1);
  auto rr = f2::row_reduce(from_ints(rows));
  for (int trial = 0; trial < 20; ++trial) {
    f2::bit_vector v(24);
    for (int c = 0; c < 24; ++c)
      if (rng() & 1) v.set(c);
    auto res = f2::reduce_vector(rr, v);
    for (auto p : rr.pivots) CHECK_FALSE(res.get(p));
    // residual differs from v by a rowspace element
    f2::bit_vector diff(24);
    for (int c = 0; c < 24; ++c)
      if (v.get(c) != res.get(c)) diff.set(c);
    CHECK(f2::in_rowspace(diff, rr));
  }
}

}  // TEST_SUITE
