#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixglue/bitmatrix.hpp"
#include "oracles.hpp"

using namespace fixglue;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  BitMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (rng() & 1) m.set(i, j, true);
  return m;
}

}  // namespace

TEST_CASE("rref: duplicate rows collapse") {
  auto rr = rref(BitMatrix::from_strings({"11", "11"}));
  CHECK(rr.mat == BitMatrix::from_strings({"11"}));
  CHECK(rr.pivots == std::vector<int>{0});
}

TEST_CASE("rref: identity is its own rref") {
  auto id = BitMatrix::identity(3);
  auto rr = rref(id);
  CHECK(rr.mat == id);
  CHECK(rr.pivots == std::vector<int>{0, 1, 2});
}

TEST_CASE("rref: hand-checked elimination") {
  auto rr = rref(BitMatrix::from_strings({"011", "110"}));
  CHECK(rr.mat == BitMatrix::from_strings({"101", "011"}));
  CHECK(rr.pivots == std::vector<int>{0, 1});
  // row space preserved
  CHECK(oracle::span_set(rr.mat) == oracle::span_set(BitMatrix::from_strings({"011", "110"})));
}

TEST_CASE("kernel_basis: trivial cases") {
  CHECK(kernel_basis(BitMatrix(2, 3)).rows() == 3);  // zero map
  CHECK(kernel_basis(BitMatrix::identity(3)).rows() == 0);
  auto kb = kernel_basis(BitMatrix::from_strings({"110", "011"}));
  CHECK(kb == BitMatrix::from_strings({"111"}));
}

TEST_CASE("dual_basis examples") {
  CHECK(dual_basis(BitMatrix::identity(2), 2).rows() == 0);
  CHECK(dual_basis(BitMatrix::from_strings({"110", "011"}), 3) == BitMatrix::from_strings({"111"}));
}

TEST_CASE("sum and intersection: trivial cases") {
  auto a = BitMatrix::from_strings({"10"});
  auto b = BitMatrix::from_strings({"01"});
  CHECK(sum_spaces(a, a) == rref(a).mat);
  CHECK(sum_spaces(a, b) == BitMatrix::identity(2));
  CHECK(intersect_spaces(a, a) == rref(a).mat);
  CHECK(intersect_spaces(a, b).rows() == 0);
}

TEST_CASE("contains basics") {
  BitVec zero(3);
  CHECK(space_contains(BitMatrix::from_strings({"110"}), zero));
  CHECK(space_contains(BitMatrix::from_strings({"110"}), BitVec::from_string("110")));
  CHECK(space_contains(BitMatrix::from_strings({"110", "011"}), BitVec::from_string("101")));
  CHECK_FALSE(space_contains(BitMatrix::from_strings({"110"}), BitVec::from_string("011")));
}

TEST_CASE("property: rank-nullity, biduality, dimension identity") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 1 + static_cast<int>(rng() % 64);
    int rows = static_cast<int>(rng() % 12);
    BitMatrix m = random_matrix(rng, rows, n);
    int r = rank(m);
    BitMatrix k = kernel_basis(m);
    CHECK(r + k.rows() == n);
    // kernel rows really are in the kernel
    for (int i = 0; i < k.rows(); ++i)
      for (int j = 0; j < m.rows(); ++j) CHECK_FALSE(k.row(i).dot(m.row(j)));

    BitMatrix dd = dual_basis(dual_basis(m, n), n);
    CHECK(dd == rref(m).mat);

    BitMatrix b = random_matrix(rng, static_cast<int>(rng() % 12), n);
    int ds = sum_spaces(m, b).rows();
    int di = intersect_spaces(m, b).rows();
    CHECK(ds + di == r + rank(b));
  }
}

TEST_CASE("property: contains agrees with span enumeration (dim <= 12)") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 4 + static_cast<int>(rng() % 9);
    BitMatrix m = random_matrix(rng, 1 + static_cast<int>(rng() % 6), n);
    auto span = oracle::span_set(m);
    for (int t = 0; t < 40; ++t) {
      BitVec v(n);
      for (int j = 0; j < n; ++j)
        if (rng() & 1) v.set(j, true);
      CHECK(space_contains(m, v) == (span.count(v.to_string()) > 0));
    }
  }
}

TEST_CASE("property: intersection equals brute-force span intersection") {
  std::mt19937_64 rng(999);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 8;
    BitMatrix a = random_matrix(rng, 1 + static_cast<int>(rng() % 5), n);
    BitMatrix b = random_matrix(rng, 1 + static_cast<int>(rng() % 5), n);
    auto sa = oracle::span_set(a), sb = oracle::span_set(b);
    std::set<std::string> expect;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(expect, expect.end()));
    CHECK(oracle::span_set(intersect_spaces(a, b)) == expect);
    // sum equals brute-force span of the union
    BitMatrix stacked = a;
    stacked.append_rows(b);
    CHECK(oracle::span_set(sum_spaces(a, b)) == oracle::span_set(stacked));
  }
}
