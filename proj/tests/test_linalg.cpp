#include <catch2/catch.hpp>

#include "brauer/linalg.hpp"
#include "test_rng.hpp"

using namespace brauer;

namespace {

SparseMatrix identity_matrix(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

SparseMatrix random_matrix(TestRng& rng, int rows, int cols, int fill_percent) {
  SparseMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (rng.below(100) < static_cast<unsigned>(fill_percent))
        m.set(r, c, make_rational(static_cast<long>(rng.below(19)) - 9,
                                  static_cast<long>(rng.below(4)) + 1));
  return m;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
  SparseMatrix zero(5, 7);
  CHECK(zero.rank() == 0);
  CHECK(identity_matrix(6).rank() == 6);

  SparseMatrix ones(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) ones.set(r, c, Rational(1));
  CHECK(ones.rank() == 1);
}

TEST_CASE("nullspace basics") {
  CHECK(identity_matrix(4).nullspace().empty());

  SparseMatrix m(1, 2);
  m.set(0, 0, Rational(1));
  m.set(0, 1, Rational(-1));
  auto ns = m.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == Rational(1));
  CHECK(ns[0][1] == Rational(1));
}

TEST_CASE("nullspace vectors are annihilated and complete") {
  TestRng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    SparseMatrix m = random_matrix(rng, 12, 17, 30);
    auto ns = m.nullspace();
    CHECK(static_cast<int>(ns.size()) + m.rank() == m.col_count());
    for (const auto& v : ns) {
      auto image = m.apply(v);
      for (const auto& x : image) CHECK(sgn(x) == 0);
    }
  }
}

TEST_CASE("rank equals rank of transpose on random sparse rationals") {
  TestRng rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    SparseMatrix m = random_matrix(rng, 30, 50, 12);
    CHECK(m.rank() == m.transpose().rank());
  }
}

TEST_CASE("rank invariant under row scaling and permutation") {
  TestRng rng(23);
  SparseMatrix m = random_matrix(rng, 20, 25, 20);
  int base = m.rank();

  SparseMatrix scaled(20, 25);
  SparseMatrix permuted(20, 25);
  std::vector<int> perm(20);
  for (int i = 0; i < 20; ++i) perm[i] = i;
  for (int i = 19; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  std::vector<Rational> factors;
  for (int i = 0; i < 20; ++i)
    factors.push_back(make_rational(static_cast<long>(rng.below(9)) + 1,
                                    static_cast<long>(rng.below(5)) + 1));
  for (const auto& [rc, v] : m.entries()) {
    scaled.set(rc.first, rc.second, v * factors[rc.first]);
    permuted.set(perm[rc.first], rc.second, v);
  }
  CHECK(scaled.rank() == base);
  CHECK(permuted.rank() == base);
}

TEST_CASE("span_saturate fixed points and closures") {
  std::vector<Rational> e1{Rational(1), Rational(0), Rational(0)};

  auto keep = [](const std::vector<Rational>& v) {
    return std::vector<std::vector<Rational>>{v};
  };
  auto fixed = span_saturate({e1}, keep);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0][0] == Rational(1));

  auto shift = [](const std::vector<Rational>& v) {
    std::vector<Rational> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[(i + 1) % v.size()] = v[i];
    return std::vector<std::vector<Rational>>{w};
  };
  CHECK(span_saturate({e1}, shift).size() == 3);

  auto none = span_saturate({std::vector<Rational>(3, Rational(0))}, keep);
  CHECK(none.empty());

  // Closure dimension does not depend on seed order.
  std::vector<Rational> v1{Rational(1), Rational(2), Rational(0)};
  std::vector<Rational> v2{Rational(0), Rational(1), Rational(1)};
  auto a = span_saturate({v1, v2}, shift);
  auto b = span_saturate({v2, v1}, shift);
  CHECK(a == b);
}

TEST_CASE("escalation to big integers keeps results exact") {
  // Hilbert-like dense matrix: badly conditioned, exact rank must be full.
  int n = 12;
  SparseMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.set(r, c, make_rational(1, r + c + 1));
  CHECK(m.rank() == n);

  // Large entries force the mpz backend immediately.
  SparseMatrix big(2, 2);
  Rational huge(Int("123456789123456789123456789"));
  big.set(0, 0, huge);
  big.set(0, 1, Rational(1));
  big.set(1, 0, huge * 2);
  big.set(1, 1, Rational(2));
  CHECK(big.rank() == 1);
  CHECK(big.nullspace().size() == 1);
}
