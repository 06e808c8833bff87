#include <doctest.h>

#include <random>

#include "artinian/matrix.hpp"
#include "support.hpp"

using namespace artinian;
using testing_support::f101;

TEST_CASE("rref of the identity over Q") {
  RationalField q;
  auto r = rref(ExactMatrix<RationalField>::identity(q, 2));
  CHECK(r.rank == 2);
  CHECK(r.kernel_basis.empty());
  CHECK(r.pivot_columns == std::vector<Index>{0, 1});
}

TEST_CASE("rref of a zero 3x4 matrix") {
  RationalField q;
  auto r = rref(ExactMatrix<RationalField>(q, 3, 4));
  CHECK(r.rank == 0);
  CHECK(r.kernel_basis.size() == 4);
}

TEST_CASE("rref of [[1,2],[2,4]] over F_101") {
  auto m = ExactMatrix<PrimeField>::from_rows(f101(), {{1, 2}, {2, 4}});
  auto r = rref(m);
  CHECK(r.rank == 1);
  REQUIRE(r.kernel_basis.size() == 1);
  auto v = r.kernel_basis[0];
  ExactMatrix<PrimeField> col = ExactMatrix<PrimeField>::from_columns(f101(), 2, {v});
  CHECK(matmul(m, col).is_zero());
  // Proportional to (2, -1).
  auto a = col.at(0, 0), b = col.at(1, 0);
  CHECK(f101().mul(a, f101().from_int(-1)) == f101().mul(b, 2));
}

TEST_CASE("matmul examples") {
  RationalField q;
  auto m = ExactMatrix<RationalField>::from_rows(q, {{1, 1}, {0, 1}});
  CHECK(matmul(ExactMatrix<RationalField>::identity(q, 2), m) == m);
  CHECK(matmul(m, ExactMatrix<RationalField>(q, 2, 3)).is_zero());
  CHECK(matmul(m, m) == ExactMatrix<RationalField>::from_rows(q, {{1, 2}, {0, 1}}));
  CHECK_THROWS_AS(matmul(m, ExactMatrix<RationalField>(q, 3, 1)), DimensionMismatch);
}

TEST_CASE("mixed prime fields are rejected") {
  PrimeField a(101), b(7);
  auto x = ExactMatrix<PrimeField>::identity(a, 2);
  auto y = ExactMatrix<PrimeField>::identity(b, 2);
  CHECK_THROWS_AS(matmul(x, y), FieldMismatch);
}

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("F101") == FieldSpec::prime(101));
  CHECK(FieldSpec::prime(101).name() == "F101");
  CHECK_THROWS(FieldSpec::prime(100));
  PrimeField f(101);
  for (long long a = 1; a < 101; ++a) CHECK(f.mul(static_cast<std::uint32_t>(a), f.inv(static_cast<std::uint32_t>(a))) == 1);
}

namespace {

template <class F>
ExactMatrix<F> random_matrix(const F& field, std::mt19937_64& rng, Index r, Index c, int density) {
  std::vector<std::vector<long long>> rows(r, std::vector<long long>(c, 0));
  std::uniform_int_distribution<int> pick(0, 99), val(-50, 50);
  for (auto& row : rows)
    for (auto& x : row)
      if (pick(rng) < density) x = val(rng);
  return ExactMatrix<F>::from_rows(field, rows);
}

}  // namespace

TEST_CASE("rank is transpose invariant and rref is idempotent") {
  std::mt19937_64 rng(5);
  RationalField q;
  for (int trial = 0; trial < 40; ++trial) {
    Index r = 1 + rng() % 9, c = 1 + rng() % 9;
    auto mp = random_matrix(f101(), rng, r, c, 40);
    auto mq = random_matrix(q, rng, r, c, 40);
    CHECK(rank(mp) == rank(mp.transpose()));
    CHECK(rank(mq) == rank(mq.transpose()));
    auto first = rref(mp);
    CHECK(first.rank + first.kernel_basis.size() == c);
    for (const auto& v : first.kernel_basis)
      CHECK(mp.apply(v).empty());
    // Row space basis: the rows of the reduced form give the same rank and pivots.
    std::vector<SparseVector<PrimeField>> rows;
    Echelon<PrimeField> ech(f101(), c);
    auto t = mp.transpose();
    for (Index i = 0; i < t.cols(); ++i) ech.insert(t.column(i));
    auto reduced = ExactMatrix<PrimeField>::from_columns(f101(), c, ech.rows()).transpose();
    auto second = rref(reduced);
    CHECK(second.rank == first.rank);
    CHECK(second.pivot_columns == first.pivot_columns);
  }
}

TEST_CASE("prime field arithmetic agrees with reduced integer arithmetic") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> val(-100000, 100000);
  PrimeField f(101);
  auto red = [](long long v) { return static_cast<std::uint32_t>(((v % 101) + 101) % 101); };
  for (int i = 0; i < 1000; ++i) {
    long long a = val(rng), b = val(rng);
    CHECK(f.add(f.from_int(a), f.from_int(b)) == red(a + b));
    CHECK(f.sub(f.from_int(a), f.from_int(b)) == red(a - b));
    CHECK(f.mul(f.from_int(a), f.from_int(b)) == red((a % 101) * (b % 101)));
  }
  // Product of random integer matrices reduced mod p.
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<long long>> a(4, std::vector<long long>(5)), b(5, std::vector<long long>(3));
    for (auto& r : a)
      for (auto& x : r) x = val(rng) % 1000;
    for (auto& r : b)
      for (auto& x : r) x = val(rng) % 1000;
    auto prod = matmul(ExactMatrix<PrimeField>::from_rows(f, a), ExactMatrix<PrimeField>::from_rows(f, b));
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 3; ++j) {
        long long s = 0;
        for (int k = 0; k < 5; ++k) s += a[i][k] * b[k][j];
        CHECK(prod.at(i, j) == red(s));
      }
  }
}

TEST_CASE("rank agrees with the oracle over F_101") {
  std::mt19937_64 rng(21);
  oracle::Fp of{101};
  for (int trial = 0; trial < 30; ++trial) {
    Index r = 1 + rng() % 12, c = 1 + rng() % 12;
    std::vector<std::vector<long long>> rows(r, std::vector<long long>(c, 0));
    for (auto& row : rows)
      for (auto& x : row)
        if (rng() % 3 == 0) x = static_cast<long long>(rng() % 101);
    CHECK(rank(ExactMatrix<PrimeField>::from_rows(f101(), rows)) == oracle::rank(of, rows));
  }
}
