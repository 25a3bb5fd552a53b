#include <doctest.h>

#include <random>

#include "crl/linalg.hpp"

using namespace crl;
using namespace crl::linalg;

namespace {

IntegerMatrix Z(std::initializer_list<std::initializer_list<long>> rows) {
  IntegerMatrix m;
  for (const auto& r : rows) {
    IntegerRow row;
    for (long v : r) row.emplace_back(v);
    m.push_back(std::move(row));
  }
  return m;
}

bool in_kernel(const IntegerMatrix& m, const RationalRow& v) {
  for (const auto& r : multiply(m, primitive_integer_vector(v)))
    if (r != 0) return false;
  return true;
}

// Random integer matrix of the given rank: a product of random factors.
IntegerMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t rank, int range) {
  std::uniform_int_distribution<int> c(-range, range);
  IntegerMatrix a(rows, IntegerRow(rank));
  IntegerMatrix b(rank, IntegerRow(cols));
  for (auto& r : a)
    for (auto& x : r) x = c(rng);
  for (auto& r : b)
    for (auto& x : r) x = c(rng);
  IntegerMatrix out(rows, IntegerRow(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < rank; ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace

TEST_CASE("rref and nullspace of small matrices") {
  const IntegerMatrix m = Z({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const Echelon e = rref(to_rational(m), 3);
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.rows[0] == RationalRow{1, 0, 1});
  CHECK(e.rows[1] == RationalRow{0, 1, 1});
  const RationalMatrix k = nullspace(to_rational(m), 3);
  REQUIRE(k.size() == 1);
  CHECK(primitive_integer_vector(k[0]) == std::vector<Integer>{1, 1, -1});
  CHECK(rank(to_rational(m), 3) == 2);
  CHECK(nullspace(RationalMatrix{}, 2).size() == 2);
  CHECK(nullspace(to_rational(Z({{1, 0}, {0, 1}})), 2).empty());
}

TEST_CASE("primitive integer vectors") {
  CHECK(primitive_integer_vector({Rational(0), Rational(-2, 3), Rational(4, 9)}) == std::vector<Integer>{0, 3, -2});
  CHECK(primitive_integer_vector({Rational(1, 2), Rational(1, 3)}) == std::vector<Integer>{3, 2});
}

TEST_CASE("rational reconstruction") {
  const Integer n = Integer(2147483647) * Integer(2147483629);
  for (const auto& q : {Rational(3, 7), Rational(-22, 15), Rational(0), Rational(1000003, 999)}) {
    Integer inv;
    const Integer den = q.get_den();
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
    Integer a = q.get_num() * inv % n;
    if (a < 0) a += n;
    Rational out;
    REQUIRE(rational_reconstruct(a, n, out));
    CHECK(out == q);
  }
  Rational out;
  REQUIRE(rational_reconstruct(Integer(50), Integer(101), out));
  CHECK(out == Rational(-1, 2));
  CHECK_FALSE(rational_reconstruct(Integer(10), Integer(101), out));
}

TEST_CASE("elimination mod p") {
  const IntegerMatrix m = Z({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}, {0, 2, 2}});
  const ModularEchelon e = rref_mod_p(m, 3, 101);
  CHECK(e.rank() == 2);
  CHECK(e.independent_rows == std::vector<std::size_t>{0, 2});
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(rank_mod_p(Z({{2, 4}, {1, 3}}), 2, 3) == 2);
  // 5 is a bad prime for this matrix.
  CHECK(rank_mod_p(Z({{1, 2}, {3, 1}}), 2, 5) == 1);
  CHECK(rank_mod_p(Z({{1, 2}, {3, 1}}), 2, 7) == 2);
}

TEST_CASE("certified nullspace matches exact elimination on random matrices") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> dim(1, 12);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, std::min(rows, cols))(rng);
    const IntegerMatrix m = random_matrix(rng, rows, cols, r, trial % 2 ? 9 : 100000);
    const CertifiedKernel k = certified_nullspace(m, cols, {2147483647u});
    CAPTURE(trial);
    CHECK(k.certified);
    CHECK(k.basis == nullspace(to_rational(m), cols));
    CHECK(k.rank == rank(to_rational(m), cols));
    for (const auto& v : k.basis) CHECK(in_kernel(m, v));
  }
}

TEST_CASE("certified nullspace survives bad primes") {
  // Determinant 7 * 11: singular mod both starting primes.
  const IntegerMatrix m = Z({{7, 0}, {0, 11}});
  const CertifiedKernel k = certified_nullspace(m, 2, {7u, 11u});
  CHECK(k.certified);
  CHECK(k.rank == 2);
  CHECK(k.basis.empty());

  // Kernel entries with large numerators and denominators need several primes.
  const IntegerMatrix big = Z({{1000003, 999983, 0}, {0, 1000033, 1000037}});
  const CertifiedKernel kb = certified_nullspace(big, 3, {101u});
  CHECK(kb.certified);
  CHECK(kb.basis == nullspace(to_rational(big), 3));
  CHECK(kb.primes_used > 1);
}

TEST_CASE("integer matrix-vector product") {
  CHECK(multiply(Z({{1, 2}, {3, 4}}), {Integer(1), Integer(-1)}) == IntegerRow{-1, -1});
}
