#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

mpq_class random_mpq(std::mt19937_64& g, long num_bits) {
  mpz_class n = 0, d = 0;
  for (long b = 0; b < num_bits; b += 16) n = n * 65536 + uniform(g, 0, 65535);
  for (long b = 0; b < num_bits / 2; b += 16) d = d * 65536 + uniform(g, 0, 65535);
  if (d == 0) d = 1;
  if (uniform(g, 0, 1)) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("rational arithmetic agrees with GMP across the int64 boundary") {
  auto g = rng(11);
  for (int it = 0; it < 3000; ++it) {
    long bits = 16 * uniform(g, 1, 6);
    mpq_class a = random_mpq(g, bits), b = random_mpq(g, bits);
    Scalar x(a), y(b);
    CHECK((x + y).rational() == a + b);
    CHECK((x - y).rational() == a - b);
    CHECK((x * y).rational() == a * b);
    if (b != 0) CHECK((x / y).rational() == a / b);
    CHECK((x == y) == (a == b));
  }
}

TEST_CASE("long product chains leave and reenter the fast path") {
  Scalar x(1);
  mpq_class q = 1;
  for (long k = 2; k < 60; ++k) {
    x *= Scalar(k, k + 1);
    q *= mpq_class(k, k + 1);
  }
  CHECK(x.rational() == q);
  Scalar big(mpq_class("123456789012345678901234567890"));
  Scalar back = big * big.inv();
  CHECK(back.is_one());
  CHECK((big - big).is_zero());
}

TEST_CASE("prime field arithmetic matches residues") {
  Field f = Field::prime(101);
  for (long a = 0; a < 101; ++a)
    for (long b = 0; b < 101; b += 7) {
      Scalar x = f.make(a), y = f.make(b);
      CHECK((x * y).residue() == static_cast<std::uint64_t>((a * b) % 101));
      CHECK((x + y).residue() == static_cast<std::uint64_t>((a + b) % 101));
      if (a) CHECK((x * x.inv()).is_one());
    }
  CHECK(f.coerce(Scalar(1, 2)) == f.make(51));
  CHECK(f.make(-1).residue() == 100);
  CHECK(f.parse_scalar("3/4") * f.make(4) == f.make(3));
}

TEST_CASE("field specs") {
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("Fp:5").characteristic() == 5);
  CHECK_THROWS(Field::parse("R"));
  CHECK_THROWS(Field::parse("Fp:x"));
  CHECK_THROWS(Field::rationals().parse_scalar("1/0"));
  CHECK(Field::rationals().parse_scalar("-6/8") == Scalar(-3, 4));
  CHECK(Scalar(-3, 4).str() == "-3/4");
}

TEST_CASE("rank, kernel and solve on random low-rank products") {
  auto g = rng(3);
  Field q = Field::rationals();
  for (int it = 0; it < 40; ++it) {
    std::size_t r = uniform(g, 1, 5), m = uniform(g, r, 8), n = uniform(g, r, 8);
    Matrix a = random_matrix(g, q, m, r), b = random_matrix(g, q, r, n);
    Matrix p = a * b;
    std::size_t k = rank(p);
    CHECK(k <= r);
    Matrix ker = kernel_basis(p);
    CHECK(ker.cols() == n - k);
    CHECK((p * ker).is_zero());
    CHECK(rank(ker) == ker.cols());
    Matrix x0 = random_matrix(g, q, n, 1);
    auto sol = solve(p, p * x0);
    REQUIRE(sol);
    CHECK(p * *sol == p * x0);
    CHECK(same_span(column_basis(p), p));
  }
}

TEST_CASE("inverse of unimodular matrices") {
  auto g = rng(5);
  Field q = Field::rationals();
  for (int it = 0; it < 20; ++it) {
    std::size_t n = uniform(g, 1, 7);
    Matrix l = Matrix::identity(n), u = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        l(i, j) = q.make(uniform(g, -4, 4));
        u(j, i) = q.make(uniform(g, -4, 4));
      }
    Matrix m = l * u;
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(n));
  }
  Matrix sing(2, 2, {Scalar(1), Scalar(2), Scalar(2), Scalar(4)});
  CHECK_FALSE(inverse(sing));
}

TEST_CASE("large ranks with and without the modular certificate") {
  auto g = rng(8);
  Field q = Field::rationals();
  const std::size_t n = 30, r = 20;
  Matrix a(n, r), b(r, n);
  for (std::size_t i = 0; i < r; ++i) a(i, i) = b(i, i) = q.one();
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      a(i, j) = q.make(uniform(g, -9, 9), uniform(g, 1, 5));
      b(j, i) = q.make(uniform(g, -9, 9), uniform(g, 1, 5));
    }
  CHECK(rank(a * b) == r);
  Matrix full = a * b;
  for (std::size_t i = r; i < n; ++i) full(i, i) += q.one();
  CHECK(rank(full) == n);
  // an entry divisible by the certificate prime must not fool the shortcut
  Matrix d = Matrix::identity(24);
  d(0, 0) = Scalar(2147483629L);
  CHECK(rank(d) == 24);
  Matrix e = Matrix::identity(24);
  e(23, 23) = q.zero();
  CHECK(rank(e) == 23);
}

TEST_CASE("tensor contraction matches matrix product") {
  auto g = rng(9);
  Field q = Field::rationals();
  Matrix a = random_matrix(g, q, 3, 4), b = random_matrix(g, q, 4, 2);
  Tensor ta = Tensor::from_matrix(a), tb = Tensor::from_matrix(b);
  Tensor c = contract(ta, tb, {{1, 0}});
  CHECK(c.as_matrix(1) == a * b);
  CHECK(kron(Matrix::identity(2), a).rows() == 6);
  CHECK(kron(Vec{Scalar(1), Scalar(2)}, Vec{Scalar(3), Scalar(5)}) == Vec{Scalar(3), Scalar(5), Scalar(6), Scalar(10)});
}
