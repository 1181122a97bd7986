#include "doctest.h"
#include "support.hpp"

#include "hopflab/twist.hpp"

using namespace testing;

namespace {

// x ._s y = sum s(x1, y1) x2 y2 s^-1(x3, y3), computed term by term
Vec deformed_product(const HopfAlgebra& h, const TwoCocycle& s, int x, int y) {
  Vec out = zero_vec(h.dim());
  for (const Term& a : h.cop(x, 3))
    for (const Term& b : h.cop(y, 3)) {
      Scalar c = a.c * b.c * s.sigma(a.i[0], b.i[0]) * s.sigma_inv(a.i[2], b.i[2]);
      if (!c.is_zero()) axpy(out, c, h.mul(a.i[1], b.i[1]));
    }
  return out;
}

Vec random_unit_functional(std::mt19937_64& g, const Field& f) {
  Vec mu = zero_vec(4);
  mu[0] = f.one();
  mu[1] = random_nonzero(g, f);
  mu[2] = random_rational(g, f);
  mu[3] = random_rational(g, f);
  return mu;
}

}  // namespace

TEST_CASE("sigma_t values from the source table") {
  Field q = Field::rationals();
  HopfPtr h4 = sweedler_h4(q);
  TwoCocycle s2 = sigma_t(h4, Scalar(2));
  CHECK(s2.sigma(3, 3) == Scalar(-1));
  CHECK(s2.sigma(2, 2) == Scalar(1));
  CHECK(s2.sigma(1, 1) == Scalar(1));
  TwoCocycle s3 = sigma_t(h4, Scalar(3));
  CHECK(s3.sigma(2, 3) == Scalar(-3, 2));
  CHECK(s3.sigma(3, 2) == Scalar(3, 2));
  CHECK(s3.sigma(0, 2).is_zero());
}

TEST_CASE("sigma_t is a lazy cocycle and t -> sigma_t is additive") {
  auto g = rng(31);
  for (Field f : {Field::rationals(), Field::prime(11)}) {
    HopfPtr h4 = sweedler_h4(f);
    for (int it = 0; it < 8; ++it) {
      Scalar s = random_rational(g, f), t = random_rational(g, f);
      TwoCocycle a = sigma_t(h4, s), b = sigma_t(h4, t);
      CHECK(verify_two_cocycle(a).ok());
      CHECK(is_lazy(a));
      CHECK(convolve2(*h4, a.sigma, b.sigma) == sigma_t(h4, s + t).sigma);
      CHECK(inverse_cocycle(a).sigma == sigma_t(h4, -s).sigma);
      CHECK(deform(a)->same_structure(*h4));
    }
  }
}

TEST_CASE("deformed product agrees with a term-by-term oracle") {
  auto g = rng(32);
  Field q = Field::rationals();
  HopfPtr h4 = sweedler_h4(q);
  for (int it = 0; it < 10; ++it) {
    TwoCocycle s = coboundary_of(h4, random_unit_functional(g, q));
    CHECK(verify_two_cocycle(s).ok());
    HopfPtr d = deform(s);
    CHECK(verify_hopf_axioms(*d).ok());
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) CHECK(d->mul(x, y) == deformed_product(*h4, s, x, y));
    CHECK(deform(inverse_cocycle(s))->same_structure(*h4));
  }
}

TEST_CASE("a non-central coboundary changes the product") {
  HopfPtr h4 = sweedler_h4(Field::rationals());
  TwoCocycle c = h4_coboundary(h4);
  CHECK(verify_two_cocycle(c).ok());
  CHECK_FALSE(is_lazy(c));
  CHECK_FALSE(deform(c)->same_structure(*h4));
  CHECK(verify_hopf_axioms(*deform(c)).ok());
}

TEST_CASE("central functionals give lazy coboundaries") {
  HopfPtr kc2 = group_algebra_c2(Field::rationals());
  for (long c : {2L, 3L, -1L}) {
    LazyOneCocycle mu = kc2_mu(kc2, Scalar(c));
    CHECK(is_central(*kc2, mu.mu));
    CHECK(convolve1(*kc2, mu.mu, mu.mu_inv) == kc2->counit());
    TwoCocycle s = coboundary_from(mu);
    CHECK(verify_two_cocycle(s).ok());
    CHECK(is_lazy(s));
  }
  HopfPtr h4 = sweedler_h4(Field::rationals());
  Vec mu{Scalar(1), Scalar(-1), Scalar(0), Scalar(0)};
  CHECK_FALSE(is_central(*h4, Vec{Scalar(1), Scalar(1), Scalar(1), Scalar(0)}));
  CHECK(is_lazy(coboundary_of(h4, mu)));
}

TEST_CASE("perturbed cocycles fail verification") {
  auto g = rng(33);
  HopfPtr h4 = sweedler_h4(Field::rationals());
  TwoCocycle s = sigma_t(h4, Scalar(1));
  int detected = 0, tried = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Matrix m = s.sigma;
      m(i, j) += Scalar(uniform(g, 1, 3));
      TwoCocycle bad;
      try {
        bad = make_two_cocycle(h4, m);
      } catch (const std::exception&) {
        continue;
      }
      ++tried;
      if (!verify_two_cocycle(bad).ok()) ++detected;
    }
  CHECK(tried > 0);
  CHECK(detected == tried);
}

TEST_CASE("theta_t is a lazy dual cocycle and additive") {
  auto g = rng(34);
  Field q = Field::rationals();
  HopfPtr h4 = sweedler_h4(q);
  for (int it = 0; it < 8; ++it) {
    Scalar s = random_rational(g, q), t = random_rational(g, q);
    DualCocycle a = theta_t(h4, s);
    // theta_t = 1 (x) 1 + t/2 h (x) gh
    Matrix expect(4, 4);
    expect(0, 0) = 1;
    expect(2, 3) = s * Scalar(1, 2);
    CHECK(a.theta == expect);
    CHECK(verify_dual_cocycle(a).ok());
    CHECK(is_lazy_dual(a));
    CHECK(hh_mul(*h4, a.theta, theta_t(h4, t).theta) == theta_t(h4, s + t).theta);
    CHECK(deform_dual(a)->same_structure(*h4));
  }
  Matrix bad = theta_t(h4, Scalar(1)).theta;
  bad(1, 2) += Scalar(1);
  CHECK_FALSE(verify_dual_cocycle(make_dual_cocycle(h4, bad)).ok());
}
