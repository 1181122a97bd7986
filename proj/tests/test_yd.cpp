#include "doctest.h"
#include "support.hpp"

#include "hopflab/galois.hpp"

using namespace testing;

namespace {

// Phi(m (x) n) = n0 (x) n1 . m
Matrix braiding_oracle(const YdModule& m, const YdModule& n) {
  const std::size_t a = m.dim(), b = n.dim(), k = m.host()->dim();
  Matrix out(a * b, a * b);
  for (std::size_t p = 0; p < a; ++p)
    for (std::size_t q = 0; q < b; ++q)
      for (std::size_t q2 = 0; q2 < b; ++q2)
        for (std::size_t i = 0; i < k; ++i) {
          const Scalar& c = n.coaction()(q, q2, i);
          if (c.is_zero()) continue;
          for (std::size_t p2 = 0; p2 < a; ++p2) out(q2 * a + p2, p * b + q) += c * m.action()(i, p, p2);
        }
  return out;
}

// h -> m = (h2 . m0)0 s((h2 . m0)1, h1) s^-1(h3, m1)
Matrix sigma_action_oracle(const TwoCocycle& s, const YdModule& m, int h) {
  const HopfAlgebra& H = *s.host;
  const std::size_t d = m.dim();
  Matrix out(d, d);
  for (std::size_t p = 0; p < d; ++p)
    for (const Term& t : H.cop(h, 3))
      for (std::size_t p0 = 0; p0 < d; ++p0)
        for (std::size_t k1 = 0; k1 < H.dim(); ++k1) {
          Scalar c = t.c * m.coaction()(p, p0, k1) * s.sigma_inv(t.i[2], k1);
          if (c.is_zero()) continue;
          Vec hm = m.act(t.i[1], unit_vec(d, p0));
          for (std::size_t x = 0; x < d; ++x) {
            if (hm[x].is_zero()) continue;
            for (std::size_t y = 0; y < d; ++y)
              for (std::size_t k2 = 0; k2 < H.dim(); ++k2) {
                const Scalar& e = m.coaction()(x, y, k2);
                if (!e.is_zero()) out(y, p) += c * hm[x] * e * s.sigma(k2, t.i[0]);
              }
          }
        }
  return out;
}

std::vector<YdModule> sample_modules(HopfPtr h4) {
  CqtStructure r1 = r_t(h4, Scalar(1));
  return {regular_comodule_module(r1), unit_object(h4).module, trivial_module(h4, 2),
          yd_from_module(qt_t(h4, Scalar(2)), regular_module(h4).action())};
}

}  // namespace

TEST_CASE("sample modules are Yetter-Drinfeld") {
  HopfPtr h4 = sweedler_h4(Field::rationals());
  for (const auto& m : sample_modules(h4)) CHECK(verify_yd(m).ok());
}

TEST_CASE("braiding matches the direct formula") {
  HopfPtr h4 = sweedler_h4(Field::rationals());
  auto mods = sample_modules(h4);
  for (const auto& m : mods)
    for (const auto& n : mods) {
      YdMap b = braiding(m, n);
      CHECK(b.matrix == braiding_oracle(m, n));
      CHECK(verify_yd_map(tensor_modules(m, n), tensor_modules(n, m), b.matrix).ok());
    }
}

TEST_CASE("deformed action matches the direct formula") {
  auto g = rng(51);
  Field q = Field::rationals();
  HopfPtr h4 = sweedler_h4(q);
  auto mods = sample_modules(h4);
  for (int it = 0; it < 4; ++it) {
    Vec mu{q.one(), random_nonzero(g, q), random_rational(g, q), random_rational(g, q)};
    for (const TwoCocycle& s : {sigma_t(h4, random_rational(g, q)), coboundary_of(h4, mu)})
      for (const auto& m : mods) {
        YdModule d = sigma_module(s, m);
        for (int h = 0; h < 4; ++h) CHECK(d.act(h) == sigma_action_oracle(s, m, h));
        CHECK(verify_yd(d).ok());
        CHECK(unsigma_module(s, d).same_structure(m));
      }
  }
}

TEST_CASE("trivial cocycle gives the identity functor") {
  HopfPtr h4 = sweedler_h4(Field::rationals());
  for (const auto& m : sample_modules(h4)) CHECK(sigma_module(trivial_cocycle(h4), m).same_structure(m));
}

TEST_CASE("monoidal structure and naturality for seeded pairs") {
  HopfPtr h4 = sweedler_h4(Field::rationals());
  auto mods = sample_modules(h4);
  for (long t : {1L, 2L, -1L}) {
    TwoCocycle s = sigma_t(h4, Scalar(t));
    CHECK(verify_braided_functor(s, mods[0], mods[1]).ok());
    CHECK(verify_braided_functor(s, mods[3], mods[0]).ok());
    YdMap e = eta(s, mods[0], mods[2]), ei = eta_inverse(s, mods[0], mods[2]);
    CHECK(e.matrix * ei.matrix == Matrix::identity(8));
  }
  for (std::uint64_t seed = 1; seed < 6; ++seed) {
    Matrix f = random_yd_map(mods[0], mods[0], seed);
    CHECK(verify_yd_map(mods[0], mods[0], f).ok());
  }
  CHECK(yd_hom_basis(mods[2], mods[2]).cols() == 4);
}

TEST_CASE("mutated modules and maps are rejected") {
  auto g = rng(52);
  HopfPtr h4 = sweedler_h4(Field::rationals());
  YdModule m = sample_modules(h4)[0];
  for (int it = 0; it < 10; ++it) {
    Tensor a = m.action(), c = m.coaction();
    if (it % 2)
      a(uniform(g, 1, 3), uniform(g, 0, 3), uniform(g, 0, 3)) += Scalar(1);
    else
      c(uniform(g, 0, 3), uniform(g, 0, 3), uniform(g, 0, 3)) += Scalar(1);
    CHECK_FALSE(verify_yd(YdModule(h4, a, c)).ok());
  }
  Matrix not_map = Matrix::identity(4);
  not_map(0, 1) = Scalar(1);
  CHECK_FALSE(verify_yd_map(m, m, not_map).ok());
}

TEST_CASE("zeta for lazy coboundaries on kC2") {
  HopfPtr kc2 = group_algebra_c2(Field::rationals());
  CqtStructure c = cqt_c2(kc2, Scalar(-1));
  YdModule reg = regular_comodule_module(c), triv = trivial_module(kc2, 1);
  for (long a : {2L, 3L, -1L}) {
    LazyOneCocycle mu = kc2_mu(kc2, Scalar(a));
    CHECK(verify_zeta(mu, reg, triv).ok());
    CHECK(verify_zeta(mu, reg, reg).ok());
  }
}

TEST_CASE("Azumaya decisions") {
  Field q = Field::rationals();
  HopfPtr h4 = sweedler_h4(q);
  YdAlgebra e = end_algebra(regular_comodule_module(r_t(h4, Scalar(1))));
  CHECK(verify_yd_algebra(e).ok());
  AzumayaResult az = azumaya_check(e);
  CHECK(az.is_azumaya);
  CHECK(az.rank_f == 256);
  YdAlgebra es = sigma_algebra(sigma_t(h4, Scalar(2)), e);
  CHECK(verify_yd_algebra(es).ok());
  CHECK(azumaya_check(es).is_azumaya);

  HopfPtr kc2 = group_algebra_c2(q);
  Tensor mult({2, 2, 2});
  mult(0, 0, 0) = 1;
  mult(1, 1, 1) = 1;
  YdAlgebra split = trivial_yd_algebra(kc2, mult, {Scalar(1), Scalar(1)});
  CHECK(verify_yd_algebra(split).ok());
  CHECK(quantum_commutative(split));
  CHECK_FALSE(azumaya_check(split).is_azumaya);
}

TEST_CASE("braided product and H-opposite are YD algebras") {
  HopfPtr h4 = sweedler_h4(Field::rationals());
  YdAlgebra a = regular_comodule_algebra(r_t(h4, Scalar(1)));
  CHECK(verify_yd_algebra(a).ok());
  CHECK(verify_yd_algebra(h_opposite(a)).ok());
  CHECK(verify_yd_algebra(braided_product(a, a)).ok());
  Tensor bad = a.mult;
  bad(1, 2, 3) += Scalar(1);
  CHECK_FALSE(verify_yd_algebra(YdAlgebra{a.module, bad, a.unit}).ok());
}
