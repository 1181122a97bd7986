#include "doctest.h"
#include "support.hpp"

#include "hopflab/quasitriangular.hpp"

using namespace testing;

namespace {

// 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g) + t/2 (1(x)1 + g(x)g + 1(x)g - g(x)1)(h(x)h)
Matrix qt_formula(const HopfAlgebra& h4, const Scalar& t) {
  const Field& f = h4.field();
  auto pure = [&](int a, int b) { return kron(h4.e(a), h4.e(b)); };
  Scalar half = f.make(1, 2);
  Vec first = scaled(pure(0, 0) + pure(0, 1) + pure(1, 0) - pure(1, 1), half);
  Vec group = pure(0, 0) + pure(1, 1) + pure(0, 1) - pure(1, 0);
  Vec second = scaled(tensor_mul(h4, 2, group, pure(2, 2)), t * half);
  return Matrix(4, 4, first + second);
}

}  // namespace

TEST_CASE("R_t values from the source table") {
  HopfPtr h4 = sweedler_h4(Field::rationals());
  CqtStructure r1 = r_t(h4, Scalar(1));
  CHECK(r1.r(2, 3) == Scalar(-1));
  CHECK(r1.r(3, 3) == Scalar(1));
  CHECK(r1.r(1, 1) == Scalar(-1));
  CHECK(r1.r(0, 2).is_zero());
}

TEST_CASE("QT structures match the closed formula") {
  auto g = rng(41);
  for (Field f : {Field::rationals(), Field::prime(13)}) {
    HopfPtr h4 = sweedler_h4(f);
    for (int it = 0; it < 6; ++it) {
      Scalar t = random_rational(g, f);
      QtStructure q = qt_t(h4, t);
      CHECK(q.rr == qt_formula(*h4, t));
      CHECK(verify_qt(q).ok());
    }
  }
}

TEST_CASE("CQT axioms hold for R_t and fail after perturbation") {
  auto g = rng(42);
  Field q = Field::rationals();
  HopfPtr h4 = sweedler_h4(q);
  for (int it = 0; it < 6; ++it) {
    Scalar t = random_rational(g, q);
    CqtStructure c = r_t(h4, t);
    CHECK(verify_cqt(c).ok());
    Matrix bad = c.r;
    bad(uniform(g, 0, 3), uniform(g, 0, 3)) += Scalar(1);
    try {
      CHECK_FALSE(verify_cqt(make_cqt(h4, bad)).ok());
    } catch (const std::exception&) {
    }
  }
  HopfPtr kc2 = group_algebra_c2(q);
  CHECK(verify_cqt(cqt_c2(kc2, Scalar(1))).ok());
  CHECK(verify_cqt(cqt_c2(kc2, Scalar(-1))).ok());
  CHECK(verify_qt(qt_c2(kc2)).ok());
}

TEST_CASE("deforming R_t by sigma_s gives R_(t-s)") {
  Field q = Field::rationals();
  HopfPtr h4 = sweedler_h4(q);
  for (long t = -2; t <= 3; ++t)
    for (long s = -2; s <= 3; ++s) {
      CqtStructure d = deform_cqt(r_t(h4, Scalar(t)), sigma_t(h4, Scalar(s)));
      CHECK(d.host->same_structure(*h4));
      CHECK(d.r == r_t(h4, Scalar(t - s)).r);
      CHECK(verify_cqt(d).ok());
    }
}

TEST_CASE("deforming the QT structure by theta_s gives the parameter t-s") {
  Field q = Field::rationals();
  HopfPtr h4 = sweedler_h4(q);
  for (long t = -2; t <= 3; ++t)
    for (long s = -2; s <= 3; ++s) {
      QtStructure d = deform_qt(qt_t(h4, Scalar(t)), theta_t(h4, Scalar(s)));
      CHECK(d.rr == qt_t(h4, Scalar(t - s)).rr);
      CHECK(verify_qt(d).ok());
    }
}

TEST_CASE("induced actions give YD modules") {
  Field q = Field::rationals();
  HopfPtr h4 = sweedler_h4(q);
  for (long t : {0L, 1L, -2L}) {
    CHECK(verify_yd(regular_comodule_module(r_t(h4, Scalar(t)))).ok());
    CHECK(verify_yd(yd_from_module(qt_t(h4, Scalar(t)), regular_module(h4).action())).ok());
  }
}
