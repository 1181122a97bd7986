#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

// Faithful representation of H4 on k^2 (+) k^2: g = (diag(1,-1), diag(-1,1)), h = (E12, E12).
std::vector<Matrix> h4_rep_images(const Field& f) {
  auto block = [&](Matrix a, Matrix b) {
    Matrix m(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        m(i, j) = a(i, j);
        m(i + 2, j + 2) = b(i, j);
      }
    return m;
  };
  Matrix one = Matrix::identity(2);
  Matrix g1(2, 2), g2(2, 2), e(2, 2);
  g1(0, 0) = f.one();
  g1(1, 1) = f.make(-1);
  g2(0, 0) = f.make(-1);
  g2(1, 1) = f.one();
  e(0, 1) = f.one();
  Matrix g = block(g1, g2), h = block(e, e);
  return {block(one, one), g, h, g * h};
}

// coordinates of a rep image in the basis of images
Vec decompose(const std::vector<Matrix>& imgs, const Matrix& x) {
  Matrix cols(16, imgs.size());
  for (std::size_t b = 0; b < imgs.size(); ++b)
    for (std::size_t k = 0; k < 16; ++k) cols(k, b) = imgs[b].data()[k];
  Matrix rhs(16, 1, x.data());
  auto sol = solve(cols, rhs);
  REQUIRE(sol);
  return sol->column(0);
}

}  // namespace

TEST_CASE("H4 product table against a faithful representation") {
  for (Field f : {Field::rationals(), Field::prime(3), Field::prime(7)}) {
    HopfPtr h4 = sweedler_h4(f);
    auto imgs = h4_rep_images(f);
    REQUIRE(rank(Matrix::from_columns(16, {imgs[0].data(), imgs[1].data(), imgs[2].data(), imgs[3].data()})) == 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(h4->mul(i, j) == decompose(imgs, imgs[i] * imgs[j]));
  }
}

TEST_CASE("H4 generators as stated in the source table") {
  HopfPtr h4 = sweedler_h4(Field::rationals());
  const int one = 0, g = 1, h = 2, gh = 3;
  // h g = -gh
  CHECK(h4->mul(h, g) == scaled(h4->e(gh), Scalar(-1)));
  CHECK(is_zero(h4->mul(h, h)));
  CHECK(h4->mul(g, g) == h4->e(one));
  // Delta(h) = 1 (x) h + h (x) g
  Vec dh = kron(h4->e(one), h4->e(h)) + kron(h4->e(h), h4->e(g));
  Vec got = zero_vec(16);
  for (const Term& t : h4->cop(h, 2)) got[4 * t.i[0] + t.i[1]] += t.c;
  CHECK(got == dh);
  CHECK(h4->S(h) == h4->e(gh));
  CHECK(h4->S(h4->S(h)) == scaled(h4->e(h), Scalar(-1)));
  CHECK(h4->eps(g).is_one());
  CHECK(h4->eps(h).is_zero());
}

TEST_CASE("Hopf axioms hold for the built-in algebras and their relatives") {
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    for (HopfPtr h : {sweedler_h4(f), group_algebra_c2(f), ground_hopf(f)}) {
      CAPTURE(h->name());
      CHECK(verify_hopf_axioms(*h).ok());
      CHECK(verify_hopf_axioms(*dual_hopf(*h)).ok());
      CHECK(verify_hopf_axioms(*op_cop(*h, true, true)).ok());
      CHECK(verify_hopf_axioms(*op_cop(*h, true, false)).ok());
    }
  }
  CHECK_THROWS(sweedler_h4(Field::prime(2)));
}

TEST_CASE("H4 is self-dual") {
  HopfPtr h4 = sweedler_h4(Field::rationals());
  HopfPtr d = dual_hopf(*h4);
  // g* = delta_1 - delta_g, h* = delta_h + delta_gh realise an isomorphism H4 -> H4^*
  Matrix iso(4, 4);
  auto set_col = [&](int c, Vec v) { iso.set_column(c, v); };
  Vec dg = zero_vec(4), dhh = zero_vec(4);
  dg[0] = 1;
  dg[1] = -1;
  dhh[2] = 1;
  dhh[3] = 1;
  set_col(0, d->one());
  set_col(1, dg);
  set_col(2, dhh);
  set_col(3, d->mul(dg, dhh));
  REQUIRE(inverse(iso));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(iso.apply(h4->mul(i, j)) == d->mul(iso.column(i), iso.column(j)));
}

TEST_CASE("mutations of the structure constants are detected") {
  HopfPtr h4 = sweedler_h4(Field::rationals());
  auto rebuild = [&](Tensor m, Tensor c, Matrix s) {
    return make_hopf(h4->field(), "mut", h4->basis(), m, c, h4->unit(), h4->counit(), s);
  };
  auto g = rng(21);
  for (int it = 0; it < 12; ++it) {
    Tensor m = h4->mult(), c = h4->comult();
    Matrix s = h4->antipode();
    std::size_t which = uniform(g, 0, 2), i = uniform(g, 0, 3), j = uniform(g, 0, 3), k = uniform(g, 0, 3);
    if (which == 0) m(i, j, k) += Scalar(1);
    if (which == 1) c(i, j, k) += Scalar(1);
    if (which == 2) s(i, j) += Scalar(1);
    CAPTURE(which);
    bool rejected = false;
    try {
      rejected = !verify_hopf_axioms(*rebuild(m, c, s)).ok();
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    CHECK(rejected);
  }
}

TEST_CASE("iterated coproduct and leg helpers are coassociative") {
  HopfPtr h4 = sweedler_h4(Field::rationals());
  for (int i = 0; i < 4; ++i) {
    Vec d2 = zero_vec(16);
    for (const Term& t : h4->cop(i, 2)) d2[4 * t.i[0] + t.i[1]] += t.c;
    CHECK(apply_delta_at(*h4, 2, d2, 0) == apply_delta_at(*h4, 2, d2, 1));
    CHECK(apply_eps_at(*h4, 2, d2, 0) == h4->e(i));
    CHECK(apply_eps_at(*h4, 2, d2, 1) == h4->e(i));
    CHECK(iterated_coproduct(*h4, 3).as_matrix(1).row(i) == apply_delta_at(*h4, 2, d2, 0));
  }
}
