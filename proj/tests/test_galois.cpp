#include "doctest.h"
#include "support.hpp"

#include "hopflab/galois.hpp"

using namespace testing;

namespace {

struct Setup {
  HopfPtr h4 = sweedler_h4(Field::rationals());
  CqtStructure r1 = r_t(h4, Scalar(1));
  CqtStructure r0 = r_t(h4, Scalar(0));
  YdAlgebra unit = unit_object(h4);
  YdAlgebra hreg = regular_comodule_algebra(r1);
  YdModule reg = regular_comodule_module(r1);
};

}  // namespace

TEST_CASE("braided Hopf algebra of a CQT form") {
  Setup s;
  for (const auto& c : {s.r1, s.r0, r_t(s.h4, Scalar(-2))}) {
    BraidedHopf bh = build_hr(c);
    CHECK(verify_braided_hopf(bh).ok());
    CHECK(verify_bimodule(bh, bimodule_actions(c, s.reg)).ok());
  }
}

TEST_CASE("coinvariant dimensions") {
  Setup s;
  auto b = bimodule_actions(s.r1, s.reg);
  CHECK(coinvariants(b, Side::Right).space.dim() == 4);
  auto bu = bimodule_actions(s.r1, s.unit.module);
  CHECK(coinvariants(bu, Side::Right).space.dim() == 1);
  for (long t : {1L, 2L, -1L}) {
    CHECK(verify_sigma_coinvariants(s.r1, sigma_t(s.h4, Scalar(t)), s.reg).ok());
    CHECK(verify_sigma_coinvariants(s.r0, sigma_t(s.h4, Scalar(t)), s.unit.module).ok());
  }
}

TEST_CASE("cotensor of the unit object with itself") {
  Setup s;
  WedgeResult w = wedge(s.r1, s.unit.module, s.unit.module);
  CHECK(w.forms_agree);
  CHECK(w.closed);
  CHECK(w.space.dim() == 4);
  REQUIRE(w.module);
  CHECK(verify_yd(*w.module).ok());
  CHECK(verify_sigma_wedge(s.r1, sigma_t(s.h4, Scalar(2)), s.reg, s.unit.module).ok());
  CHECK(verify_sigma_wedge_algebra(s.r1, sigma_t(s.h4, Scalar(1)), s.unit, s.unit).ok());
}

TEST_CASE("unit object and its deformation") {
  Setup s;
  CHECK(verify_yd_algebra(s.unit).ok());
  for (long t : {1L, -1L, 3L}) {
    TwoCocycle c = sigma_t(s.h4, Scalar(t));
    CHECK(verify_unit_deformation(c).ok());
    ChiMaps x = chi_maps(c);
    CHECK(x.chi * x.chi_inv == Matrix::identity(4));
  }
  CHECK(verify_unit_deformation(h4_coboundary(s.h4)).ok());
}

TEST_CASE("phi, psi and xi are inverse pairs") {
  Setup s;
  TwoCocycle c = sigma_t(s.h4, Scalar(1));
  for (const YdAlgebra& a : {s.unit, s.hreg, end_algebra(s.reg)}) {
    CHECK(verify_phi_psi_xi(c, a).ok());
    PhiPsiXi p = phi_psi_xi(c, a);
    std::size_t d = a.dim() * 4;
    CHECK(p.phi * p.phi_inv == Matrix::identity(d));
    CHECK(p.psi * p.psi_inv == Matrix::identity(d));
    CHECK(p.xi * p.xi_inv == Matrix::identity(d));
  }
}

TEST_CASE("Galois decisions") {
  Setup s;
  GaloisReport u = galois_maps(s.r1, s.unit);
  CHECK(u.report.ok());
  CHECK(u.right.galois);
  CHECK(u.left.galois);
  CHECK(u.bigalois);
  CHECK(quantum_commutative(s.unit));
  CHECK_FALSE(comodule_galois(s.unit).galois);

  GaloisReport h = galois_maps(s.r1, s.hreg);
  CHECK_FALSE(h.right.galois);
  CHECK(comodule_galois(s.hreg).galois);

  // decisions survive deformation
  for (long t : {1L, -1L}) {
    TwoCocycle c = sigma_t(s.h4, Scalar(t));
    CqtStructure rc = deform_cqt(s.r1, c);
    CHECK(galois_maps(rc, sigma_algebra(c, s.unit)).bigalois == u.bigalois);
    CHECK(galois_maps(rc, sigma_algebra(c, s.hreg)).right.galois == h.right.galois);
  }
}

TEST_CASE("centralizer construction commutes with deformation") {
  Setup s;
  YdAlgebra e = end_algebra(s.reg);
  PiResult p = mu_action_and_pi(e);
  CHECK(p.report.ok());
  REQUIRE(p.pi);
  CHECK(p.pi->dim() == 4);
  CHECK(verify_pi_deformation(sigma_t(s.h4, Scalar(1)), e).ok());
}
