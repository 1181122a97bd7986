#pragma once

#include <optional>

#include "hopflab/quasitriangular.hpp"
#include "hopflab/twist.hpp"
#include "hopflab/yd.hpp"

namespace hopflab {

struct Subspace {
  std::size_t ambient_dim = 0;
  Matrix basis;  // columns

  std::size_t dim() const { return basis.cols(); }
};

bool same_subspace(const Subspace& a, const Subspace& b);

struct BraidedHopf {
  CqtStructure cqt;
  YdAlgebra underlying;  // star product, adjoint coaction, R-induced action
  Tensor comult;
  Matrix braided_antipode;
};

BraidedHopf build_hr(const CqtStructure& c);
CheckReport verify_braided_hopf(const BraidedHopf& bh);

// tensors in the YdModule action convention: t(i,p,q) = coefficient of v_q in (h_i acting on v_p)
struct BimoduleActions {
  YdModule module;
  Tensor left_hr;   // h -|> m
  Tensor right_hr;  // m <|- h
  Tensor act1;      // h |>1 m = m0 R(h, m1)
  Tensor act2;      // h |>2 m = m0 R(m1, S^-1 h)
};

BimoduleActions bimodule_actions(const CqtStructure& c, const YdModule& m);
CheckReport verify_bimodule(const BraidedHopf& bh, const BimoduleActions& b);

enum class Side { Left, Right };

struct CoinvariantResult {
  Subspace space;
  bool characterizations_agree = false;  // kernel of (action - induced action)
  bool yd_submodule = false;
};
// Right: M_<>, left: _<>M
CoinvariantResult coinvariants(const BimoduleActions& b, Side side);
CheckReport verify_sigma_coinvariants(const CqtStructure& c, const TwoCocycle& s, const YdModule& m);

struct WedgeResult {
  Subspace space;  // inside M (x) N
  std::optional<YdModule> module;
  bool closed = false;
  bool forms_agree = false;
};
WedgeResult wedge(const CqtStructure& c, const YdModule& m, const YdModule& nn);
CheckReport verify_sigma_wedge(const CqtStructure& c, const TwoCocycle& s, const YdModule& m, const YdModule& nn);
// eta^-1 : sigma(A #_R B) -> sigma(A) #_{R^sigma} sigma(B) is an algebra map
CheckReport verify_sigma_wedge_algebra(const CqtStructure& c, const TwoCocycle& s, const YdAlgebra& a,
                                       const YdAlgebra& b);

// H^* with the dual-basis structures
YdAlgebra unit_object(HopfPtr h);

struct ChiMaps {
  Matrix chi, chi_inv, chi_star;
};
ChiMaps chi_maps(const TwoCocycle& s);
CheckReport verify_unit_deformation(const TwoCocycle& s);

struct PhiPsiXi {
  Matrix phi, phi_inv;  // on A (x) H^*, index a*n + x
  Matrix psi, psi_inv;  // on H^* (x) A, index x*m + a
  Matrix xi, xi_inv;    // on A (x) H, index a*n + x
};
PhiPsiXi phi_psi_xi(const TwoCocycle& s, const YdAlgebra& a);
CheckReport verify_phi_psi_xi(const TwoCocycle& s, const YdAlgebra& a);

struct GaloisDecision {
  Subspace coinvariants;
  std::size_t beta_rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t relation_dim = 0;
  bool galois = false;
};

struct GaloisReport {
  CheckReport report;
  GaloisDecision right, left;
  bool bigalois = false;
};
// braided Galois maps over the braided Hopf algebra of c
GaloisReport galois_maps(const CqtStructure& c, const YdAlgebra& a);
// H^op-Galois property of a right H^op-comodule algebra
GaloisDecision comodule_galois(const YdAlgebra& a);

struct PiResult {
  Subspace a0;
  Subspace centralizer;
  std::optional<YdAlgebra> pi;
  CheckReport report;
  std::vector<Matrix> preimages;  // per basis h, X (x) Y as an m x m coefficient matrix
};
// Miyashita-Ulbrich action on C_A(A_0). If `basis` is given it must span the centralizer
// and is used as the basis of the result.
PiResult mu_action_and_pi(const YdAlgebra& a, const std::optional<Matrix>& basis = std::nullopt);
// pi(sigma(A)) = sigma(pi(A)) as YD H^sigma-module algebras
CheckReport verify_pi_deformation(const TwoCocycle& s, const YdAlgebra& a);

}  // namespace hopflab
