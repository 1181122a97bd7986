#pragma once

#include <cstdint>

#include "hopflab/hopf.hpp"
#include "hopflab/twist.hpp"

namespace hopflab {

// Left H-module, right H-comodule.
//   action(i,p,q):   coefficient of v_q in e_i . v_p
//   coaction(p,q,k): rho(v_p) = sum c v_q (x) e_k
class YdModule {
 public:
  YdModule(HopfPtr host, Tensor action, Tensor coaction);

  const HopfPtr& host() const { return host_; }
  std::size_t dim() const { return m_; }
  const Tensor& action() const { return action_; }
  const Tensor& coaction() const { return coaction_; }

  // L(i)(q,p) = coefficient of v_q in e_i . v_p
  const Matrix& act(int i) const { return act_[i]; }
  Vec act(const Vec& h, const Vec& v) const;
  Vec act(int i, const Vec& v) const { return act_[i].apply(v); }
  // column p, row q, leg k: rho(v_p) as an m x n matrix C with C(q,k)
  const Matrix& rho(int p) const { return rho_[p]; }
  Matrix rho(const Vec& v) const;

  bool same_structure(const YdModule& o) const;

 private:
  HopfPtr host_;
  std::size_t m_;
  Tensor action_, coaction_;
  std::vector<Matrix> act_;
  std::vector<Matrix> rho_;
};

struct YdAlgebra {
  YdModule module;
  Tensor mult;  // mult(p,q,r): coefficient of v_r in v_p v_q
  Vec unit;

  std::size_t dim() const { return module.dim(); }
  Vec mul(const Vec& a, const Vec& b) const;
  Vec mul(int p, int q) const;
};

struct YdMap {
  Matrix matrix;  // target x source
};

// Build the module tensors from per-basis data.
Tensor action_tensor(const HopfAlgebra& h, std::size_t m, const std::vector<Matrix>& acts);

YdModule trivial_module(HopfPtr host, std::size_t m = 1);
YdAlgebra ground_algebra(HopfPtr host);
// H with left multiplication and Delta
// left multiplication with the coproduct as coaction: a Hopf module, YD only when H is cocommutative
YdModule regular_module(HopfPtr host);
YdModule tensor_modules(const YdModule& a, const YdModule& b);

CheckReport verify_module(const YdModule& m);
CheckReport verify_comodule(const YdModule& m);
CheckReport verify_yd(const YdModule& m);
CheckReport verify_yd_algebra(const YdAlgebra& a);
CheckReport verify_yd_map(const YdModule& src, const YdModule& dst, const Matrix& f);
CheckReport verify_algebra_map(const YdAlgebra& src, const YdAlgebra& dst, const Matrix& f);

YdMap braiding(const YdModule& m, const YdModule& nn);

YdModule sigma_module(const TwoCocycle& s, const YdModule& m);
// sigma^-1 applied from H^sigma back to H
YdModule unsigma_module(const TwoCocycle& s, const YdModule& m);
YdMap eta(const TwoCocycle& s, const YdModule& m, const YdModule& nn);
YdMap eta_inverse(const TwoCocycle& s, const YdModule& m, const YdModule& nn);
CheckReport verify_braided_functor(const TwoCocycle& s, const YdModule& m, const YdModule& nn);
YdAlgebra sigma_algebra(const TwoCocycle& s, const YdAlgebra& a);

YdMap zeta_iso(const LazyOneCocycle& mu, const YdModule& m);
CheckReport verify_zeta(const LazyOneCocycle& mu, const YdModule& m, const YdModule& nn);

YdModule theta_module(const DualCocycle& d, const YdModule& m);
YdMap theta_phi(const DualCocycle& d, const YdModule& m, const YdModule& nn);
CheckReport verify_theta_functor(const DualCocycle& d, const YdModule& m, const YdModule& nn);
YdAlgebra theta_algebra(const DualCocycle& d, const YdAlgebra& a);

// (a#b)(c#d) = a c0 # (c1 . b) d
YdAlgebra braided_product(const YdAlgebra& a, const YdAlgebra& b);
// (a#b)(a'#b') = a a'0 # b0 b' R(a'1, b1), action/coaction as for the tensor module
YdAlgebra braided_product_r(const Matrix& r, const YdAlgebra& a, const YdAlgebra& b);
YdAlgebra h_opposite(const YdAlgebra& a);
// sum h_i L(i)
Matrix operator_of(const YdModule& m, const Vec& h);
YdAlgebra end_algebra(const YdModule& m);
bool quantum_commutative(const YdAlgebra& a);

struct AzumayaResult {
  CheckReport report;
  bool is_azumaya = false;
  std::size_t rank_f = 0, rank_g = 0;
};
AzumayaResult azumaya_check(const YdAlgebra& a);

// Random YD map between two modules: a seeded combination of a kernel basis.
Matrix random_yd_map(const YdModule& src, const YdModule& dst, std::uint64_t seed);
// Basis (columns, flattened dst x src row-major) of all YD maps src -> dst.
Matrix yd_hom_basis(const YdModule& src, const YdModule& dst);

}  // namespace hopflab
