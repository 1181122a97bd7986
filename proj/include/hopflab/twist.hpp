#pragma once

#include <optional>

#include "hopflab/hopf.hpp"

namespace hopflab {

// sigma(i,j) = sigma(e_i (x) e_j); sigma_inv is the convolution inverse.
struct TwoCocycle {
  HopfPtr host;
  Matrix sigma;
  Matrix sigma_inv;
};

// theta(i,j) = coefficient of e_i (x) e_j; theta_inv is the inverse in H (x) H.
struct DualCocycle {
  HopfPtr host;
  Matrix theta;
  Matrix theta_inv;
};

// Normalized central invertible functional mu on H.
struct LazyOneCocycle {
  HopfPtr host;
  Vec mu;
  Vec mu_inv;
};

// (f*g)(x (x) y) = sum f(x1 (x) y1) g(x2 (x) y2)
Matrix convolve2(const HopfAlgebra& h, const Matrix& f, const Matrix& g);
Matrix conv_unit2(const HopfAlgebra& h);
std::optional<Matrix> conv_inverse2(const HopfAlgebra& h, const Matrix& f);
// convolution on H^*: (f*g)(x) = f(x1) g(x2)
Vec convolve1(const HopfAlgebra& h, const Vec& f, const Vec& g);
std::optional<Vec> conv_inverse1(const HopfAlgebra& h, const Vec& f);

// Builds the witness inverse; throws if sigma is not convolution invertible.
TwoCocycle make_two_cocycle(HopfPtr host, Matrix sigma);
TwoCocycle trivial_cocycle(HopfPtr host);
// sigma^{-1} regarded as a cocycle on deform(c)
TwoCocycle inverse_cocycle(const TwoCocycle& c);

CheckReport verify_two_cocycle(const TwoCocycle& c);
bool is_lazy(const TwoCocycle& c);

LazyOneCocycle make_lazy_one_cocycle(HopfPtr host, Vec mu);
// mu(a1) a2 == a1 mu(a2) for all basis a
bool is_central(const HopfAlgebra& h, const Vec& mu);
TwoCocycle coboundary_from(const LazyOneCocycle& mu);
// Same formula without the centrality requirement (gives non-lazy cocycles).
TwoCocycle coboundary_of(HopfPtr host, const Vec& mu);

HopfPtr deform(const TwoCocycle& c);
TwoCocycle compose_cocycles(const TwoCocycle& c1, const TwoCocycle& c);

DualCocycle make_dual_cocycle(HopfPtr host, Matrix theta);
DualCocycle trivial_dual_cocycle(HopfPtr host);
// theta^{-1} regarded as a dual cocycle on deform_dual(d)
DualCocycle inverse_dual_cocycle(const DualCocycle& d);
CheckReport verify_dual_cocycle(const DualCocycle& d);
HopfPtr deform_dual(const DualCocycle& d);
bool is_lazy_dual(const DualCocycle& d);

// H (x) H elements as n x n coefficient matrices.
Matrix hh_mul(const HopfAlgebra& h, const Matrix& x, const Matrix& y);
Matrix hh_one(const HopfAlgebra& h);
std::optional<Matrix> hh_inverse(const HopfAlgebra& h, const Matrix& x);
Matrix hh_flip(const Matrix& x);

}  // namespace hopflab
