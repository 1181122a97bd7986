#pragma once

#include "hopflab/hopf.hpp"
#include "hopflab/twist.hpp"
#include "hopflab/yd.hpp"

namespace hopflab {

// r(i,j) = R(e_i (x) e_j)
struct CqtStructure {
  HopfPtr host;
  Matrix r;
  Matrix r_inv;
};

// rr(i,j) = coefficient of e_i (x) e_j in the R-matrix
struct QtStructure {
  HopfPtr host;
  Matrix rr;
  Matrix rr_inv;
};

CqtStructure make_cqt(HopfPtr host, Matrix r);
QtStructure make_qt(HopfPtr host, Matrix rr);

CheckReport verify_cqt(const CqtStructure& c);
CheckReport verify_qt(const QtStructure& q);

// R^sigma(g, h) = sigma(h1, g1) R(g2, h2) sigma^-1(g3, h3), on deform(s)
CqtStructure deform_cqt(const CqtStructure& c, const TwoCocycle& s);
// tau(theta) R theta^-1, on deform_dual(d)
QtStructure deform_qt(const QtStructure& q, const DualCocycle& d);

// h |> m = m0 R(h, m1); coaction(p,q,k) as in YdModule
YdModule yd_from_comodule(const CqtStructure& c, const Tensor& coaction);
// a -> (R2 . a) (x) R1; action(i,p,q) as in YdModule
YdModule yd_from_module(const QtStructure& q, const Tensor& action);

}  // namespace hopflab
