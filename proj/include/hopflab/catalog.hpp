#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hopflab/hopf.hpp"
#include "hopflab/quasitriangular.hpp"
#include "hopflab/twist.hpp"
#include "hopflab/yd.hpp"

namespace hopflab {

// Sweedler's algebra on the basis (1, g, h, gh). Rejects characteristic 2.
HopfPtr sweedler_h4(const Field& f);
// kC2 on the basis (1, g)
HopfPtr group_algebra_c2(const Field& f);
// the one-dimensional Hopf algebra k
HopfPtr ground_hopf(const Field& f);

// Example families on H4; `h4` must be sweedler_h4 over some field.
CqtStructure r_t(HopfPtr h4, const Scalar& t);
TwoCocycle sigma_t(HopfPtr h4, const Scalar& t);
DualCocycle theta_t(HopfPtr h4, const Scalar& t);
QtStructure qt_t(HopfPtr h4, const Scalar& t);

Matrix r_t_matrix(const Field& f, const Scalar& t);
Matrix sigma_t_matrix(const Field& f, const Scalar& t);
Matrix theta_t_matrix(const Field& f, const Scalar& t);
Matrix qt_t_matrix(const Field& f, const Scalar& t);

// coboundary of mu = (1, 1, 1, 0): not lazy, H^sigma differs from H
TwoCocycle h4_coboundary(HopfPtr h4);
// R(g, g) = sign
CqtStructure cqt_c2(HopfPtr kc2, const Scalar& sign);
// (1/2)(1(x)1 + 1(x)g + g(x)1 - g(x)g)
QtStructure qt_c2(HopfPtr kc2);
// mu(1) = 1, mu(g) = c
LazyOneCocycle kc2_mu(HopfPtr kc2, const Scalar& c);

// (H, Delta) made into a YD module through h |> m = m0 R(h, m1)
YdModule regular_comodule_module(const CqtStructure& c);
// H^op with the Delta coaction and the R-induced action
YdAlgebra regular_comodule_algebra(const CqtStructure& c);
// Underlying algebra with trivial action and coaction
YdAlgebra trivial_yd_algebra(HopfPtr host, const Tensor& mult, const Vec& unit);

using Payload = std::variant<HopfPtr, TwoCocycle, DualCocycle, LazyOneCocycle, CqtStructure, QtStructure, YdModule,
                             YdAlgebra>;

enum class Provenance { Paper, Derived, Trivial };

struct CatalogEntry {
  std::string name;
  std::vector<Scalar> params;
  Payload payload;
  Provenance provenance;
  std::string citation;
};

std::vector<std::string> catalog_names();
// throws std::invalid_argument for an unknown name
CatalogEntry catalog_entry(const std::string& name, const Field& f, const Scalar& t);

}  // namespace hopflab
