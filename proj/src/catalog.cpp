#include "hopflab/catalog.hpp"

#include <stdexcept>

#include "hopflab/galois.hpp"

namespace hopflab {

namespace {

void require_odd(const Field& f, const char* what) {
  if (f.characteristic() == 2) throw std::invalid_argument(std::string(what) + " requires characteristic != 2");
}

Matrix rows4(const Field& f, std::initializer_list<std::initializer_list<Scalar>> rows) {
  Matrix m(4, 4);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const auto& x : r) m(i, j++) = f.coerce(x);
    ++i;
  }
  return m;
}

// basis index of g^a h^b in (1, g, h, gh)
int h4_index(int a, int b) { return 2 * b + a; }

}  // namespace

HopfPtr sweedler_h4(const Field& f) {
  require_odd(f, "H4");
  Tensor mult({4, 4, 4}), comult({4, 4, 4});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          if (b + d >= 2) continue;
          // g^a h^b g^c h^d = (-1)^(bc) g^(a+c) h^(b+d)
          mult(h4_index(a, b), h4_index(c, d), h4_index((a + c) % 2, b + d)) = f.make((b * c) % 2 ? -1 : 1);
        }
  comult(0, 0, 0) = f.one();
  comult(1, 1, 1) = f.one();
  comult(2, 0, 2) = f.one();
  comult(2, 2, 1) = f.one();
  comult(3, 1, 3) = f.one();
  comult(3, 3, 0) = f.one();
  Matrix s(4, 4);
  s(0, 0) = f.one();
  s(1, 1) = f.one();
  s(3, 2) = f.one();       // S(h) = gh
  s(2, 3) = f.make(-1);    // S(gh) = -h
  return make_hopf(f, "H4", {"1", "g", "h", "gh"}, mult, comult, {f.one(), 0, 0, 0}, {f.one(), f.one(), 0, 0}, s);
}

HopfPtr group_algebra_c2(const Field& f) {
  Tensor mult({2, 2, 2}), comult({2, 2, 2});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) mult(a, b, (a + b) % 2) = f.one();
  comult(0, 0, 0) = f.one();
  comult(1, 1, 1) = f.one();
  return make_hopf(f, "kC2", {"1", "g"}, mult, comult, {f.one(), 0}, {f.one(), f.one()}, Matrix::identity(2));
}

HopfPtr ground_hopf(const Field& f) {
  Tensor one({1, 1, 1});
  one(0, 0, 0) = f.one();
  return make_hopf(f, "k", {"1"}, one, one, {f.one()}, {f.one()}, Matrix::identity(1));
}

Matrix r_t_matrix(const Field& f, const Scalar& t) {
  require_odd(f, "R_t");
  return rows4(f, {{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, t, -t}, {0, 0, t, t}});
}

Matrix sigma_t_matrix(const Field& f, const Scalar& t) {
  require_odd(f, "sigma_t");
  Scalar u = t * Scalar(1, 2);
  return rows4(f, {{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, u, -u}, {0, 0, u, -u}});
}

Matrix theta_t_matrix(const Field& f, const Scalar& t) {
  require_odd(f, "theta_t");
  Matrix m(4, 4);
  m(0, 0) = f.one();
  m(2, 3) = f.coerce(t * Scalar(1, 2));
  return m;
}

Matrix qt_t_matrix(const Field& f, const Scalar& t) {
  require_odd(f, "QT_t");
  Scalar half = f.coerce(Scalar(1, 2));
  Scalar u = f.coerce(t * Scalar(1, 2));
  Matrix m(4, 4);
  m(0, 0) = half;
  m(0, 1) = half;
  m(1, 0) = half;
  m(1, 1) = -half;
  m(2, 2) = u;
  m(3, 3) = u;
  m(2, 3) = u;
  m(3, 2) = -u;
  return m;
}

CqtStructure r_t(HopfPtr h4, const Scalar& t) { return make_cqt(h4, r_t_matrix(h4->field(), t)); }
TwoCocycle sigma_t(HopfPtr h4, const Scalar& t) { return make_two_cocycle(h4, sigma_t_matrix(h4->field(), t)); }
DualCocycle theta_t(HopfPtr h4, const Scalar& t) { return make_dual_cocycle(h4, theta_t_matrix(h4->field(), t)); }
QtStructure qt_t(HopfPtr h4, const Scalar& t) { return make_qt(h4, qt_t_matrix(h4->field(), t)); }

TwoCocycle h4_coboundary(HopfPtr h4) {
  const Field& f = h4->field();
  return coboundary_of(std::move(h4), {f.one(), f.one(), f.one(), f.zero()});
}

CqtStructure cqt_c2(HopfPtr kc2, const Scalar& sign) {
  if (sign != Scalar(1) && sign != Scalar(-1)) throw std::invalid_argument("cqt_c2: sign must be 1 or -1");
  Matrix r(2, 2);
  r(0, 0) = r(0, 1) = r(1, 0) = 1;
  r(1, 1) = sign;
  return make_cqt(std::move(kc2), std::move(r));
}

QtStructure qt_c2(HopfPtr kc2) {
  require_odd(kc2->field(), "qt_c2");
  Scalar half(1, 2);
  Matrix rr(2, 2);
  rr(0, 0) = rr(0, 1) = rr(1, 0) = half;
  rr(1, 1) = -half;
  return make_qt(std::move(kc2), std::move(rr));
}

LazyOneCocycle kc2_mu(HopfPtr kc2, const Scalar& c) { return make_lazy_one_cocycle(std::move(kc2), {1, c}); }

YdModule regular_comodule_module(const CqtStructure& c) { return yd_from_comodule(c, c.host->comult()); }

YdAlgebra regular_comodule_algebra(const CqtStructure& c) {
  const HopfAlgebra& h = *c.host;
  const std::size_t n = h.dim();
  Tensor mult({n, n, n});
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t k = 0; k < n; ++k) mult(p, q, k) = h.mult()(q, p, k);
  return YdAlgebra{regular_comodule_module(c), std::move(mult), h.one()};
}

YdAlgebra trivial_yd_algebra(HopfPtr host, const Tensor& mult, const Vec& unit) {
  YdModule m = trivial_module(std::move(host), unit.size());
  return YdAlgebra{std::move(m), mult, unit};
}

std::vector<std::string> catalog_names() {
  return {"sweedler_h4",   "kc2",          "ground",        "r_t",           "sigma_t",
          "theta_t",       "qt_t",         "h4_coboundary", "cqt_c2",        "qt_c2",
          "kc2_mu",        "regular_yd_h4", "unit_object_h4", "end_regular_h4", "h_regular_h4"};
}

CatalogEntry catalog_entry(const std::string& name, const Field& f, const Scalar& t) {
  const std::string ex = "Sweedler algebra family";
  if (name == "sweedler_h4") return {name, {}, sweedler_h4(f), Provenance::Paper, ex};
  if (name == "kc2") return {name, {}, group_algebra_c2(f), Provenance::Trivial, "group algebra"};
  if (name == "ground") return {name, {}, ground_hopf(f), Provenance::Trivial, "ground field"};
  if (name == "r_t") return {name, {t}, r_t(sweedler_h4(f), t), Provenance::Paper, ex};
  if (name == "sigma_t") return {name, {t}, sigma_t(sweedler_h4(f), t), Provenance::Paper, ex};
  if (name == "theta_t") return {name, {t}, theta_t(sweedler_h4(f), t), Provenance::Paper, ex};
  if (name == "qt_t") return {name, {t}, qt_t(sweedler_h4(f), t), Provenance::Paper, ex};
  if (name == "h4_coboundary")
    return {name, {}, h4_coboundary(sweedler_h4(f)), Provenance::Derived, "coboundary of a non-central functional"};
  if (name == "cqt_c2") return {name, {t}, cqt_c2(group_algebra_c2(f), t), Provenance::Derived, "brute force"};
  if (name == "qt_c2") return {name, {}, qt_c2(group_algebra_c2(f)), Provenance::Derived, "brute force"};
  if (name == "kc2_mu") return {name, {t}, kc2_mu(group_algebra_c2(f), t), Provenance::Derived, "centrality check"};
  if (name == "regular_yd_h4")
    return {name, {t}, regular_comodule_module(r_t(sweedler_h4(f), t)), Provenance::Derived, "induced action"};
  if (name == "unit_object_h4") return {name, {}, unit_object(sweedler_h4(f)), Provenance::Derived, "dual algebra"};
  if (name == "end_regular_h4")
    return {name, {t}, end_algebra(regular_comodule_module(r_t(sweedler_h4(f), t))), Provenance::Derived,
            "endomorphism algebra"};
  if (name == "h_regular_h4")
    return {name, {t}, regular_comodule_algebra(r_t(sweedler_h4(f), t)), Provenance::Derived, "regular coaction"};
  throw std::invalid_argument("unknown catalog entry: " + name);
}

}  // namespace hopflab
