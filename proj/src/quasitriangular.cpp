#include "hopflab/quasitriangular.hpp"

#include <stdexcept>

namespace hopflab {

namespace {

Scalar form(const Matrix& f, const Vec& a, const Vec& b) { return HopfAlgebra::pair(f, a, b); }

long first_diff(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return static_cast<long>(i);
  return -1;
}

std::vector<long> witness_of(long w) { return w < 0 ? std::vector<long>{} : std::vector<long>{w}; }

}  // namespace

CqtStructure make_cqt(HopfPtr host, Matrix r) {
  if (r.rows() != host->dim() || r.cols() != host->dim()) throw std::invalid_argument("CQT form must be n x n");
  for (auto& x : r.data()) x = host->field().coerce(x);
  auto inv = conv_inverse2(*host, r);
  if (!inv) throw std::invalid_argument("CQT form is not convolution invertible");
  return CqtStructure{std::move(host), std::move(r), std::move(*inv)};
}

QtStructure make_qt(HopfPtr host, Matrix rr) {
  if (rr.rows() != host->dim() || rr.cols() != host->dim()) throw std::invalid_argument("QT element must be n x n");
  for (auto& x : rr.data()) x = host->field().coerce(x);
  auto inv = hh_inverse(*host, rr);
  if (!inv) throw std::invalid_argument("QT element is not invertible");
  return QtStructure{std::move(host), std::move(rr), std::move(*inv)};
}

CheckReport verify_cqt(const CqtStructure& c) {
  const HopfAlgebra& h = *c.host;
  const int n = static_cast<int>(h.dim());
  const Matrix& r = c.r;
  CheckReport rep;
  rep.add("convolution_inverse",
          convolve2(h, r, c.r_inv) == conv_unit2(h) && convolve2(h, c.r_inv, r) == conv_unit2(h));
  {
    std::vector<long> w;
    const Vec one = h.one();
    for (int i = 0; i < n && w.empty(); ++i)
      if (form(r, h.e(i), one) != h.eps(i) || form(r, one, h.e(i)) != h.eps(i)) w = {i};
    rep.add("cqt1_normalized", w.empty(), w);
  }
  std::vector<long> w2, w3;
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x)
      for (int l = 0; l < n; ++l) {
        if (w2.empty()) {
          // R(g, hl) = R(g1, l) R(g2, h)
          Scalar rhs;
          for (const Term& t : h.cop(g, 2)) rhs += t.c * r(t.i[0], l) * r(t.i[1], x);
          if (form(r, h.e(g), h.mul(x, l)) != rhs) w2 = {g, x, l};
        }
        if (w3.empty()) {
          // R(hl, g) = R(h, g1) R(l, g2)
          Scalar rhs;
          for (const Term& t : h.cop(g, 2)) rhs += t.c * r(x, t.i[0]) * r(l, t.i[1]);
          if (form(r, h.mul(x, l), h.e(g)) != rhs) w3 = {g, x, l};
        }
      }
  rep.add("cqt2", w2.empty(), w2);
  rep.add("cqt3", w3.empty(), w3);
  std::vector<long> w4, w4p, w4pp;
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) {
      if (w4.empty()) {
        // R(g1, h1) g2 h2 = R(g2, h2) h1 g1
        Vec lhs(n), rhs(n);
        for (const Term& a : h.cop(g, 2))
          for (const Term& b : h.cop(x, 2)) {
            Scalar cc = a.c * b.c;
            if (!r(a.i[0], b.i[0]).is_zero()) axpy(lhs, cc * r(a.i[0], b.i[0]), h.mul(a.i[1], b.i[1]));
            if (!r(a.i[1], b.i[1]).is_zero()) axpy(rhs, cc * r(a.i[1], b.i[1]), h.mul(b.i[0], a.i[0]));
          }
        if (lhs != rhs) w4 = {g, x};
      }
      if (w4p.empty()) {
        // g1 R(g2, h) = R(g1, h2) S(h1) g2 h3
        Vec lhs(n), rhs(n);
        for (const Term& a : h.cop(g, 2)) {
          if (!r(a.i[1], x).is_zero()) axpy(lhs, a.c * r(a.i[1], x), h.e(a.i[0]));
          for (const Term& b : h.cop(x, 3)) {
            Scalar f = r(a.i[0], b.i[1]);
            if (!f.is_zero()) axpy(rhs, a.c * b.c * f, h.mul(h.mul(h.S(b.i[0]), h.e(a.i[1])), h.e(b.i[2])));
          }
        }
        if (lhs != rhs) w4p = {g, x};
      }
      if (w4pp.empty()) {
        // h1 R(g, h2) = R(g2, h1) g3 h2 S^-1(g1)
        Vec lhs(n), rhs(n);
        for (const Term& b : h.cop(x, 2)) {
          if (!r(g, b.i[1]).is_zero()) axpy(lhs, b.c * r(g, b.i[1]), h.e(b.i[0]));
          for (const Term& a : h.cop(g, 3)) {
            Scalar f = r(a.i[1], b.i[0]);
            if (!f.is_zero()) axpy(rhs, a.c * b.c * f, h.mul(h.mul(a.i[2], b.i[1]), h.Sinv(a.i[0])));
          }
        }
        if (lhs != rhs) w4pp = {g, x};
      }
    }
  rep.add("cqt4", w4.empty(), w4);
  rep.add("cqt4_left", w4p.empty(), w4p);
  rep.add("cqt4_right", w4pp.empty(), w4pp);
  return rep;
}

CheckReport verify_qt(const QtStructure& q) {
  const HopfAlgebra& h = *q.host;
  const std::size_t n = h.dim();
  CheckReport rep;
  rep.add("inverse", hh_mul(h, q.rr, q.rr_inv) == hh_one(h) && hh_mul(h, q.rr_inv, q.rr) == hh_one(h));
  const Vec r = q.rr.data();
  Vec r12 = embed_legs(h, 2, r, 3, {0, 1});
  Vec r13 = embed_legs(h, 2, r, 3, {0, 2});
  Vec r23 = embed_legs(h, 2, r, 3, {1, 2});
  long w1 = first_diff(apply_delta_at(h, 2, r, 0), tensor_mul(h, 3, r13, r23));
  rep.add("qt1", w1 < 0, witness_of(w1));
  long we0 = first_diff(apply_eps_at(h, 2, r, 0), h.one()), we1 = first_diff(apply_eps_at(h, 2, r, 1), h.one());
  rep.add("qt2_counit", we0 < 0 && we1 < 0, {we0 < 0 ? we1 : we0});
  long w3 = first_diff(apply_delta_at(h, 2, r, 1), tensor_mul(h, 3, r13, r12));
  rep.add("qt3", w3 < 0, witness_of(w3));
  std::vector<long> w4;
  for (std::size_t x = 0; x < n && w4.empty(); ++x) {
    Vec d(n * n), dcop(n * n);
    for (const Term& t : h.cop(x, 2)) {
      d[t.i[0] * n + t.i[1]] += t.c;
      dcop[t.i[1] * n + t.i[0]] += t.c;
    }
    if (tensor_mul(h, 2, dcop, r) != tensor_mul(h, 2, r, d)) w4 = {static_cast<long>(x)};
  }
  rep.add("qt4", w4.empty(), w4);
  return rep;
}

CqtStructure deform_cqt(const CqtStructure& c, const TwoCocycle& s) {
  if (c.host != s.host && !c.host->same_structure(*s.host)) throw std::invalid_argument("deform_cqt: host mismatch");
  const HopfAlgebra& h = *c.host;
  const std::size_t n = h.dim();
  Matrix out(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x = 0; x < n; ++x) {
      Scalar acc;
      for (const Term& a : h.cop(g, 3))
        for (const Term& b : h.cop(x, 3)) {
          Scalar f = s.sigma(b.i[0], a.i[0]);
          if (f.is_zero()) continue;
          f *= c.r(a.i[1], b.i[1]);
          if (f.is_zero()) continue;
          acc += a.c * b.c * f * s.sigma_inv(a.i[2], b.i[2]);
        }
      out(g, x) = acc;
    }
  return make_cqt(deform(s), std::move(out));
}

QtStructure deform_qt(const QtStructure& q, const DualCocycle& d) {
  if (q.host != d.host && !q.host->same_structure(*d.host)) throw std::invalid_argument("deform_qt: host mismatch");
  const HopfAlgebra& h = *q.host;
  Matrix rr = hh_mul(h, hh_mul(h, hh_flip(d.theta), q.rr), d.theta_inv);
  return make_qt(deform_dual(d), std::move(rr));
}

YdModule yd_from_comodule(const CqtStructure& c, const Tensor& coaction) {
  const HopfAlgebra& h = *c.host;
  const std::size_t n = h.dim();
  if (coaction.order() != 3 || coaction.shape()[0] != coaction.shape()[1] || coaction.shape()[2] != n)
    throw std::invalid_argument("coaction tensor must have shape [m,m,n]");
  const std::size_t m = coaction.shape()[0];
  Tensor action({n, m, m});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        Scalar acc;
        for (std::size_t k = 0; k < n; ++k)
          if (!coaction(p, q, k).is_zero()) acc += coaction(p, q, k) * c.r(i, k);
        action(i, p, q) = acc;
      }
  YdModule out(c.host, std::move(action), coaction);
  if (!verify_comodule(out).ok()) throw std::invalid_argument("yd_from_comodule: not a comodule");
  return out;
}

YdModule yd_from_module(const QtStructure& q, const Tensor& action) {
  const HopfAlgebra& h = *q.host;
  const std::size_t n = h.dim();
  if (action.order() != 3 || action.shape()[0] != n || action.shape()[1] != action.shape()[2])
    throw std::invalid_argument("action tensor must have shape [n,m,m]");
  const std::size_t m = action.shape()[1];
  Tensor coaction({m, m, n});
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& c = q.rr(a, b);
        if (c.is_zero()) continue;
        for (std::size_t x = 0; x < m; ++x)
          if (!action(b, p, x).is_zero()) coaction(p, x, a) += c * action(b, p, x);
      }
  YdModule out(q.host, action, std::move(coaction));
  if (!verify_module(out).ok()) throw std::invalid_argument("yd_from_module: not a module");
  return out;
}

}  // namespace hopflab
