#include "hopflab/yd.hpp"

#include <functional>
#include <random>
#include <stdexcept>

namespace hopflab {

namespace {

// X += c * (v (x) w) for X of shape |v| x |w|
void add_outer(Matrix& x, const Scalar& c, const Vec& v, const Vec& w) {
  if (c.is_zero()) return;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a].is_zero()) continue;
    Scalar ca = c * v[a];
    for (std::size_t b = 0; b < w.size(); ++b)
      if (!w[b].is_zero()) x(a, b) += ca * w[b];
  }
}

Tensor coaction_tensor(std::size_t m, std::size_t n, const std::vector<Matrix>& rhos) {
  Tensor t({m, m, n});
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t k = 0; k < n; ++k) t(p, q, k) = rhos[p](q, k);
  return t;
}

Tensor mult_tensor(std::size_t m, const std::function<Vec(int, int)>& f) {
  Tensor t({m, m, m});
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      Vec v = f(static_cast<int>(p), static_cast<int>(q));
      for (std::size_t r = 0; r < m; ++r) t(p, q, r) = v[r];
    }
  return t;
}


void require_same_host(const YdModule& a, const YdModule& b, const char* what) {
  if (a.host() != b.host() && !a.host()->same_structure(*b.host()))
    throw std::invalid_argument(std::string(what) + ": host mismatch");
}

void require_host(const HopfAlgebra& h, const YdModule& m, const char* what) {
  if (m.host().get() != &h && !m.host()->same_structure(h))
    throw std::invalid_argument(std::string(what) + ": host mismatch");
}

}  // namespace

YdModule::YdModule(HopfPtr host, Tensor action, Tensor coaction)
    : host_(std::move(host)), action_(std::move(action)), coaction_(std::move(coaction)) {
  const std::size_t n = host_->dim();
  if (action_.order() != 3 || action_.shape()[0] != n || action_.shape()[1] != action_.shape()[2])
    throw std::invalid_argument("action tensor must have shape [n,m,m]");
  m_ = action_.shape()[1];
  if (coaction_.shape() != std::vector<std::size_t>{m_, m_, n})
    throw std::invalid_argument("coaction tensor must have shape [m,m,n]");
  for (auto& x : action_.data()) x = host_->field().coerce(x);
  for (auto& x : coaction_.data()) x = host_->field().coerce(x);
  act_.assign(n, Matrix(m_, m_));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m_; ++p)
      for (std::size_t q = 0; q < m_; ++q) act_[i](q, p) = action_(i, p, q);
  rho_.assign(m_, Matrix(m_, n));
  for (std::size_t p = 0; p < m_; ++p)
    for (std::size_t q = 0; q < m_; ++q)
      for (std::size_t k = 0; k < n; ++k) rho_[p](q, k) = coaction_(p, q, k);
}

Vec YdModule::act(const Vec& h, const Vec& v) const {
  Vec out(m_);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) axpy(out, h[i], act_[i].apply(v));
  return out;
}

Matrix YdModule::rho(const Vec& v) const {
  Matrix out(m_, host_->dim());
  for (std::size_t p = 0; p < m_; ++p)
    if (!v[p].is_zero()) out = out + v[p] * rho_[p];
  return out;
}

bool YdModule::same_structure(const YdModule& o) const {
  return host_->same_structure(*o.host_) && action_ == o.action_ && coaction_ == o.coaction_;
}

Vec YdAlgebra::mul(const Vec& a, const Vec& b) const {
  const std::size_t m = dim();
  Vec r(m);
  for (std::size_t p = 0; p < m; ++p) {
    if (a[p].is_zero()) continue;
    for (std::size_t q = 0; q < m; ++q) {
      if (b[q].is_zero()) continue;
      Scalar c = a[p] * b[q];
      for (std::size_t k = 0; k < m; ++k)
        if (!mult(p, q, k).is_zero()) r[k] += c * mult(p, q, k);
    }
  }
  return r;
}

Vec YdAlgebra::mul(int p, int q) const {
  const std::size_t m = dim();
  Vec r(m);
  for (std::size_t k = 0; k < m; ++k) r[k] = mult(p, q, k);
  return r;
}

Tensor action_tensor(const HopfAlgebra& h, std::size_t m, const std::vector<Matrix>& acts) {
  Tensor t({h.dim(), m, m});
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) t(i, p, q) = acts[i](q, p);
  return t;
}

YdModule trivial_module(HopfPtr host, std::size_t m) {
  const HopfAlgebra& h = *host;
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < h.dim(); ++i) acts.push_back(h.eps(i) * Matrix::identity(m));
  std::vector<Matrix> rhos;
  for (std::size_t p = 0; p < m; ++p) {
    Matrix r(m, h.dim());
    add_outer(r, h.field().one(), unit_vec(m, p), h.one());
    rhos.push_back(r);
  }
  Tensor a = action_tensor(h, m, acts);
  return YdModule(std::move(host), std::move(a), coaction_tensor(m, h.dim(), rhos));
}

YdAlgebra ground_algebra(HopfPtr host) {
  YdModule m = trivial_module(std::move(host), 1);
  Tensor mult({1, 1, 1});
  mult(0, 0, 0) = 1;
  return YdAlgebra{std::move(m), std::move(mult), Vec{Scalar(1)}};
}

YdModule regular_module(HopfPtr host) {
  const HopfAlgebra& h = *host;
  const std::size_t n = h.dim();
  Tensor a({n, n, n}), c({n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        a(i, p, q) = h.mult()(i, p, q);
        c(i, p, q) = h.comult()(i, p, q);
      }
  return YdModule(std::move(host), std::move(a), std::move(c));
}

YdModule tensor_modules(const YdModule& a, const YdModule& b) {
  require_same_host(a, b, "tensor_modules");
  const HopfAlgebra& h = *a.host();
  const std::size_t n = h.dim(), ma = a.dim(), mb = b.dim(), mm = ma * mb;
  std::vector<Matrix> acts(n, Matrix(mm, mm));
  for (std::size_t i = 0; i < n; ++i)
    for (const Term& t : h.cop(i, 2)) acts[i] = acts[i] + t.c * kron(a.act(t.i[0]), b.act(t.i[1]));
  // rho(m (x) n) = m0 (x) n0 (x) n1 m1
  std::vector<Matrix> rhos;
  for (std::size_t p = 0; p < ma; ++p)
    for (std::size_t q = 0; q < mb; ++q) {
      Matrix r(mm, n);
      const Matrix &ra = a.rho(p), &rb = b.rho(q);
      for (std::size_t p2 = 0; p2 < ma; ++p2)
        for (std::size_t k1 = 0; k1 < n; ++k1) {
          if (ra(p2, k1).is_zero()) continue;
          for (std::size_t q2 = 0; q2 < mb; ++q2)
            for (std::size_t k2 = 0; k2 < n; ++k2) {
              if (rb(q2, k2).is_zero()) continue;
              Scalar c = ra(p2, k1) * rb(q2, k2);
              for (const auto& [k, v] : h.prod(k2, k1)) r(p2 * mb + q2, k) += c * v;
            }
        }
      rhos.push_back(r);
    }
  return YdModule(a.host(), action_tensor(h, mm, acts), coaction_tensor(mm, n, rhos));
}

CheckReport verify_module(const YdModule& m) {
  const HopfAlgebra& h = *m.host();
  const int n = static_cast<int>(h.dim());
  CheckReport rep;
  std::vector<long> w;
  for (int i = 0; i < n && w.empty(); ++i)
    for (int j = 0; j < n && w.empty(); ++j) {
      Matrix rhs(m.dim(), m.dim());
      for (const auto& [k, v] : h.prod(i, j)) rhs = rhs + v * m.act(k);
      if (m.act(i) * m.act(j) != rhs) w = {i, j};
    }
  rep.add("module_associative", w.empty(), w);
  Matrix u(m.dim(), m.dim());
  for (int k = 0; k < n; ++k)
    if (!h.unit()[k].is_zero()) u = u + h.unit()[k] * m.act(k);
  rep.add("module_unital", u == Matrix::identity(m.dim()));
  return rep;
}

CheckReport verify_comodule(const YdModule& m) {
  const HopfAlgebra& h = *m.host();
  const std::size_t n = h.dim(), md = m.dim();
  CheckReport rep;
  std::vector<long> w, wu;
  for (std::size_t p = 0; p < md && w.empty(); ++p) {
    const Matrix& r = m.rho(p);
    // as vectors over (q, k1, k2)
    Vec lhs(md * n * n), rhs(md * n * n);
    for (std::size_t q = 0; q < md; ++q)
      for (std::size_t k = 0; k < n; ++k) {
        if (r(q, k).is_zero()) continue;
        const Matrix& rq = m.rho(q);
        for (std::size_t q2 = 0; q2 < md; ++q2)
          for (std::size_t k2 = 0; k2 < n; ++k2)
            if (!rq(q2, k2).is_zero()) lhs[(q2 * n + k2) * n + k] += r(q, k) * rq(q2, k2);
        for (const Term& t : h.cop(k, 2)) rhs[(q * n + t.i[0]) * n + t.i[1]] += r(q, k) * t.c;
      }
    if (lhs != rhs) w = {static_cast<long>(p)};
    if (r.apply(h.counit()) != unit_vec(md, p) && wu.empty()) wu = {static_cast<long>(p)};
  }
  rep.add("comodule_coassociative", w.empty(), w);
  rep.add("comodule_counital", wu.empty(), wu);
  return rep;
}

CheckReport verify_yd(const YdModule& m) {
  const HopfAlgebra& h = *m.host();
  const int n = static_cast<int>(h.dim());
  const int md = static_cast<int>(m.dim());
  CheckReport rep;
  rep.merge("", verify_module(m));
  rep.merge("", verify_comodule(m));
  std::vector<long> w1, w2;
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < md; ++p) {
      const Vec vp = unit_vec(md, p);
      if (w1.empty()) {
        // h1 . m0 (x) h2 m1 = (h2 . m)0 (x) (h2 . m)1 h1
        Matrix lhs(md, n), rhs(md, n);
        const Matrix& r = m.rho(p);
        for (const Term& t : h.cop(i, 2)) {
          for (int q = 0; q < md; ++q)
            for (int k = 0; k < n; ++k)
              if (!r(q, k).is_zero()) add_outer(lhs, t.c * r(q, k), m.act(t.i[0]).column(q), h.mul(t.i[1], k));
          Matrix rw = m.rho(m.act(t.i[1], vp));
          for (int q = 0; q < md; ++q)
            for (int k = 0; k < n; ++k)
              if (!rw(q, k).is_zero()) add_outer(rhs, t.c * rw(q, k), unit_vec(md, q), h.mul(k, t.i[0]));
        }
        if (lhs != rhs) w1 = {i, p};
      }
      if (w2.empty()) {
        // (h . m)0 (x) (h . m)1 = h2 . m0 (x) h3 m1 S^-1(h1)
        Matrix lhs = m.rho(m.act(i, vp));
        Matrix rhs(md, n);
        const Matrix& r = m.rho(p);
        for (const Term& t : h.cop(i, 3))
          for (int q = 0; q < md; ++q)
            for (int k = 0; k < n; ++k)
              if (!r(q, k).is_zero())
                add_outer(rhs, t.c * r(q, k), m.act(t.i[1]).column(q), h.mul(h.mul(t.i[2], k), h.Sinv(t.i[0])));
        if (lhs != rhs) w2 = {i, p};
      }
    }
  rep.add("yd_compatibility", w1.empty(), w1);
  rep.add("yd_compatibility_alt", w2.empty(), w2);
  return rep;
}

CheckReport verify_yd_algebra(const YdAlgebra& a) {
  const YdModule& m = a.module;
  const HopfAlgebra& h = *m.host();
  const int n = static_cast<int>(h.dim());
  const int md = static_cast<int>(m.dim());
  CheckReport rep = verify_yd(m);
  if (a.mult.shape() != std::vector<std::size_t>{m.dim(), m.dim(), m.dim()} || a.unit.size() != m.dim()) {
    rep.add("algebra_shape", false);
    return rep;
  }
  {
    std::vector<long> w;
    for (int p = 0; p < md && w.empty(); ++p)
      for (int q = 0; q < md && w.empty(); ++q) {
        Vec pq = a.mul(p, q);
        for (int r = 0; r < md && w.empty(); ++r)
          if (a.mul(pq, unit_vec(md, r)) != a.mul(unit_vec(md, p), a.mul(q, r))) w = {p, q, r};
      }
    rep.add("algebra_associative", w.empty(), w);
  }
  {
    std::vector<long> w;
    for (int p = 0; p < md && w.empty(); ++p)
      if (a.mul(a.unit, unit_vec(md, p)) != unit_vec(md, p) || a.mul(unit_vec(md, p), a.unit) != unit_vec(md, p))
        w = {p};
    rep.add("algebra_unital", w.empty(), w);
  }
  {  // h . (ab) = (h1 . a)(h2 . b), h . 1 = eps(h) 1
    std::vector<long> w;
    for (int i = 0; i < n && w.empty(); ++i) {
      if (m.act(i, a.unit) != scaled(a.unit, h.eps(i))) w = {i, -1, -1};
      for (int p = 0; p < md && w.empty(); ++p)
        for (int q = 0; q < md && w.empty(); ++q) {
          Vec rhs(md);
          for (const Term& t : h.cop(i, 2))
            axpy(rhs, t.c, a.mul(m.act(t.i[0]).column(p), m.act(t.i[1]).column(q)));
          if (m.act(i, a.mul(p, q)) != rhs) w = {i, p, q};
        }
    }
    rep.add("module_algebra", w.empty(), w);
  }
  {  // rho(ab) = a0 b0 (x) b1 a1, rho(1) = 1 (x) 1
    std::vector<long> w;
    Matrix one(md, n);
    add_outer(one, h.field().one(), a.unit, h.one());
    if (m.rho(a.unit) != one) w = {-1, -1};
    for (int p = 0; p < md && w.empty(); ++p)
      for (int q = 0; q < md && w.empty(); ++q) {
        Matrix rhs(md, n);
        const Matrix &rp = m.rho(p), &rq = m.rho(q);
        for (int p2 = 0; p2 < md; ++p2)
          for (int k1 = 0; k1 < n; ++k1) {
            if (rp(p2, k1).is_zero()) continue;
            for (int q2 = 0; q2 < md; ++q2)
              for (int k2 = 0; k2 < n; ++k2)
                if (!rq(q2, k2).is_zero())
                  add_outer(rhs, rp(p2, k1) * rq(q2, k2), a.mul(p2, q2), h.mul(k2, k1));
          }
        if (m.rho(a.mul(p, q)) != rhs) w = {p, q};
      }
    rep.add("comodule_algebra", w.empty(), w);
  }
  return rep;
}

CheckReport verify_yd_map(const YdModule& src, const YdModule& dst, const Matrix& f) {
  CheckReport rep;
  if (f.rows() != dst.dim() || f.cols() != src.dim()) {
    rep.add("map_shape", false);
    return rep;
  }
  const int n = static_cast<int>(src.host()->dim());
  std::vector<long> w;
  for (int i = 0; i < n && w.empty(); ++i)
    if (f * src.act(i) != dst.act(i) * f) w = {i};
  rep.add("module_map", w.empty(), w);
  w.clear();
  for (std::size_t p = 0; p < src.dim() && w.empty(); ++p)
    if (dst.rho(f.column(p)) != f * src.rho(p)) w = {static_cast<long>(p)};
  rep.add("comodule_map", w.empty(), w);
  return rep;
}

CheckReport verify_algebra_map(const YdAlgebra& src, const YdAlgebra& dst, const Matrix& f) {
  CheckReport rep;
  const int ms = static_cast<int>(src.dim());
  std::vector<long> w;
  for (int p = 0; p < ms && w.empty(); ++p)
    for (int q = 0; q < ms && w.empty(); ++q)
      if (f.apply(src.mul(p, q)) != dst.mul(f.column(p), f.column(q))) w = {p, q};
  rep.add("multiplicative", w.empty(), w);
  rep.add("unital", f.apply(src.unit) == dst.unit);
  return rep;
}

YdMap braiding(const YdModule& m, const YdModule& nn) {
  require_same_host(m, nn, "braiding");
  const std::size_t n = m.host()->dim(), mm = m.dim(), mn = nn.dim();
  Matrix out(mn * mm, mm * mn);
  for (std::size_t p = 0; p < mm; ++p)
    for (std::size_t q = 0; q < mn; ++q) {
      const Matrix& r = nn.rho(q);
      for (std::size_t r2 = 0; r2 < mn; ++r2)
        for (std::size_t k = 0; k < n; ++k) {
          if (r(r2, k).is_zero()) continue;
          for (std::size_t s = 0; s < mm; ++s)
            if (!m.act(k)(s, p).is_zero()) out(r2 * mm + s, p * mn + q) += r(r2, k) * m.act(k)(s, p);
        }
    }
  return YdMap{out};
}

namespace {

// h ~> m, first displayed form
Tensor sigma_action_first(const TwoCocycle& s, const YdModule& m) {
  const HopfAlgebra& h = *s.host;
  const std::size_t n = h.dim(), md = m.dim();
  std::vector<Matrix> acts(n, Matrix(md, md));
  for (std::size_t i = 0; i < n; ++i)
    for (const Term& t : h.cop(i, 3))
      for (std::size_t p = 0; p < md; ++p) {
        const Matrix& r = m.rho(p);
        for (std::size_t q = 0; q < md; ++q)
          for (std::size_t k = 0; k < n; ++k) {
            if (r(q, k).is_zero()) continue;
            Scalar c = t.c * r(q, k) * s.sigma_inv(t.i[2], k);
            if (c.is_zero()) continue;
            Matrix w = m.rho(m.act(t.i[1]).column(q));
            for (std::size_t x = 0; x < md; ++x)
              for (std::size_t l = 0; l < n; ++l)
                if (!w(x, l).is_zero()) acts[i](x, p) += c * w(x, l) * s.sigma(l, t.i[0]);
          }
      }
  return action_tensor(h, md, acts);
}

// (h3 . m0) sigma(h4 m1 S^-1 h2, h1) sigma^-1(h5, m2)
Tensor sigma_action_second(const TwoCocycle& s, const YdModule& m) {
  const HopfAlgebra& h = *s.host;
  const std::size_t n = h.dim(), md = m.dim();
  std::vector<Matrix> acts(n, Matrix(md, md));
  for (std::size_t i = 0; i < n; ++i)
    for (const Term& t : h.cop(i, 5))
      for (std::size_t p = 0; p < md; ++p) {
        const Matrix& r = m.rho(p);
        for (std::size_t q = 0; q < md; ++q)
          for (std::size_t k = 0; k < n; ++k) {
            if (r(q, k).is_zero()) continue;
            Scalar c = t.c * r(q, k) * s.sigma_inv(t.i[4], k);
            if (c.is_zero()) continue;
            const Matrix& r2 = m.rho(q);
            for (std::size_t x = 0; x < md; ++x)
              for (std::size_t l = 0; l < n; ++l) {
                if (r2(x, l).is_zero()) continue;
                Vec arg = h.mul(h.mul(t.i[3], l), h.Sinv(t.i[1]));
                Scalar f = HopfAlgebra::pair(s.sigma, arg, h.e(t.i[0]));
                if (!f.is_zero()) {
                  Vec col = m.act(t.i[2]).column(x);
                  for (std::size_t y = 0; y < md; ++y)
                    if (!col[y].is_zero()) acts[i](y, p) += c * r2(x, l) * f * col[y];
                }
              }
          }
      }
  return action_tensor(h, md, acts);
}

}  // namespace

YdModule sigma_module(const TwoCocycle& s, const YdModule& m) {
  require_host(*s.host, m, "sigma_module");
  Tensor a = sigma_action_first(s, m);
  if (a != sigma_action_second(s, m)) throw std::logic_error("sigma_module: the two action formulas disagree");
  return YdModule(deform(s), std::move(a), m.coaction());
}

YdModule unsigma_module(const TwoCocycle& s, const YdModule& m) { return sigma_module(inverse_cocycle(s), m); }

namespace {

Matrix eta_with(const Matrix& form, const YdModule& m, const YdModule& nn) {
  const std::size_t n = m.host()->dim(), mm = m.dim(), mn = nn.dim();
  Matrix out(mm * mn, mm * mn);
  for (std::size_t p = 0; p < mm; ++p)
    for (std::size_t q = 0; q < mn; ++q) {
      const Matrix &rp = m.rho(p), &rq = nn.rho(q);
      for (std::size_t p2 = 0; p2 < mm; ++p2)
        for (std::size_t k1 = 0; k1 < n; ++k1) {
          if (rp(p2, k1).is_zero()) continue;
          for (std::size_t q2 = 0; q2 < mn; ++q2)
            for (std::size_t k2 = 0; k2 < n; ++k2)
              if (!rq(q2, k2).is_zero() && !form(k2, k1).is_zero())
                out(p2 * mn + q2, p * mn + q) += rp(p2, k1) * rq(q2, k2) * form(k2, k1);
        }
    }
  return out;
}

}  // namespace

YdMap eta(const TwoCocycle& s, const YdModule& m, const YdModule& nn) {
  require_host(*s.host, m, "eta");
  require_host(*s.host, nn, "eta");
  return YdMap{eta_with(s.sigma_inv, m, nn)};
}

YdMap eta_inverse(const TwoCocycle& s, const YdModule& m, const YdModule& nn) {
  require_host(*s.host, m, "eta");
  require_host(*s.host, nn, "eta");
  return YdMap{eta_with(s.sigma, m, nn)};
}

CheckReport verify_braided_functor(const TwoCocycle& s, const YdModule& m, const YdModule& nn) {
  CheckReport rep;
  YdModule sm = sigma_module(s, m), sn = sigma_module(s, nn);
  Matrix e_mn = eta(s, m, nn).matrix, e_nm = eta(s, nn, m).matrix;
  const std::size_t d = m.dim() * nn.dim();
  rep.add("eta_invertible", e_mn * eta_inverse(s, m, nn).matrix == Matrix::identity(d) &&
                                eta_inverse(s, m, nn).matrix * e_mn == Matrix::identity(d));
  rep.merge("eta_yd_map", verify_yd_map(tensor_modules(sm, sn), sigma_module(s, tensor_modules(m, nn)), e_mn));
  Matrix lhs = e_nm * braiding(sm, sn).matrix;
  Matrix rhs = braiding(m, nn).matrix * e_mn;
  rep.add("braided_square", lhs == rhs);
  return rep;
}

YdAlgebra sigma_algebra(const TwoCocycle& s, const YdAlgebra& a) {
  const std::size_t n = s.host->dim(), md = a.dim();
  YdModule sm = sigma_module(s, a.module);
  const YdModule& m = a.module;
  Tensor mult = mult_tensor(md, [&](int p, int q) {
    Vec out(md);
    const Matrix &rp = m.rho(p), &rq = m.rho(q);
    for (std::size_t p2 = 0; p2 < md; ++p2)
      for (std::size_t k1 = 0; k1 < n; ++k1) {
        if (rp(p2, k1).is_zero()) continue;
        for (std::size_t q2 = 0; q2 < md; ++q2)
          for (std::size_t k2 = 0; k2 < n; ++k2)
            if (!rq(q2, k2).is_zero() && !s.sigma_inv(k2, k1).is_zero())
              axpy(out, rp(p2, k1) * rq(q2, k2) * s.sigma_inv(k2, k1), a.mul(p2, q2));
      }
    return out;
  });
  return YdAlgebra{std::move(sm), std::move(mult), a.unit};
}

YdMap zeta_iso(const LazyOneCocycle& mu, const YdModule& m) {
  require_host(*mu.host, m, "zeta_iso");
  const std::size_t md = m.dim();
  Matrix z(md, md);
  for (std::size_t p = 0; p < md; ++p) z.set_column(p, m.rho(p).apply(mu.mu));
  return YdMap{z};
}

CheckReport verify_zeta(const LazyOneCocycle& mu, const YdModule& m, const YdModule& nn) {
  CheckReport rep;
  TwoCocycle s = coboundary_from(mu);
  rep.add("coboundary_lazy", is_lazy(s));
  Matrix zm = zeta_iso(mu, m).matrix, zn = zeta_iso(mu, nn).matrix;
  rep.add("zeta_invertible", rank(zm) == m.dim() && rank(zn) == nn.dim());
  rep.merge("zeta_yd_map", verify_yd_map(m, sigma_module(s, m), zm));
  YdModule mn = tensor_modules(m, nn);
  Matrix zmn = zeta_iso(mu, mn).matrix;
  rep.add("monoidal_triangle", eta(s, m, nn).matrix * kron(zm, zn) == zmn);
  return rep;
}

namespace {

Tensor theta_coaction_first(const DualCocycle& d, const YdModule& m) {
  const HopfAlgebra& h = *d.host;
  const std::size_t n = h.dim(), md = m.dim();
  std::vector<Matrix> rhos(md, Matrix(md, n));
  for (std::size_t p = 0; p < md; ++p)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t dd = 0; dd < n; ++dd) {
        const Scalar& ti = d.theta_inv(c, dd);
        if (ti.is_zero()) continue;
        Matrix w = m.rho(m.act(dd).column(p));
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const Scalar& th = d.theta(a, b);
            if (th.is_zero()) continue;
            for (std::size_t r = 0; r < md; ++r)
              for (std::size_t k = 0; k < n; ++k)
                if (!w(r, k).is_zero())
                  add_outer(rhos[p], ti * th * w(r, k), m.act(a).column(r), h.mul(h.mul(b, k), h.e(c)));
          }
      }
  return coaction_tensor(md, n, rhos);
}

// (theta1 theta'2_(2)) . m0 (x) theta2 theta'2_(3) m1 S^-1(theta'2_(1)) theta'1
Tensor theta_coaction_second(const DualCocycle& d, const YdModule& m) {
  const HopfAlgebra& h = *d.host;
  const std::size_t n = h.dim(), md = m.dim();
  std::vector<Matrix> rhos(md, Matrix(md, n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t dd = 0; dd < n; ++dd) {
      const Scalar& ti = d.theta_inv(c, dd);
      if (ti.is_zero()) continue;
      for (const Term& t : h.cop(dd, 3))
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const Scalar& th = d.theta(a, b);
            if (th.is_zero()) continue;
            Vec left = h.mul(h.e(a), h.e(t.i[1]));
            for (std::size_t p = 0; p < md; ++p) {
              const Matrix& r = m.rho(p);
              for (std::size_t q = 0; q < md; ++q)
                for (std::size_t k = 0; k < n; ++k) {
                  if (r(q, k).is_zero()) continue;
                  Vec right = h.mul(h.mul(h.mul(h.mul(b, t.i[2]), h.e(k)), h.Sinv(t.i[0])), h.e(c));
                  add_outer(rhos[p], ti * th * t.c * r(q, k), m.act(left, unit_vec(md, q)), right);
                }
            }
          }
    }
  return coaction_tensor(md, n, rhos);
}

}  // namespace

YdModule theta_module(const DualCocycle& d, const YdModule& m) {
  require_host(*d.host, m, "theta_module");
  Tensor c = theta_coaction_first(d, m);
  if (c != theta_coaction_second(d, m)) throw std::logic_error("theta_module: the two coaction formulas disagree");
  return YdModule(deform_dual(d), m.action(), std::move(c));
}

YdMap theta_phi(const DualCocycle& d, const YdModule& m, const YdModule& nn) {
  require_host(*d.host, m, "theta_phi");
  require_host(*d.host, nn, "theta_phi");
  const std::size_t n = d.host->dim();
  Matrix out(m.dim() * nn.dim(), m.dim() * nn.dim());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!d.theta_inv(a, b).is_zero()) out = out + d.theta_inv(a, b) * kron(m.act(a), nn.act(b));
  return YdMap{out};
}

CheckReport verify_theta_functor(const DualCocycle& d, const YdModule& m, const YdModule& nn) {
  CheckReport rep;
  YdModule tm = theta_module(d, m), tn = theta_module(d, nn);
  Matrix p_mn = theta_phi(d, m, nn).matrix, p_nm = theta_phi(d, nn, m).matrix;
  rep.add("phi_invertible", rank(p_mn) == m.dim() * nn.dim());
  rep.merge("phi_yd_map", verify_yd_map(tensor_modules(tm, tn), theta_module(d, tensor_modules(m, nn)), p_mn));
  rep.add("braided_square", p_nm * braiding(tm, tn).matrix == braiding(m, nn).matrix * p_mn);
  return rep;
}

YdAlgebra theta_algebra(const DualCocycle& d, const YdAlgebra& a) {
  const std::size_t n = d.host->dim(), md = a.dim();
  YdModule tm = theta_module(d, a.module);
  Tensor mult = mult_tensor(md, [&](int p, int q) {
    Vec out(md);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (!d.theta_inv(x, y).is_zero())
          axpy(out, d.theta_inv(x, y), a.mul(a.module.act(x).column(p), a.module.act(y).column(q)));
    return out;
  });
  return YdAlgebra{std::move(tm), std::move(mult), a.unit};
}

YdAlgebra braided_product(const YdAlgebra& a, const YdAlgebra& b) {
  const YdModule& ma = a.module;
  const YdModule& mb = b.module;
  require_same_host(ma, mb, "braided_product");
  const std::size_t n = ma.host()->dim(), da = a.dim(), db = b.dim();
  YdModule m = tensor_modules(ma, mb);
  Tensor mult = mult_tensor(da * db, [&](int x, int y) {
    int pa = x / static_cast<int>(db), pb = x % static_cast<int>(db);
    int qa = y / static_cast<int>(db), qb = y % static_cast<int>(db);
    Vec out(da * db);
    const Matrix& r = ma.rho(qa);
    for (std::size_t c0 = 0; c0 < da; ++c0)
      for (std::size_t k = 0; k < n; ++k) {
        if (r(c0, k).is_zero()) continue;
        Vec left = a.mul(pa, static_cast<int>(c0));
        Vec right = b.mul(mb.act(k).column(pb), unit_vec(db, qb));
        axpy(out, r(c0, k), kron(left, right));
      }
    return out;
  });
  return YdAlgebra{std::move(m), std::move(mult), kron(a.unit, b.unit)};
}

YdAlgebra braided_product_r(const Matrix& rr, const YdAlgebra& a, const YdAlgebra& b) {
  const YdModule& ma = a.module;
  const YdModule& mb = b.module;
  require_same_host(ma, mb, "braided_product_r");
  const std::size_t n = ma.host()->dim(), da = a.dim(), db = b.dim();
  YdModule m = tensor_modules(ma, mb);
  Tensor mult = mult_tensor(da * db, [&](int x, int y) {
    int pa = x / static_cast<int>(db), pb = x % static_cast<int>(db);
    int qa = y / static_cast<int>(db), qb = y % static_cast<int>(db);
    Vec out(da * db);
    const Matrix &ra = ma.rho(qa), &rb = mb.rho(pb);
    for (std::size_t a0 = 0; a0 < da; ++a0)
      for (std::size_t k1 = 0; k1 < n; ++k1) {
        if (ra(a0, k1).is_zero()) continue;
        for (std::size_t b0 = 0; b0 < db; ++b0)
          for (std::size_t k2 = 0; k2 < n; ++k2) {
            if (rb(b0, k2).is_zero() || rr(k1, k2).is_zero()) continue;
            axpy(out, ra(a0, k1) * rb(b0, k2) * rr(k1, k2),
                 kron(a.mul(pa, static_cast<int>(a0)), b.mul(static_cast<int>(b0), qb)));
          }
      }
    return out;
  });
  return YdAlgebra{std::move(m), std::move(mult), kron(a.unit, b.unit)};
}

YdAlgebra h_opposite(const YdAlgebra& a) {
  const YdModule& m = a.module;
  const std::size_t n = m.host()->dim(), md = a.dim();
  Tensor mult = mult_tensor(md, [&](int p, int q) {
    Vec out(md);
    const Matrix& r = m.rho(q);
    for (std::size_t q0 = 0; q0 < md; ++q0)
      for (std::size_t k = 0; k < n; ++k)
        if (!r(q0, k).is_zero()) axpy(out, r(q0, k), a.mul(unit_vec(md, q0), m.act(k).column(p)));
    return out;
  });
  return YdAlgebra{m, std::move(mult), a.unit};
}

Matrix operator_of(const YdModule& m, const Vec& h) {
  Matrix out(m.dim(), m.dim());
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) out = out + h[i] * m.act(i);
  return out;
}

YdAlgebra end_algebra(const YdModule& m) {
  const HopfAlgebra& h = *m.host();
  const std::size_t n = h.dim(), md = m.dim(), dd = md * md;
  // basis E_(q,p): v_p -> v_q, index q*md + p
  std::vector<Matrix> acts(n, Matrix(dd, dd));
  for (std::size_t i = 0; i < n; ++i)
    for (const Term& t : h.cop(i, 2)) {
      Matrix left = m.act(t.i[0]);
      Matrix right = operator_of(m, h.S(t.i[1]));
      // f -> left f right as an operator on row-major flattening
      acts[i] = acts[i] + t.c * kron(left, right.transpose());
    }
  std::vector<Matrix> rhos;
  for (std::size_t q = 0; q < md; ++q)
    for (std::size_t p = 0; p < md; ++p) {
      Matrix r(dd, n);
      const Matrix& rq = m.rho(q);
      for (std::size_t s = 0; s < md; ++s) {
        const Matrix& rs = m.rho(s);
        for (std::size_t k = 0; k < n; ++k) {
          if (rs(p, k).is_zero()) continue;
          Vec sk = h.Sinv(k);
          for (std::size_t x = 0; x < md; ++x)
            for (std::size_t l = 0; l < n; ++l)
              if (!rq(x, l).is_zero()) add_outer(r, rs(p, k) * rq(x, l), unit_vec(dd, x * md + s), h.mul(sk, h.e(l)));
        }
      }
      rhos.push_back(r);
    }
  Tensor mult({dd, dd, dd});
  for (std::size_t q = 0; q < md; ++q)
    for (std::size_t p = 0; p < md; ++p)
      for (std::size_t s = 0; s < md; ++s) mult(q * md + p, p * md + s, q * md + s) = 1;
  YdModule em(m.host(), action_tensor(h, dd, acts), coaction_tensor(dd, n, rhos));
  return YdAlgebra{std::move(em), std::move(mult), Matrix::identity(md).data()};
}

bool quantum_commutative(const YdAlgebra& a) { return h_opposite(a).mult == a.mult; }

AzumayaResult azumaya_check(const YdAlgebra& a) {
  const YdModule& m = a.module;
  const std::size_t n = m.host()->dim(), md = a.dim(), dd = md * md;
  AzumayaResult res;
  // F(a # b)(x) = a x0 (x1 . b);  G(a # b)(x) = a0 (a1 . x) b
  Matrix f(dd, dd), g(dd, dd);
  for (std::size_t p = 0; p < md; ++p)
    for (std::size_t q = 0; q < md; ++q)
      for (std::size_t x = 0; x < md; ++x) {
        Vec fv(md), gv(md);
        const Matrix& rx = m.rho(x);
        const Matrix& rp = m.rho(p);
        for (std::size_t r = 0; r < md; ++r)
          for (std::size_t k = 0; k < n; ++k) {
            if (!rx(r, k).is_zero())
              axpy(fv, rx(r, k), a.mul(a.mul(static_cast<int>(p), static_cast<int>(r)), m.act(k).column(q)));
            if (!rp(r, k).is_zero())
              axpy(gv, rp(r, k), a.mul(a.mul(unit_vec(md, r), m.act(k).column(x)), unit_vec(md, q)));
          }
        for (std::size_t y = 0; y < md; ++y) {
          f(y * md + x, p * md + q) = fv[y];
          g(y * md + x, p * md + q) = gv[y];
        }
      }
  res.rank_f = rank(f);
  res.rank_g = rank(g);
  res.report.add("nonzero", md > 0 && !is_zero(a.unit));
  res.report.add("F_bijective", res.rank_f == dd, {}, "rank " + std::to_string(res.rank_f) + "/" + std::to_string(dd));
  res.report.add("G_bijective", res.rank_g == dd, {}, "rank " + std::to_string(res.rank_g) + "/" + std::to_string(dd));
  {
    // F(u v) = F(u) F(v) for u among the generators a#1, 1#b and v in a basis
    // (a # b)(c # d) = a c0 # (c1 . b) o d, o the H-opposite product
    YdAlgebra op = h_opposite(a);
    auto smul = [&](const Vec& u, std::size_t c) {
      Vec out(dd);
      const std::size_t pc = c / md, qd = c % md;
      const Matrix& r = m.rho(static_cast<int>(pc));
      for (std::size_t x = 0; x < dd; ++x) {
        if (u[x].is_zero()) continue;
        const std::size_t pa = x / md, qb = x % md;
        for (std::size_t c0 = 0; c0 < md; ++c0)
          for (std::size_t k = 0; k < n; ++k) {
            if (r(c0, k).is_zero()) continue;
            Vec left = a.mul(static_cast<int>(pa), static_cast<int>(c0));
            Vec right = op.mul(m.act(static_cast<int>(k)).column(qb), unit_vec(md, qd));
            axpy(out, u[x] * r(c0, k), kron(left, right));
          }
      }
      return out;
    };
    std::vector<Matrix> img(dd);
    for (std::size_t c = 0; c < dd; ++c) img[c] = Matrix(md, md, f.column(c));
    auto image = [&](const Vec& v) {
      Matrix out(md, md);
      for (std::size_t c = 0; c < dd; ++c)
        if (!v[c].is_zero()) out = out + v[c] * img[c];
      return out;
    };
    std::vector<Vec> gens;
    for (std::size_t p = 0; p < md; ++p) {
      gens.push_back(kron(unit_vec(md, p), a.unit));
      gens.push_back(kron(a.unit, unit_vec(md, p)));
    }
    std::vector<long> w;
    if (image(kron(a.unit, a.unit)) != Matrix::identity(md)) w = {-1};
    for (std::size_t gi = 0; gi < gens.size() && w.empty(); ++gi) {
      Matrix fg = image(gens[gi]);
      for (std::size_t c = 0; c < dd && w.empty(); ++c)
        if (image(smul(gens[gi], c)) != fg * img[c])
          w = {static_cast<long>(gi), static_cast<long>(c)};
    }
    res.report.add("F_algebra_map", w.empty(), w);
    res.report.merge("F_module_map", verify_yd_map(tensor_modules(m, op.module), end_algebra(m).module, f));
  }
  res.is_azumaya = res.report.ok();
  return res;
}

Matrix yd_hom_basis(const YdModule& src, const YdModule& dst) {
  const std::size_t n = src.host()->dim(), ms = src.dim(), mt = dst.dim(), unknowns = ms * mt;
  // constraint rows: module (n * mt * ms), comodule (ms * mt * n)
  const std::size_t rows = n * mt * ms + ms * mt * n;
  Matrix c(rows, unknowns);
  for (std::size_t x = 0; x < unknowns; ++x) {
    Matrix f(mt, ms);
    f.data()[x] = 1;
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Matrix d = f * src.act(i) - dst.act(i) * f;
      for (const auto& v : d.data()) c(row++, x) = v;
    }
    for (std::size_t p = 0; p < ms; ++p) {
      Matrix d = dst.rho(f.column(p)) - f * src.rho(p);
      for (const auto& v : d.data()) c(row++, x) = v;
    }
  }
  return kernel_basis(c);
}

Matrix random_yd_map(const YdModule& src, const YdModule& dst, std::uint64_t seed) {
  Matrix basis = yd_hom_basis(src, dst);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  Vec v(basis.rows());
  for (std::size_t c = 0; c < basis.cols(); ++c) axpy(v, Scalar(coef(rng)), basis.column(c));
  Matrix f(dst.dim(), src.dim(), v);
  for (auto& x : f.data()) x = src.host()->field().coerce(x);
  return f;
}

}  // namespace hopflab
