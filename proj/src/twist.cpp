#include "hopflab/twist.hpp"

#include <stdexcept>

namespace hopflab {

namespace {

Scalar form(const Matrix& f, const Vec& a, const Vec& b) { return HopfAlgebra::pair(f, a, b); }

Vec flat(const Matrix& m) { return m.data(); }

Matrix square(std::size_t n, Vec v) { return Matrix(n, n, std::move(v)); }

Matrix coerced(const Field& f, Matrix m) {
  for (auto& x : m.data()) x = f.coerce(x);
  return m;
}

// first index where two equal-length vectors differ, or -1
long first_diff(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return static_cast<long>(i);
  return -1;
}

}  // namespace

Matrix convolve2(const HopfAlgebra& h, const Matrix& f, const Matrix& g) {
  const std::size_t n = h.dim();
  if (f.rows() != n || f.cols() != n || g.rows() != n || g.cols() != n)
    throw std::invalid_argument("convolve2: functionals must be n x n");
  Matrix out(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Scalar s;
      for (const Term& a : h.cop(x, 2))
        for (const Term& b : h.cop(y, 2)) {
          const Scalar& fv = f(a.i[0], b.i[0]);
          if (fv.is_zero()) continue;
          const Scalar& gv = g(a.i[1], b.i[1]);
          if (!gv.is_zero()) s += a.c * b.c * fv * gv;
        }
      out(x, y) = s;
    }
  return out;
}

Matrix conv_unit2(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Matrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = h.eps(i) * h.eps(j);
  return u;
}

std::optional<Matrix> conv_inverse2(const HopfAlgebra& h, const Matrix& f) {
  const std::size_t n = h.dim();
  const std::size_t nn = n * n;
  // (f*x)(i,j) = sum f(i1,j1) x(i2,j2)
  Matrix op(nn, nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const Term& a : h.cop(i, 2))
        for (const Term& b : h.cop(j, 2)) {
          const Scalar& fv = f(a.i[0], b.i[0]);
          if (!fv.is_zero()) op(i * n + j, a.i[1] * n + b.i[1]) += a.c * b.c * fv;
        }
  Matrix rhs(nn, 1, flat(conv_unit2(h)));
  auto x = solve(op, rhs);
  if (!x) return std::nullopt;
  Matrix inv = square(n, x->data());
  if (convolve2(h, f, inv) != conv_unit2(h) || convolve2(h, inv, f) != conv_unit2(h)) return std::nullopt;
  return inv;
}

Vec convolve1(const HopfAlgebra& h, const Vec& f, const Vec& g) {
  const std::size_t n = h.dim();
  Vec out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (const Term& t : h.cop(x, 2)) out[x] += t.c * f[t.i[0]] * g[t.i[1]];
  return out;
}

std::optional<Vec> conv_inverse1(const HopfAlgebra& h, const Vec& f) {
  const std::size_t n = h.dim();
  Matrix op(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (const Term& t : h.cop(x, 2)) op(x, t.i[1]) += t.c * f[t.i[0]];
  auto x = solve(op, Matrix(n, 1, h.counit()));
  if (!x) return std::nullopt;
  Vec inv = x->data();
  if (convolve1(h, f, inv) != h.counit() || convolve1(h, inv, f) != h.counit()) return std::nullopt;
  return inv;
}

TwoCocycle make_two_cocycle(HopfPtr host, Matrix sigma) {
  const std::size_t n = host->dim();
  if (sigma.rows() != n || sigma.cols() != n) throw std::invalid_argument("cocycle must be an n x n matrix");
  sigma = coerced(host->field(), std::move(sigma));
  auto inv = conv_inverse2(*host, sigma);
  if (!inv) throw std::invalid_argument("cocycle is not convolution invertible");
  return TwoCocycle{std::move(host), std::move(sigma), std::move(*inv)};
}

TwoCocycle trivial_cocycle(HopfPtr host) {
  Matrix u = conv_unit2(*host);
  return TwoCocycle{std::move(host), u, u};
}

TwoCocycle inverse_cocycle(const TwoCocycle& c) { return TwoCocycle{deform(c), c.sigma_inv, c.sigma}; }

CheckReport verify_two_cocycle(const TwoCocycle& c) {
  const HopfAlgebra& h = *c.host;
  const int n = static_cast<int>(h.dim());
  const Matrix& s = c.sigma;
  const Matrix& si = c.sigma_inv;
  CheckReport rep;

  rep.add("convolution_inverse",
          convolve2(h, s, si) == conv_unit2(h) && convolve2(h, si, s) == conv_unit2(h));
  {
    std::vector<long> w;
    const Vec one = h.one();
    for (int i = 0; i < n && w.empty(); ++i)
      if (form(s, h.e(i), one) != h.eps(i) || form(s, one, h.e(i)) != h.eps(i)) w = {i};
    rep.add("normalized", w.empty(), w);
  }

  auto triple_check = [&](const char* name, auto&& lhs, auto&& rhs) {
    std::vector<long> w;
    for (int g = 0; g < n && w.empty(); ++g)
      for (int x = 0; x < n && w.empty(); ++x)
        for (int l = 0; l < n && w.empty(); ++l)
          if (lhs(g, x, l) != rhs(g, x, l)) w = {g, x, l};
    rep.add(name, w.empty(), w);
  };

  // sigma(g1 h1) sigma(g2h2, l) = sigma(h1, l1) sigma(g, h2l2)
  triple_check(
      "cocycle_identity",
      [&](int g, int x, int l) {
        Scalar r;
        for (const Term& a : h.cop(g, 2))
          for (const Term& b : h.cop(x, 2)) {
            Scalar f = s(a.i[0], b.i[0]);
            if (!f.is_zero()) r += a.c * b.c * f * form(s, h.mul(a.i[1], b.i[1]), h.e(l));
          }
        return r;
      },
      [&](int g, int x, int l) {
        Scalar r;
        for (const Term& b : h.cop(x, 2))
          for (const Term& d : h.cop(l, 2)) {
            Scalar f = s(b.i[0], d.i[0]);
            if (!f.is_zero()) r += b.c * d.c * f * form(s, h.e(g), h.mul(b.i[1], d.i[1]));
          }
        return r;
      });
  // sigma(g1h1, l1) sigma^-1(g2, h2l2) = sigma^-1(g, h1) sigma(h2, l)
  triple_check(
      "cocycle_identity_mixed",
      [&](int g, int x, int l) {
        Scalar r;
        for (const Term& a : h.cop(g, 2))
          for (const Term& b : h.cop(x, 2))
            for (const Term& d : h.cop(l, 2)) {
              Scalar f = form(s, h.mul(a.i[0], b.i[0]), h.e(d.i[0]));
              if (!f.is_zero()) r += a.c * b.c * d.c * f * form(si, h.e(a.i[1]), h.mul(b.i[1], d.i[1]));
            }
        return r;
      },
      [&](int g, int x, int l) {
        Scalar r;
        for (const Term& b : h.cop(x, 2)) r += b.c * si(g, b.i[0]) * s(b.i[1], l);
        return r;
      });
  // sigma^-1(g1h1, l) sigma^-1(g2, h2) = sigma^-1(g, h1l1) sigma^-1(h2, l2)
  triple_check(
      "inverse_cocycle_identity",
      [&](int g, int x, int l) {
        Scalar r;
        for (const Term& a : h.cop(g, 2))
          for (const Term& b : h.cop(x, 2)) {
            Scalar f = si(a.i[1], b.i[1]);
            if (!f.is_zero()) r += a.c * b.c * f * form(si, h.mul(a.i[0], b.i[0]), h.e(l));
          }
        return r;
      },
      [&](int g, int x, int l) {
        Scalar r;
        for (const Term& b : h.cop(x, 2))
          for (const Term& d : h.cop(l, 2)) {
            Scalar f = si(b.i[1], d.i[1]);
            if (!f.is_zero()) r += b.c * d.c * f * form(si, h.e(g), h.mul(b.i[0], d.i[0]));
          }
        return r;
      });
  {  // sigma(h1, S h2) sigma^-1(S h3, h4) = eps(h)
    std::vector<long> w;
    for (int x = 0; x < n && w.empty(); ++x) {
      Scalar r;
      for (const Term& t : h.cop(x, 4)) {
        Scalar f = form(s, h.e(t.i[0]), h.S(t.i[1]));
        if (!f.is_zero()) r += t.c * f * form(si, h.S(t.i[2]), h.e(t.i[3]));
      }
      if (r != h.eps(x)) w = {x};
    }
    rep.add("antipode_identity", w.empty(), w);
  }
  return rep;
}

bool is_lazy(const TwoCocycle& c) {
  const HopfAlgebra& h = *c.host;
  const int n = static_cast<int>(h.dim());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vec l(n), r(n);
      for (const Term& a : h.cop(x, 2))
        for (const Term& b : h.cop(y, 2)) {
          Scalar cc = a.c * b.c;
          const Scalar& f0 = c.sigma(a.i[0], b.i[0]);
          if (!f0.is_zero()) axpy(l, cc * f0, h.mul(a.i[1], b.i[1]));
          const Scalar& f1 = c.sigma(a.i[1], b.i[1]);
          if (!f1.is_zero()) axpy(r, cc * f1, h.mul(a.i[0], b.i[0]));
        }
      if (l != r) return false;
    }
  return true;
}

bool is_central(const HopfAlgebra& h, const Vec& mu) {
  const int n = static_cast<int>(h.dim());
  for (int x = 0; x < n; ++x) {
    Vec l(n), r(n);
    for (const Term& t : h.cop(x, 2)) {
      l[t.i[1]] += t.c * mu[t.i[0]];
      r[t.i[0]] += t.c * mu[t.i[1]];
    }
    if (l != r) return false;
  }
  return true;
}

LazyOneCocycle make_lazy_one_cocycle(HopfPtr host, Vec mu) {
  if (mu.size() != host->dim()) throw std::invalid_argument("one-cocycle must have length n");
  for (auto& x : mu) x = host->field().coerce(x);
  if (dot(mu, host->one()) != host->field().one()) throw std::invalid_argument("one-cocycle is not normalized");
  if (!is_central(*host, mu)) throw std::invalid_argument("one-cocycle is not central");
  auto inv = conv_inverse1(*host, mu);
  if (!inv) throw std::invalid_argument("one-cocycle is not convolution invertible");
  return LazyOneCocycle{std::move(host), std::move(mu), std::move(*inv)};
}

TwoCocycle coboundary_of(HopfPtr host, const Vec& mu) {
  const HopfAlgebra& h = *host;
  const std::size_t n = h.dim();
  auto mu_inv = conv_inverse1(h, mu);
  if (!mu_inv) throw std::invalid_argument("functional is not convolution invertible");
  Matrix s(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Scalar r;
      for (const Term& a : h.cop(x, 2))
        for (const Term& b : h.cop(y, 2)) {
          Scalar f = a.c * b.c * mu[a.i[0]] * mu[b.i[0]];
          if (!f.is_zero()) r += f * dot(*mu_inv, h.mul(a.i[1], b.i[1]));
        }
      s(x, y) = r;
    }
  return make_two_cocycle(std::move(host), std::move(s));
}

TwoCocycle coboundary_from(const LazyOneCocycle& mu) { return coboundary_of(mu.host, mu.mu); }

HopfPtr deform(const TwoCocycle& c) {
  const HopfAlgebra& h = *c.host;
  const std::size_t n = h.dim();
  Tensor mult({n, n, n});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const Term& a : h.cop(x, 3))
        for (const Term& b : h.cop(y, 3)) {
          Scalar f = c.sigma(a.i[0], b.i[0]);
          if (f.is_zero()) continue;
          f *= c.sigma_inv(a.i[2], b.i[2]);
          if (f.is_zero()) continue;
          f *= a.c * b.c;
          for (const auto& [k, v] : h.prod(a.i[1], b.i[1])) mult(x, y, k) += f * v;
        }
  Matrix s(n, n), sinv(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    Vec col(n), icol(n);
    for (const Term& t : h.cop(x, 5)) {
      // sigma(h1, S h2) S(h3) sigma^-1(S h4, h5)
      Scalar f = form(c.sigma, h.e(t.i[0]), h.S(t.i[1]));
      if (!f.is_zero()) {
        f *= form(c.sigma_inv, h.S(t.i[3]), h.e(t.i[4]));
        if (!f.is_zero()) axpy(col, t.c * f, h.S(t.i[2]));
      }
      // sigma^-1(h5, S^-1 h4) S^-1(h3) sigma(S^-1 h2, h1)
      Scalar g = form(c.sigma_inv, h.e(t.i[4]), h.Sinv(t.i[3]));
      if (!g.is_zero()) {
        g *= form(c.sigma, h.Sinv(t.i[1]), h.e(t.i[0]));
        if (!g.is_zero()) axpy(icol, t.c * g, h.Sinv(t.i[2]));
      }
    }
    s.set_column(x, col);
    sinv.set_column(x, icol);
  }
  return make_hopf(h.field(), h.name() + "^sigma", h.basis(), std::move(mult), h.comult(), h.unit(), h.counit(),
                   std::move(s), std::move(sinv));
}

TwoCocycle compose_cocycles(const TwoCocycle& c1, const TwoCocycle& c) {
  HopfPtr hs = deform(c);
  if (!c1.host->same_structure(*hs)) throw std::invalid_argument("compose_cocycles: c1 is not a cocycle on H^sigma");
  TwoCocycle out = make_two_cocycle(c.host, convolve2(*c.host, c1.sigma, c.sigma));
  if (!deform(out)->same_structure(*deform(c1)))
    throw std::logic_error("compose_cocycles: H^(s1*s) differs from (H^s)^s1");
  return out;
}

Matrix hh_mul(const HopfAlgebra& h, const Matrix& x, const Matrix& y) {
  return square(h.dim(), tensor_mul(h, 2, flat(x), flat(y)));
}

Matrix hh_one(const HopfAlgebra& h) { return square(h.dim(), kron(h.one(), h.one())); }

std::optional<Matrix> hh_inverse(const HopfAlgebra& h, const Matrix& x) {
  const std::size_t n = h.dim();
  const std::size_t nn = n * n;
  Matrix op(nn, nn);
  for (std::size_t b = 0; b < nn; ++b) op.set_column(b, tensor_mul(h, 2, flat(x), unit_vec(nn, b)));
  auto z = solve(op, Matrix(nn, 1, flat(hh_one(h))));
  if (!z) return std::nullopt;
  Matrix inv = square(n, z->data());
  if (hh_mul(h, x, inv) != hh_one(h) || hh_mul(h, inv, x) != hh_one(h)) return std::nullopt;
  return inv;
}

Matrix hh_flip(const Matrix& x) { return x.transpose(); }

DualCocycle make_dual_cocycle(HopfPtr host, Matrix theta) {
  const std::size_t n = host->dim();
  if (theta.rows() != n || theta.cols() != n) throw std::invalid_argument("dual cocycle must be an n x n matrix");
  theta = coerced(host->field(), std::move(theta));
  auto inv = hh_inverse(*host, theta);
  if (!inv) throw std::invalid_argument("dual cocycle is not invertible in H (x) H");
  return DualCocycle{std::move(host), std::move(theta), std::move(*inv)};
}

DualCocycle trivial_dual_cocycle(HopfPtr host) {
  Matrix one = hh_one(*host);
  return DualCocycle{std::move(host), one, one};
}

DualCocycle inverse_dual_cocycle(const DualCocycle& d) { return DualCocycle{deform_dual(d), d.theta_inv, d.theta}; }

CheckReport verify_dual_cocycle(const DualCocycle& d) {
  const HopfAlgebra& h = *d.host;
  CheckReport rep;
  rep.add("inverse", hh_mul(h, d.theta, d.theta_inv) == hh_one(h) && hh_mul(h, d.theta_inv, d.theta) == hh_one(h));
  const Vec t = flat(d.theta);
  Vec t12 = embed_legs(h, 2, t, 3, {0, 1});
  Vec t23 = embed_legs(h, 2, t, 3, {1, 2});
  Vec lhs = tensor_mul(h, 3, t12, apply_delta_at(h, 2, t, 0));
  Vec rhs = tensor_mul(h, 3, t23, apply_delta_at(h, 2, t, 1));
  long w = first_diff(lhs, rhs);
  rep.add("dual_cocycle_identity", w < 0, w < 0 ? std::vector<long>{} : std::vector<long>{w});
  Vec e0 = apply_eps_at(h, 2, t, 0), e1 = apply_eps_at(h, 2, t, 1);
  long w0 = first_diff(e0, h.one()), w1 = first_diff(e1, h.one());
  rep.add("normalized", w0 < 0 && w1 < 0, {w0 < 0 ? w1 : w0});
  return rep;
}

HopfPtr deform_dual(const DualCocycle& d) {
  const HopfAlgebra& h = *d.host;
  const std::size_t n = h.dim();
  Tensor comult({n, n, n});
  for (std::size_t x = 0; x < n; ++x) {
    Matrix dx(n, n);
    for (const Term& t : h.cop(x, 2)) dx(t.i[0], t.i[1]) += t.c;
    Matrix r = hh_mul(h, hh_mul(h, d.theta, dx), d.theta_inv);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) comult(x, a, b) = r(a, b);
  }
  // S_theta(h) = U S(h) V with U = theta1 S(theta2), V = S(theta'1) theta'2
  Vec u(n), v(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!d.theta(a, b).is_zero()) axpy(u, d.theta(a, b), h.mul(h.e(a), h.S(b)));
      if (!d.theta_inv(a, b).is_zero()) axpy(v, d.theta_inv(a, b), h.mul(h.S(a), h.e(b)));
    }
  Matrix s(n, n);
  for (std::size_t x = 0; x < n; ++x) s.set_column(x, h.mul(h.mul(u, h.S(x)), v));
  return make_hopf(h.field(), h.name() + "_theta", h.basis(), h.mult(), std::move(comult), h.unit(), h.counit(),
                   std::move(s));
}

bool is_lazy_dual(const DualCocycle& d) {
  const HopfAlgebra& h = *d.host;
  const std::size_t n = h.dim();
  for (std::size_t x = 0; x < n; ++x) {
    Matrix dx(n, n);
    for (const Term& t : h.cop(x, 2)) dx(t.i[0], t.i[1]) += t.c;
    if (hh_mul(h, d.theta, dx) != hh_mul(h, dx, d.theta)) return false;
  }
  return true;
}

}  // namespace hopflab
