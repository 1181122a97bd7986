#include "hopflab/hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopflab {

namespace {

std::size_t ipow(std::size_t n, int k) {
  std::size_t r = 1;
  while (k-- > 0) r *= n;
  return r;
}

void split_index(std::size_t idx, std::size_t n, int k, int* out) {
  for (int a = k - 1; a >= 0; --a) {
    out[a] = static_cast<int>(idx % n);
    idx /= n;
  }
}

std::size_t join_index(const int* legs, std::size_t n, int k) {
  std::size_t idx = 0;
  for (int a = 0; a < k; ++a) idx = idx * n + legs[a];
  return idx;
}

}  // namespace

HopfAlgebra::HopfAlgebra(Field field, std::string name, std::vector<std::string> basis, Tensor mult, Tensor comult,
                         Vec unit, Vec counit, Matrix antipode, Matrix antipode_inv)
    : field_(field),
      name_(std::move(name)),
      n_(basis.size()),
      basis_(std::move(basis)),
      mult_(std::move(mult)),
      comult_(std::move(comult)),
      unit_(std::move(unit)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      antipode_inv_(std::move(antipode_inv)) {
  const std::vector<std::size_t> cube{n_, n_, n_};
  if (n_ == 0) throw std::invalid_argument("Hopf algebra of dimension 0");
  if (mult_.shape() != cube) throw std::invalid_argument("mult tensor must have shape [n,n,n]");
  if (comult_.shape() != cube) throw std::invalid_argument("comult tensor must have shape [n,n,n]");
  if (unit_.size() != n_ || counit_.size() != n_) throw std::invalid_argument("unit/counit must have length n");
  if (antipode_.rows() != n_ || antipode_.cols() != n_ || antipode_inv_.rows() != n_ || antipode_inv_.cols() != n_)
    throw std::invalid_argument("antipode matrices must be n x n");
  for (auto* v : {&mult_.data(), &comult_.data(), &unit_, &counit_, &antipode_.data(), &antipode_inv_.data()})
    for (auto& x : *v) x = field_.coerce(x);
  if (antipode_ * antipode_inv_ != Matrix::identity(n_) || antipode_inv_ * antipode_ != Matrix::identity(n_))
    throw std::invalid_argument("antipode_inv is not the inverse of antipode");
  prod_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (!mult_(i, j, k).is_zero()) prod_[i * n_ + j].push_back({static_cast<int>(k), mult_(i, j, k)});
}

Vec HopfAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& [k, c] : prod_[i * n_ + j]) r[k] += ab * c;
    }
  }
  return r;
}

Vec HopfAlgebra::mul(int i, int j) const {
  Vec r(n_);
  for (const auto& [k, c] : prod(i, j)) r[k] = c;
  return r;
}

const std::vector<Term>& HopfAlgebra::cop(int i, int k) const {
  if (k < 1 || k > kMaxLegs) throw std::invalid_argument("iterated coproduct: leg count out of range");
  std::lock_guard<std::mutex> lock(mu_);
  for (int kk = 1; kk <= k; ++kk) {
    if (cop_cache_.count(kk)) continue;
    std::vector<std::vector<Term>> level(n_);
    for (std::size_t b = 0; b < n_; ++b) {
      if (kk == 1) {
        Term t;
        t.c = field_.one();
        t.i[0] = static_cast<int>(b);
        level[b].push_back(t);
        continue;
      }
      std::map<std::array<int, kMaxLegs>, Scalar> acc;
      for (const Term& t : cop_cache_.at(kk - 1)[b]) {
        int last = t.i[kk - 2];
        for (std::size_t x = 0; x < n_; ++x)
          for (std::size_t y = 0; y < n_; ++y) {
            const Scalar& d = comult_(last, x, y);
            if (d.is_zero()) continue;
            auto key = t.i;
            key[kk - 2] = static_cast<int>(x);
            key[kk - 1] = static_cast<int>(y);
            acc[key] += t.c * d;
          }
      }
      for (auto& [key, c] : acc)
        if (!c.is_zero()) level[b].push_back(Term{c, key});
    }
    cop_cache_[kk] = std::move(level);
  }
  return cop_cache_.at(k)[i];
}

std::vector<Term> HopfAlgebra::cop(const Vec& x, int k) const {
  std::vector<Term> out;
  for (std::size_t b = 0; b < n_; ++b) {
    if (x[b].is_zero()) continue;
    for (const Term& t : cop(static_cast<int>(b), k)) out.push_back(Term{x[b] * t.c, t.i});
  }
  return out;
}

Scalar HopfAlgebra::pair(const Matrix& f, const Vec& x, const Vec& y) {
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    Scalar row;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero() && !f(i, j).is_zero()) row += f(i, j) * y[j];
    if (!row.is_zero()) s += x[i] * row;
  }
  return s;
}

bool HopfAlgebra::same_structure(const HopfAlgebra& o) const {
  return field_ == o.field_ && n_ == o.n_ && mult_ == o.mult_ && comult_ == o.comult_ && unit_ == o.unit_ &&
         counit_ == o.counit_ && antipode_ == o.antipode_ && antipode_inv_ == o.antipode_inv_;
}

HopfPtr make_hopf(Field field, std::string name, std::vector<std::string> basis, Tensor mult, Tensor comult,
                  Vec unit, Vec counit, Matrix antipode, Matrix antipode_inv) {
  return std::make_shared<const HopfAlgebra>(field, std::move(name), std::move(basis), std::move(mult),
                                             std::move(comult), std::move(unit), std::move(counit),
                                             std::move(antipode), std::move(antipode_inv));
}

HopfPtr make_hopf(Field field, std::string name, std::vector<std::string> basis, Tensor mult, Tensor comult,
                  Vec unit, Vec counit, Matrix antipode) {
  for (auto& x : antipode.data()) x = field.coerce(x);
  auto inv = inverse(antipode);
  if (!inv) throw std::invalid_argument("antipode is not bijective");
  return make_hopf(field, std::move(name), std::move(basis), std::move(mult), std::move(comult), std::move(unit),
                   std::move(counit), std::move(antipode), *inv);
}

CheckReport verify_hopf_axioms(const HopfAlgebra& h) {
  CheckReport rep;
  const int n = static_cast<int>(h.dim());
  const Vec one = h.one();

  {  // associativity
    std::vector<long> w;
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j)
        for (int k = 0; k < n && w.empty(); ++k)
          if (h.mul(h.mul(i, j), h.e(k)) != h.mul(h.e(i), h.mul(j, k))) w = {i, j, k};
    rep.add("associativity", w.empty(), w);
  }
  {
    std::vector<long> w;
    for (int i = 0; i < n && w.empty(); ++i)
      if (h.mul(one, h.e(i)) != h.e(i) || h.mul(h.e(i), one) != h.e(i)) w = {i};
    rep.add("unit", w.empty(), w);
  }
  {  // (Delta (x) id)Delta = (id (x) Delta)Delta
    std::vector<long> w;
    for (int i = 0; i < n && w.empty(); ++i) {
      Vec d(static_cast<std::size_t>(n) * n);
      for (const Term& t : h.cop(i, 2)) d[t.i[0] * n + t.i[1]] += t.c;
      if (apply_delta_at(h, 2, d, 0) != apply_delta_at(h, 2, d, 1)) w = {i};
    }
    rep.add("coassociativity", w.empty(), w);
  }
  {
    std::vector<long> w;
    for (int i = 0; i < n && w.empty(); ++i) {
      Vec d(static_cast<std::size_t>(n) * n);
      for (const Term& t : h.cop(i, 2)) d[t.i[0] * n + t.i[1]] += t.c;
      if (apply_eps_at(h, 2, d, 0) != h.e(i) || apply_eps_at(h, 2, d, 1) != h.e(i)) w = {i};
    }
    rep.add("counit", w.empty(), w);
  }
  {  // Delta multiplicative
    auto delta = [&](const Vec& x) {
      Vec d(static_cast<std::size_t>(n) * n);
      for (const Term& t : h.cop(x, 2)) d[t.i[0] * n + t.i[1]] += t.c;
      return d;
    };
    std::vector<long> w;
    if (delta(one) != kron(one, one)) w = {-1};
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j)
        if (delta(h.mul(i, j)) != tensor_mul(h, 2, delta(h.e(i)), delta(h.e(j)))) w = {i, j};
    rep.add("comult_multiplicative", w.empty(), w);
  }
  {
    std::vector<long> w;
    if (h.eps(one) != h.field().one()) w = {-1};
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j)
        if (h.eps(h.mul(i, j)) != h.eps(i) * h.eps(j)) w = {i, j};
    rep.add("counit_multiplicative", w.empty(), w);
  }
  {  // S(h1)h2 = eps(h)1 = h1 S(h2)
    std::vector<long> w;
    for (int i = 0; i < n && w.empty(); ++i) {
      Vec l(n), r(n);
      for (const Term& t : h.cop(i, 2)) {
        axpy(l, t.c, h.mul(h.S(t.i[0]), h.e(t.i[1])));
        axpy(r, t.c, h.mul(h.e(t.i[0]), h.S(t.i[1])));
      }
      Vec target = scaled(one, h.eps(i));
      if (l != target || r != target) w = {i};
    }
    rep.add("antipode", w.empty(), w);
  }
  rep.add("antipode_inverse",
          h.antipode() * h.antipode_inv() == Matrix::identity(n) &&
              h.antipode_inv() * h.antipode() == Matrix::identity(n));
  return rep;
}

HopfPtr dual_hopf(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Tensor mult({n, n, n}), comult({n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        mult(a, b, i) = h.comult()(i, a, b);
        comult(i, a, b) = h.mult()(a, b, i);
      }
  std::vector<std::string> names;
  for (const auto& s : h.basis()) names.push_back(s.size() > 1 && s.back() == '*' ? s.substr(0, s.size() - 1) : s + "*");
  std::string name = h.name().size() > 1 && h.name().back() == '*' ? h.name().substr(0, h.name().size() - 1)
                                                                    : h.name() + "*";
  return make_hopf(h.field(), name, names, mult, comult, h.counit(), h.unit(), h.antipode().transpose(),
                   h.antipode_inv().transpose());
}

Tensor iterated_coproduct(const HopfAlgebra& h, int k) {
  if (k < 1) throw std::invalid_argument("iterated_coproduct: k must be >= 1");
  const std::size_t n = h.dim();
  const std::size_t m = ipow(n, k);
  Tensor out({n, m});
  for (std::size_t i = 0; i < n; ++i)
    for (const Term& t : h.cop(static_cast<int>(i), k)) out.data()[i * m + join_index(t.i.data(), n, k)] += t.c;
  return out;
}

HopfPtr op_cop(const HopfAlgebra& h, bool flip_mult, bool flip_comult) {
  const std::size_t n = h.dim();
  Tensor mult({n, n, n}), comult({n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        mult(i, j, k) = flip_mult ? h.mult()(j, i, k) : h.mult()(i, j, k);
        comult(i, j, k) = flip_comult ? h.comult()(i, k, j) : h.comult()(i, j, k);
      }
  bool swap = flip_mult != flip_comult;
  std::string name = h.name() + (flip_mult ? "^op" : "") + (flip_comult ? "^cop" : "");
  return make_hopf(h.field(), name, h.basis(), mult, comult, h.unit(), h.counit(),
                   swap ? h.antipode_inv() : h.antipode(), swap ? h.antipode() : h.antipode_inv());
}

Vec tensor_mul(const HopfAlgebra& h, int k, const Vec& x, const Vec& y) {
  const std::size_t n = h.dim();
  const std::size_t m = ipow(n, k);
  if (x.size() != m || y.size() != m) throw std::invalid_argument("tensor_mul: length mismatch");
  Vec out(m);
  int lx[HopfAlgebra::kMaxLegs], ly[HopfAlgebra::kMaxLegs];
  for (std::size_t a = 0; a < m; ++a) {
    if (x[a].is_zero()) continue;
    split_index(a, n, k, lx);
    for (std::size_t b = 0; b < m; ++b) {
      if (y[b].is_zero()) continue;
      split_index(b, n, k, ly);
      // expand product leg by leg
      std::vector<std::pair<std::size_t, Scalar>> partial{{0, x[a] * y[b]}};
      for (int leg = 0; leg < k; ++leg) {
        std::vector<std::pair<std::size_t, Scalar>> next;
        for (auto& [idx, c] : partial)
          for (const auto& [kk, cc] : h.prod(lx[leg], ly[leg])) next.push_back({idx * n + kk, c * cc});
        partial = std::move(next);
        if (partial.empty()) break;
      }
      for (auto& [idx, c] : partial) out[idx] += c;
    }
  }
  return out;
}

Vec apply_delta_at(const HopfAlgebra& h, int k, const Vec& x, int leg) {
  const std::size_t n = h.dim();
  Vec out(ipow(n, k + 1));
  int l[HopfAlgebra::kMaxLegs + 1], o[HopfAlgebra::kMaxLegs + 1];
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    split_index(a, n, k, l);
    for (const Term& t : h.cop(l[leg], 2)) {
      int p = 0;
      for (int q = 0; q < k; ++q) {
        if (q == leg) {
          o[p++] = t.i[0];
          o[p++] = t.i[1];
        } else {
          o[p++] = l[q];
        }
      }
      out[join_index(o, n, k + 1)] += x[a] * t.c;
    }
  }
  return out;
}

Vec apply_eps_at(const HopfAlgebra& h, int k, const Vec& x, int leg) {
  const std::size_t n = h.dim();
  Vec out(ipow(n, k - 1));
  int l[HopfAlgebra::kMaxLegs], o[HopfAlgebra::kMaxLegs];
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    split_index(a, n, k, l);
    if (h.eps(l[leg]).is_zero()) continue;
    int p = 0;
    for (int q = 0; q < k; ++q)
      if (q != leg) o[p++] = l[q];
    out[join_index(o, n, k - 1)] += x[a] * h.eps(l[leg]);
  }
  return out;
}

Vec permute_legs(const HopfAlgebra& h, int k, const Vec& x, const std::vector<int>& perm) {
  const std::size_t n = h.dim();
  Vec out(x.size());
  int l[HopfAlgebra::kMaxLegs], o[HopfAlgebra::kMaxLegs];
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    split_index(a, n, k, l);
    for (int j = 0; j < k; ++j) o[j] = l[perm[j]];
    out[join_index(o, n, k)] = x[a];
  }
  return out;
}

Vec embed_legs(const HopfAlgebra& h, int k, const Vec& x, int total, const std::vector<int>& positions) {
  const std::size_t n = h.dim();
  Vec out(ipow(n, total));
  int l[HopfAlgebra::kMaxLegs];
  Sparse unit;
  for (std::size_t b = 0; b < n; ++b)
    if (!h.unit()[b].is_zero()) unit.push_back({static_cast<int>(b), h.unit()[b]});
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    split_index(a, n, k, l);
    std::vector<std::pair<std::size_t, Scalar>> partial{{0, x[a]}};
    for (int q = 0; q < total; ++q) {
      auto it = std::find(positions.begin(), positions.end(), q);
      std::vector<std::pair<std::size_t, Scalar>> next;
      for (auto& [idx, c] : partial) {
        if (it != positions.end()) {
          next.push_back({idx * n + l[it - positions.begin()], c});
        } else {
          for (const auto& [b, u] : unit) next.push_back({idx * n + b, c * u});
        }
      }
      partial = std::move(next);
    }
    for (auto& [idx, c] : partial) out[idx] += c;
  }
  return out;
}

}  // namespace hopflab
