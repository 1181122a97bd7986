#include "hopflab/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace hopflab {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = Scalar(1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Vec scaled(const Vec& x, const Scalar& a) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) r[i] = a * x[i];
  return r;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(r, Scalar(1), b);
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(r, Scalar(-1), b);
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Vec data) : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: data length does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vec Matrix::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vec y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!(*this)(r, c).is_zero()) y[r] += (*this)(r, c) * x[c];
  }
  return y;
}

bool Matrix::is_zero() const { return hopflab::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  return Matrix(a.rows_, a.cols_, a.data_ + b.data_);
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  return Matrix(a.rows_, a.cols_, a.data_ - b.data_);
}

Matrix operator*(const Scalar& s, const Matrix& a) { return Matrix(a.rows_, a.cols_, scaled(a.data_, s)); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Vec d = a.data();
  d.insert(d.end(), b.data().begin(), b.data().end());
  return Matrix(a.rows() + b.rows(), a.cols(), std::move(d));
}

namespace {

// In-place reduced row echelon form; returns pivot columns. Only the first
// `limit` columns are eligible as pivots.
std::vector<std::size_t> rref(Matrix& m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t R = m.rows(), C = m.cols();
  for (std::size_t col = 0; col < limit && row < R; ++col) {
    std::size_t p = row;
    while (p < R && m(p, col).is_zero()) ++p;
    if (p == R) continue;
    if (p != row)
      for (std::size_t c = col; c < C; ++c) std::swap(m(p, c), m(row, c));
    Scalar inv = m(row, col).inv();
    for (std::size_t c = col; c < C; ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t c = col + 1; c < C; ++c)
      if (!m(row, c).is_zero()) nz.push_back(c);
    for (std::size_t r = 0; r < R; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      m(r, col) = Scalar();
      for (std::size_t c : nz) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

namespace {

constexpr std::uint64_t kCertPrime = 2147483629ULL;

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Rank of the row-wise denominator-cleared matrix mod a fixed prime; a lower
// bound for the rank over Q. Returns nullopt if some entry is not rational.
std::optional<std::size_t> modular_rank_bound(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::uint64_t> a(R * C);
  for (std::size_t r = 0; r < R; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < C; ++c) {
      const Scalar& x = m(r, c);
      if (x.modulus() != 0) return std::nullopt;
      if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.rational().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < C; ++c) {
      const Scalar& x = m(r, c);
      if (x.is_zero()) continue;
      mpz_class v = x.rational().get_num() * (l / x.rational().get_den());
      a[r * C + c] = mpz_fdiv_ui(v.get_mpz_t(), kCertPrime);
    }
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t p = row;
    while (p < R && a[p * C + col] == 0) ++p;
    if (p == R) continue;
    if (p != row)
      for (std::size_t c = col; c < C; ++c) std::swap(a[p * C + c], a[row * C + c]);
    const std::uint64_t inv = powmod64(a[row * C + col], kCertPrime - 2, kCertPrime);
    for (std::size_t r = row + 1; r < R; ++r) {
      std::uint64_t f = a[r * C + col];
      if (f == 0) continue;
      f = f * inv % kCertPrime;
      for (std::size_t c = col; c < C; ++c)
        if (a[row * C + c]) a[r * C + c] = (a[r * C + c] + (kCertPrime - f) * a[row * C + c]) % kCertPrime;
    }
    ++row;
  }
  return row;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() >= 24 && m.cols() >= 24) {
    auto bound = modular_rank_bound(m);
    if (bound && *bound == std::min(m.rows(), m.cols())) return *bound;
  }
  // forward elimination only
  Matrix a = m.rows() > m.cols() ? m.transpose() : m;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t p = row;
    while (p < R && a(p, col).is_zero()) ++p;
    if (p == R) continue;
    if (p != row)
      for (std::size_t c = col; c < C; ++c) std::swap(a(p, c), a(row, c));
    Scalar inv = a(row, col).inv();
    std::vector<std::size_t> nz;
    for (std::size_t c = col + 1; c < C; ++c)
      if (!a(row, c).is_zero()) nz.push_back(c);
    for (std::size_t r = row + 1; r < R; ++r) {
      if (a(r, col).is_zero()) continue;
      Scalar f = a(r, col) * inv;
      a(r, col) = Scalar();
      for (std::size_t c : nz) a(r, c) -= f * a(row, c);
    }
    ++row;
  }
  return row;
}

Matrix kernel_basis(const Matrix& m) {
  Matrix a = m;
  auto piv = rref(a, a.cols());
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (!a(r, f).is_zero()) v[piv[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.cols(), basis);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  Matrix a = hstack(m, b);
  auto piv = rref(a, m.cols());
  // inconsistent if some zero row of the m-part has nonzero b-part
  for (std::size_t r = piv.size(); r < a.rows(); ++r)
    for (std::size_t c = m.cols(); c < a.cols(); ++c)
      if (!a(r, c).is_zero()) return std::nullopt;
  Matrix x(m.cols(), b.cols());
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(piv[r], c) = a(r, m.cols() + c);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Matrix a = hstack(m, Matrix::identity(m.rows()));
  auto piv = rref(a, m.cols());
  if (piv.size() != m.rows()) return std::nullopt;
  Matrix x(m.rows(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.rows(); ++c) x(r, c) = a(r, m.cols() + c);
  return x;
}

Matrix column_basis(const Matrix& m) {
  Matrix a = m;
  auto piv = rref(a, a.cols());
  std::vector<Vec> cols;
  for (auto c : piv) cols.push_back(m.column(c));
  return Matrix::from_columns(m.rows(), cols);
}

bool span_contains(const Matrix& outer, const Matrix& inner) {
  if (outer.rows() != inner.rows()) throw std::invalid_argument("span_contains: ambient mismatch");
  return rank(hstack(outer, inner)) == rank(outer);
}

bool same_span(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("same_span: ambient mismatch");
  std::size_t ra = rank(a), rb = rank(b);
  return ra == rb && rank(hstack(a, b)) == ra;
}

Tensor::Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
  std::size_t n = 1;
  for (auto s : shape_) n *= s;
  data_.resize(n);
}

Tensor::Tensor(std::vector<std::size_t> shape, Vec data) : shape_(std::move(shape)), data_(std::move(data)) {
  std::size_t n = 1;
  for (auto s : shape_) n *= s;
  if (n != data_.size()) throw std::invalid_argument("Tensor: data length does not match shape");
}

std::size_t Tensor::offset(const std::vector<std::size_t>& idx) const {
  if (idx.size() != shape_.size()) throw std::invalid_argument("Tensor: wrong number of indices");
  std::size_t o = 0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] >= shape_[a]) throw std::out_of_range("Tensor: index out of range");
    o = o * shape_[a] + idx[a];
  }
  return o;
}

Matrix Tensor::as_matrix(std::size_t leading_axes) const {
  if (leading_axes > shape_.size()) throw std::invalid_argument("as_matrix: too many leading axes");
  std::size_t r = 1, c = 1;
  for (std::size_t a = 0; a < shape_.size(); ++a) (a < leading_axes ? r : c) *= shape_[a];
  return Matrix(r, c, data_);
}

Tensor Tensor::from_matrix(const Matrix& m) { return Tensor({m.rows(), m.cols()}, m.data()); }

Tensor contract(const Tensor& a, const Tensor& b, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<bool> ca(a.order(), false), cb(b.order(), false);
  for (auto [i, j] : pairs) {
    if (i >= a.order() || j >= b.order()) throw std::invalid_argument("contract: axis out of range");
    if (ca[i] || cb[j]) throw std::invalid_argument("contract: axis paired twice");
    if (a.shape()[i] != b.shape()[j]) throw std::invalid_argument("contract: paired extents differ");
    ca[i] = cb[j] = true;
  }
  std::vector<std::size_t> fa, fb, shape;
  for (std::size_t i = 0; i < a.order(); ++i)
    if (!ca[i]) fa.push_back(i), shape.push_back(a.shape()[i]);
  for (std::size_t j = 0; j < b.order(); ++j)
    if (!cb[j]) fb.push_back(j), shape.push_back(b.shape()[j]);
  Tensor out(shape);

  // strides
  auto strides = [](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> st(s.size());
    std::size_t acc = 1;
    for (std::size_t k = s.size(); k-- > 0;) st[k] = acc, acc *= s[k];
    return st;
  };
  auto sa = strides(a.shape()), sb = strides(b.shape()), so = strides(shape);

  std::vector<std::size_t> ia(a.order());
  for (std::size_t oa = 0; oa < a.size(); ++oa) {
    const Scalar& x = a.data()[oa];
    if (!x.is_zero()) {
      for (std::size_t k = 0, rem = oa; k < a.order(); ++k) ia[k] = rem / sa[k], rem %= sa[k];
      std::size_t out_a = 0;
      for (std::size_t k = 0; k < fa.size(); ++k) out_a += ia[fa[k]] * so[k];
      std::vector<std::size_t> ib(b.order());
      for (std::size_t ob = 0; ob < b.size(); ++ob) {
        const Scalar& y = b.data()[ob];
        if (y.is_zero()) continue;
        bool ok = true;
        for (std::size_t k = 0, rem = ob; k < b.order(); ++k) ib[k] = rem / sb[k], rem %= sb[k];
        for (auto [i, j] : pairs)
          if (ia[i] != ib[j]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        std::size_t o = out_a;
        for (std::size_t k = 0; k < fb.size(); ++k) o += ib[fb[k]] * so[fa.size() + k];
        out.data()[o] += x * y;
      }
    }
  }
  return out;
}

}  // namespace hopflab
