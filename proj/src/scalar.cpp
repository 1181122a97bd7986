#include "hopflab/scalar.hpp"

#include <climits>
#include <cstdint>
#include <stdexcept>

namespace hopflab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw std::invalid_argument("prime too large (limit 2^31)");
  return Field(p);
}

Field Field::parse(const std::string& s) {
  if (s == "Q" || s == "QQ") return rationals();
  if (s.rfind("Fp:", 0) == 0 || s.rfind("F:", 0) == 0) {
    auto pos = s.find(':');
    std::string digits = s.substr(pos + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
      throw std::invalid_argument("bad field spec '" + s + "'");
    return prime(static_cast<std::uint32_t>(std::stoull(digits)));
  }
  throw std::invalid_argument("bad field spec '" + s + "' (expected Q or Fp:<p>)");
}

std::string Field::str() const { return p_ ? "Fp:" + std::to_string(p_) : "Q"; }

Scalar Field::zero() const { return coerce(Scalar(0)); }
Scalar Field::one() const { return coerce(Scalar(1)); }
Scalar Field::make(long num, long den) const { return coerce(Scalar(num, den)); }

Scalar Field::parse_scalar(const std::string& s) const {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return coerce(Scalar(q));
}

Scalar Field::coerce(const Scalar& x) const {
  if (x.modulus() == p_) return x;
  if (x.modulus() != 0) throw std::invalid_argument("scalar from " + Field(x.modulus()).str() + " used in " + str());
  Scalar r = x;
  r += Scalar::modp(0, p_);
  return r;
}

namespace {

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0ULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

constexpr __int128 kMax = INT64_MAX;

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  set_frac(num, den);
}

Scalar::Scalar(const mpq_class& q) { set_big(q); }

Scalar::Scalar(const Scalar& o)
    : num_(o.num_), den_(o.den_), p_(o.p_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  p_ = o.p_;
  big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  return *this;
}

void Scalar::set_frac(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (d != 1 && n != 0) {
    unsigned __int128 g = gcd128(n < 0 ? -static_cast<unsigned __int128>(n) : n, d);
    if (g > 1) {
      n /= static_cast<__int128>(g);
      d /= static_cast<__int128>(g);
    }
  } else if (n == 0) {
    d = 1;
  }
  if (n >= -kMax && n <= kMax && d <= kMax) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(mpz_from(n), mpz_from(d));
  num_ = 1;  // nonzero marker
  den_ = 1;
}

void Scalar::set_big(mpq_class q) {
  q.canonicalize();
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t()) &&
      mpz_cmp_si(q.get_num_mpz_t(), -INT64_MAX) >= 0) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(std::move(q));
  num_ = 1;
  den_ = 1;
}

mpq_class Scalar::rational() const {
  if (big_) return *big_;
  if (p_) return mpq_class(static_cast<long>(num_));
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Scalar Scalar::modp(std::int64_t r, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  std::int64_t m = r % static_cast<std::int64_t>(p);
  if (m < 0) m += p;
  s.num_ = m;
  return s;
}

std::uint64_t Scalar::reduce_mod(std::uint32_t p) const {
  std::uint64_t num, den;
  if (big_) {
    den = mpz_fdiv_ui(big_->get_den_mpz_t(), p);
    num = mpz_fdiv_ui(big_->get_num_mpz_t(), p);
  } else {
    std::int64_t n = num_ % static_cast<std::int64_t>(p);
    num = static_cast<std::uint64_t>(n < 0 ? n + p : n);
    den = static_cast<std::uint64_t>(den_ % static_cast<std::int64_t>(p));
  }
  if (den == 0) throw std::domain_error("denominator of " + str() + " is not invertible mod " + std::to_string(p));
  return num * powmod(den, p - 2, p) % p;
}

void Scalar::lift_to(std::uint32_t p) {
  num_ = static_cast<std::int64_t>(reduce_mod(p));
  den_ = 1;
  p_ = p;
  big_.reset();
}

const Scalar& Scalar::aligned(const Scalar& o, Scalar& tmp) {
  if (p_ == o.p_) return o;
  if (p_ == 0) {
    lift_to(o.p_);
    return o;
  }
  if (o.p_ != 0) throw std::invalid_argument("mixing scalars of different fields");
  tmp = o;
  tmp.lift_to(p_);
  return tmp;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_) return modp(static_cast<std::int64_t>(powmod(residue(), p_ - 2, p_)), p_);
  Scalar r;
  if (big_)
    r.set_big(1 / *big_);
  else
    r.set_frac(den_, num_);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_)
    r.num_ = num_ ? p_ - num_ : 0;
  else if (big_)
    r.set_big(-*big_);
  else
    r.set_frac(-static_cast<__int128>(num_), den_);
  return r;
}

void Scalar::add_rational(const Scalar& o, bool negate) {
  if (!big_ && !o.big_) {
    __int128 c = negate ? -static_cast<__int128>(o.num_) : o.num_;
    if (den_ == 1 && o.den_ == 1) {
      __int128 n = num_ + c;
      if (n >= -kMax && n <= kMax) {
        num_ = static_cast<std::int64_t>(n);
        return;
      }
      set_frac(n, 1);
      return;
    }
    set_frac(static_cast<__int128>(num_) * o.den_ + c * den_, static_cast<__int128>(den_) * o.den_);
    return;
  }
  mpq_class r = rational();
  if (negate)
    r -= o.rational();
  else
    r += o.rational();
  set_big(std::move(r));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (p_ == 0 && o.p_ == 0) {
    if (!o.is_zero()) add_rational(o, false);
    return *this;
  }
  Scalar tmp;
  const Scalar& x = aligned(o, tmp);
  num_ += x.num_;
  if (num_ >= static_cast<std::int64_t>(p_)) num_ -= p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (p_ == 0 && o.p_ == 0) {
    if (!o.is_zero()) add_rational(o, true);
    return *this;
  }
  Scalar tmp;
  const Scalar& x = aligned(o, tmp);
  num_ += p_ - x.num_;
  if (num_ >= static_cast<std::int64_t>(p_)) num_ -= p_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (p_ == 0 && o.p_ == 0) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return *this;
    }
    if (!big_ && !o.big_) {
      if (den_ == 1 && o.den_ == 1) {
        __int128 n = static_cast<__int128>(num_) * o.num_;
        if (n >= -kMax && n <= kMax) {
          num_ = static_cast<std::int64_t>(n);
          return *this;
        }
      }
      set_frac(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
      return *this;
    }
    set_big(rational() * o.rational());
    return *this;
  }
  Scalar tmp;
  const Scalar& x = aligned(o, tmp);
  num_ = static_cast<std::int64_t>(residue() * x.residue() % p_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  Scalar tmp;
  const Scalar& x = aligned(o, tmp);
  return *this *= x.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) {
    if (a.p_) return a.num_ == b.num_;
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  if (a.p_ && b.p_) return false;
  if (a.p_) return a.residue() == b.reduce_mod(a.p_);
  return b.residue() == a.reduce_mod(b.p_);
}

std::string Scalar::str() const {
  if (p_) return std::to_string(residue());
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace hopflab
