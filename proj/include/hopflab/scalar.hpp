#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

namespace hopflab {

class Scalar;

// Ground field: the rationals (p == 0) or F_p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  // "Q" or "Fp:<p>"
  static Field parse(const std::string& s);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string str() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar make(long num, long den = 1) const;
  Scalar parse_scalar(const std::string& s) const;
  // bring a scalar into this field (rationals are reduced mod p)
  Scalar coerce(const Scalar& x) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

// Exact scalar. A rational value combined with an F_p value is first
// reduced mod p, so rational literals can be used in any field.
// Rationals are kept as reduced int64 fractions and move to GMP on overflow.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : num_(v) {}
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q);
  Scalar(const Scalar& o);
  Scalar(Scalar&& o) noexcept = default;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&& o) noexcept = default;
  ~Scalar() = default;

  static Scalar modp(std::int64_t r, std::uint32_t p);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  std::uint32_t modulus() const { return p_; }
  mpq_class rational() const;
  std::uint64_t residue() const { return static_cast<std::uint64_t>(num_); }

  Scalar inv() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "a" or "a/b"; residues print as their representative in [0,p)
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  void set_frac(__int128 n, __int128 d);
  void set_big(mpq_class q);
  void add_rational(const Scalar& o, bool negate);
  void lift_to(std::uint32_t p);
  const Scalar& aligned(const Scalar& o, Scalar& tmp);
  std::uint64_t reduce_mod(std::uint32_t p) const;

  // rational: num_/den_ (den_ > 0, coprime) unless big_ is set; F_p: residue in num_
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint32_t p_ = 0;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace hopflab
