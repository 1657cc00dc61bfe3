#pragma once

#include <gmpxx.h>

#include <string>

#include "annibounds/errors.hpp"

namespace annibounds {

using Scalar = mpq_class;

/// Coefficient field: the rationals, or Z/p for a prime p.
///
/// Elements of Z/p are stored as integral Scalars in [0, p). All arithmetic
/// goes through the field so both cases share one coefficient type.
class Field {
public:
  static Field rationals() { return Field(0); }

  static Field prime(unsigned long p) {
    if (!is_prime(p))
      throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
    return Field(p);
  }

  bool is_rational() const noexcept { return p_ == 0; }
  unsigned long characteristic() const noexcept { return p_; }

  Scalar normalize(Scalar a) const {
    if (sgn(a.get_den()) == 0) throw InvalidArgument("zero denominator");
    if (p_ == 0) {
      a.canonicalize();
      return a;
    }
    mpz_class num = a.get_num(), den = a.get_den();
    mpz_class mod(p_);
    if (mpz_divisible_p(den.get_mpz_t(), mod.get_mpz_t()))
      throw InvalidArgument("denominator divisible by the characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    mpz_class r = num * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    return Scalar(r);
  }

  Scalar add(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a + b;
    return reduce_int(a.get_num() + b.get_num());
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a - b;
    return reduce_int(a.get_num() - b.get_num());
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a * b;
    return reduce_int(a.get_num() * b.get_num());
  }
  Scalar neg(const Scalar& a) const {
    if (p_ == 0) return -a;
    return reduce_int(-a.get_num());
  }
  Scalar inv(const Scalar& a) const {
    if (sgn(a) == 0) throw InvalidArgument("division by zero");
    if (p_ == 0) return 1 / a;
    mpz_class r, mod(p_);
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), mod.get_mpz_t());
    return Scalar(r);
  }
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string to_string(const Scalar& a) const { return a.get_str(); }

  std::string name() const {
    return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
  }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

private:
  explicit Field(unsigned long p) : p_(p) {}

  Scalar reduce_int(mpz_class v) const {
    mpz_class mod(p_);
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
    return Scalar(v);
  }

  static bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  unsigned long p_;
};

} // namespace annibounds
