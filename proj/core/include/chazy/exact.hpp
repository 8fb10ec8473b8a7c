#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace chazy {

using Int = mpz_class;
using Rat = mpq_class;
using CScalar = std::complex<double>;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);
double rat_to_double(const Rat& q);

/// Scalar in the real or imaginary quadratic field Q(sqrt(d)).
///
/// Value is a + b*sqrt(d) with rational a, b and square-free integer d.
/// A pure rational is stored with b = 0 and d = 0, so values from different
/// fields mix only through rationals; incompatible radicals throw.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(0) {}
  QuadExt(long v) : a_(rat(v)), b_(0), d_(0) {}  // NOLINT implicit
  QuadExt(const Rat& v) : a_(v), b_(0), d_(0) {} // NOLINT implicit
  QuadExt(Rat a, Rat b, long d);

  static QuadExt sqrt_of(long d);          // sqrt(d), d square-free
  static QuadExt make(long an, long ad, long bn, long bd, long d);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_integer() const;

  QuadExt conj() const { return QuadExt(a_, -b_, d_); }
  Rat norm() const;                        // a^2 - b^2 d
  QuadExt inverse() const;
  /// Square root within the same field, when it exists.
  std::optional<QuadExt> sqrt() const;

  CScalar to_complex() const;
  std::string str() const;

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  QuadExt& operator+=(const QuadExt& y) { *this = *this + y; return *this; }
  QuadExt& operator-=(const QuadExt& y) { *this = *this - y; return *this; }
  QuadExt& operator*=(const QuadExt& y) { *this = *this * y; return *this; }
  QuadExt& operator/=(const QuadExt& y) { *this = *this / y; return *this; }
  friend bool operator==(const QuadExt& x, const QuadExt& y);
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
  friend bool operator<(const QuadExt& x, const QuadExt& y);  // arbitrary total order

 private:
  void normalize();
  static long common_d(const QuadExt& x, const QuadExt& y);
  Rat a_, b_;
  long d_;
};

QuadExt pow(const QuadExt& x, long e);

/// Nearest rational p/q with q <= max_den and |x - p/q| <= tol, smallest q
/// first; nullopt when no such fraction exists or |Im x| > tol.
std::optional<Rat> recognize_rational(CScalar x, const Int& max_den, double tol);

/// Lift a numeric value into Q(sqrt(d)): searches small q, r with
/// q*x ~ p + r*sqrt(d). Exact verification is the caller's job.
std::optional<QuadExt> recognize_quadext(CScalar x, long d, long max_den, double tol);

bool is_square_free(long d);

}  // namespace chazy
