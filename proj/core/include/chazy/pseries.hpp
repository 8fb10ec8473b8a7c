#pragma once

#include <vector>

#include "chazy/exact.hpp"
#include "chazy/mpoly.hpp"

namespace chazy {

/// Truncated Laurent series in one symbol tau with QuadExt coefficients.
/// Coefficients are exact for every exponent k with k < acc (the accuracy
/// bound); operations propagate the bound.
class PSeries {
 public:
  PSeries() : lo_(0), acc_(0) {}
  static PSeries zero(int acc) { PSeries s; s.lo_ = acc; s.acc_ = acc; return s; }
  static PSeries constant(const QuadExt& c, int acc);
  static PSeries tau_power(int k, int acc);          // tau^k
  static PSeries from_coeffs(int lo, std::vector<QuadExt> c, int acc);

  int acc() const { return acc_; }
  /// Order of the first nonzero known coefficient; acc() when none known.
  int order() const;
  bool known_zero() const { return order() >= acc_; }
  QuadExt coeff(int k) const;                        // throws for k >= acc
  void set_coeff(int k, const QuadExt& c);

  PSeries truncated(int new_acc) const;
  PSeries derivative() const;                        // d/dtau
  PSeries shifted(int k) const;                      // * tau^k

  friend PSeries operator+(const PSeries& f, const PSeries& g);
  friend PSeries operator-(const PSeries& f, const PSeries& g);
  friend PSeries operator*(const PSeries& f, const PSeries& g);
  friend PSeries operator/(const PSeries& f, const PSeries& g);
  PSeries operator-() const;
  PSeries& operator+=(const PSeries& g) { *this = *this + g; return *this; }
  PSeries& operator-=(const PSeries& g) { *this = *this - g; return *this; }
  PSeries& operator*=(const PSeries& g) { *this = *this * g; return *this; }

  PSeries pow(long e) const;
  PSeries scaled(const QuadExt& c) const;

  std::string str() const;

 private:
  void normalize();
  int lo_;                    // exponent of c_[0]
  std::vector<QuadExt> c_;    // exponents lo_ .. lo_+size-1 (all < acc_)
  int acc_;                   // exclusive accuracy bound
};

/// Evaluate a polynomial / rational function on a series point.
PSeries eval_series(const MPoly& f, const std::vector<PSeries>& point);
PSeries eval_series(const RatFun& f, const std::vector<PSeries>& point);

}  // namespace chazy
