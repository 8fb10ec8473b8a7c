#include "chazy/exact.hpp"

#include <cmath>
#include <sstream>

namespace chazy {

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  return q.get_str();
}

double rat_to_double(const Rat& q) {
  return q.get_d();
}

bool is_square_free(long d) {
  if (d == 0) return true;
  long n = std::labs(d);
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    while (n % p == 0) n /= p;
  }
  return true;
}

QuadExt::QuadExt(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 1) { a_ += b_; b_ = 0; d_ = 0; }
  if (!is_square_free(d_)) throw std::invalid_argument("QuadExt: d must be square-free");
  normalize();
}

void QuadExt::normalize() {
  if (b_ == 0) d_ = 0;
  if (d_ == 0) b_ = 0;
}

QuadExt QuadExt::sqrt_of(long d) {
  if (d == 0) return QuadExt();
  if (d == 1) return QuadExt(1);
  return QuadExt(rat(0), rat(1), d);
}

QuadExt QuadExt::make(long an, long ad, long bn, long bd, long d) {
  return QuadExt(rat(an, ad), rat(bn, bd), d);
}

bool QuadExt::is_integer() const {
  return b_ == 0 && a_.get_den() == 1;
}

Rat QuadExt::norm() const {
  return a_ * a_ - b_ * b_ * d_;
}

long QuadExt::common_d(const QuadExt& x, const QuadExt& y) {
  if (x.d_ == y.d_) return x.d_;
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0) return x.d_;
  throw std::domain_error("QuadExt: incompatible radicals sqrt(" + std::to_string(x.d_) +
                          ") and sqrt(" + std::to_string(y.d_) + ")");
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  long d = QuadExt::common_d(x, y);
  return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  long d = QuadExt::common_d(x, y);
  return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  long d = QuadExt::common_d(x, y);
  return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("QuadExt: division by zero");
  Rat n = norm();
  if (n == 0) throw std::domain_error("QuadExt: zero norm");  // impossible for square-free d != square
  return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  long d = QuadExt::common_d(x, y);
  QuadExt yy(y.a_, y.b_, d);
  return x * yy.inverse();
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.b_ == 0 || x.d_ == y.d_;
}

bool operator<(const QuadExt& x, const QuadExt& y) {
  if (x.d_ != y.d_) return x.d_ < y.d_;
  int c = cmp(x.a_, y.a_);
  if (c != 0) return c < 0;
  return cmp(x.b_, y.b_) < 0;
}

CScalar QuadExt::to_complex() const {
  double av = a_.get_d();
  if (b_ == 0) return {av, 0.0};
  double bv = b_.get_d();
  double r = std::sqrt(std::fabs(static_cast<double>(d_)));
  if (d_ >= 0) return {av + bv * r, 0.0};
  return {av, bv * r};
}

std::string QuadExt::str() const {
  if (b_ == 0) return rat_to_string(a_);
  std::ostringstream os;
  os << rat_to_string(a_);
  if (b_ > 0) os << "+";
  os << rat_to_string(b_) << "*sqrt(" << d_ << ")";
  return os.str();
}

QuadExt pow(const QuadExt& x, long e) {
  if (e < 0) return pow(x.inverse(), -e);
  QuadExt r(1), base = x;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

namespace {

std::optional<Rat> rat_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  Int num = q.get_num(), den = q.get_den();
  Int rn, rd;
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

std::optional<QuadExt> QuadExt::sqrt() const {
  // Solve (p + q*sqrt(d))^2 = a + b*sqrt(d):  p^2 + q^2 d = a, 2pq = b.
  if (b_ == 0) {
    if (auto r = rat_sqrt(a_)) return QuadExt(*r);
    if (d_ != 0) return std::nullopt;
    // maybe a = d * square: sqrt(a) = sqrt(a/d)*sqrt(d) needs a d; pure rational has none
    return std::nullopt;
  }
  // p^2 solves t^2 - a t + b^2 d / 4 = 0 => t = (a ± sqrt(a^2 - b^2 d)) / 2
  Rat disc = a_ * a_ - b_ * b_ * d_;
  auto sd = rat_sqrt(disc);
  if (!sd) return std::nullopt;
  for (int sign = 0; sign < 2; ++sign) {
    Rat t = (a_ + (sign ? -*sd : *sd)) / 2;
    auto p = rat_sqrt(t);
    if (!p || *p == 0) continue;
    Rat q = b_ / (2 * *p);
    QuadExt cand(*p, q, d_);
    if (cand * cand == *this) return cand;
  }
  return std::nullopt;
}

std::optional<Rat> recognize_rational(CScalar x, const Int& max_den, double tol) {
  if (!(std::abs(x.imag()) <= tol)) return std::nullopt;
  double v = x.real();
  if (!std::isfinite(v)) return std::nullopt;
  // Continued fraction with convergent denominators bounded by max_den.
  Int p0 = 1, q0 = 0;  // p(-1)/q(-1)
  Int p1, q1;          // current convergent
  double r = v;
  Int a(static_cast<long>(std::floor(r)));
  p1 = a; q1 = 1;
  for (int it = 0; it < 64; ++it) {
    double pd = p1.get_d(), qd = q1.get_d();
    if (std::abs(v - pd / qd) <= tol && q1 <= max_den) {
      Rat out(p1, q1);
      out.canonicalize();
      return out;
    }
    double frac = r - std::floor(r);
    if (frac < 1e-15) break;
    r = 1.0 / frac;
    a = Int(static_cast<long>(std::floor(r)));
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  double pd = p1.get_d(), qd = q1.get_d();
  if (q1 <= max_den && q1 > 0 && std::abs(v - pd / qd) <= tol) {
    Rat out(p1, q1);
    out.canonicalize();
    return out;
  }
  return std::nullopt;
}

std::optional<QuadExt> recognize_quadext(CScalar x, long d, long max_den, double tol) {
  if (d == 0) {
    if (auto r = recognize_rational(x, Int(max_den), tol)) return QuadExt(*r);
    return std::nullopt;
  }
  double rd = std::sqrt(std::fabs(static_cast<double>(d)));
  if (d < 0) {
    auto ra = recognize_rational({x.real(), 0}, Int(max_den), tol);
    auto rb = recognize_rational({x.imag() / rd, 0}, Int(max_den), tol);
    if (ra && rb) return QuadExt(*ra, *rb, *rb == 0 ? 0 : d);
    return std::nullopt;
  }
  if (std::abs(x.imag()) > tol) return std::nullopt;
  if (auto r = recognize_rational(x, Int(max_den), tol)) return QuadExt(*r);
  double v = x.real();
  // search q*v ~ p + r*sqrt(d) over small q, r
  long rmax = std::max(8L, static_cast<long>(std::ceil(std::fabs(v))) * max_den);
  rmax = std::min(rmax, 4096L);
  for (long q = 1; q <= max_den; ++q) {
    for (long r = -rmax; r <= rmax; ++r) {
      double p = std::round(q * v - r * rd);
      if (std::fabs(p) > 1e15) continue;
      if (std::fabs(q * v - r * rd - p) <= tol * q) {
        QuadExt cand(rat(static_cast<long>(p), q), rat(r, q), r == 0 ? 0 : d);
        return cand;
      }
    }
  }
  return std::nullopt;
}

}  // namespace chazy
