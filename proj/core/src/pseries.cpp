#include "chazy/pseries.hpp"

#include <algorithm>
#include <sstream>

namespace chazy {

PSeries PSeries::constant(const QuadExt& c, int acc) {
  PSeries s;
  s.lo_ = 0;
  s.acc_ = acc;
  if (acc > 0 && !c.is_zero()) s.c_ = {c};
  else s.lo_ = acc;
  s.normalize();
  return s;
}

PSeries PSeries::tau_power(int k, int acc) {
  PSeries s;
  s.lo_ = k;
  s.acc_ = acc;
  if (k < acc) s.c_ = {QuadExt(1)};
  else s.lo_ = acc;
  return s;
}

PSeries PSeries::from_coeffs(int lo, std::vector<QuadExt> c, int acc) {
  PSeries s;
  s.lo_ = lo;
  s.c_ = std::move(c);
  s.acc_ = acc;
  if (s.lo_ + static_cast<int>(s.c_.size()) > acc) s.c_.resize(std::max(0, acc - s.lo_));
  s.normalize();
  return s;
}

void PSeries::normalize() {
  while (!c_.empty() && c_.front().is_zero()) {
    c_.erase(c_.begin());
    ++lo_;
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) lo_ = acc_;
}

int PSeries::order() const {
  return c_.empty() ? acc_ : lo_;
}

QuadExt PSeries::coeff(int k) const {
  if (k >= acc_) throw std::out_of_range("PSeries::coeff beyond accuracy bound");
  if (k < lo_ || k >= lo_ + static_cast<int>(c_.size())) return QuadExt(0);
  return c_[k - lo_];
}

void PSeries::set_coeff(int k, const QuadExt& c) {
  if (k >= acc_) throw std::out_of_range("PSeries::set_coeff beyond accuracy bound");
  if (c_.empty()) { lo_ = k; c_ = {c}; normalize(); return; }
  if (k < lo_) {
    c_.insert(c_.begin(), lo_ - k, QuadExt(0));
    lo_ = k;
  } else if (k >= lo_ + static_cast<int>(c_.size())) {
    c_.resize(k - lo_ + 1, QuadExt(0));
  }
  c_[k - lo_] = c;
  normalize();
}

PSeries PSeries::truncated(int new_acc) const {
  PSeries s = *this;
  s.acc_ = std::min(acc_, new_acc);
  if (s.lo_ + static_cast<int>(s.c_.size()) > s.acc_) s.c_.resize(std::max(0, s.acc_ - s.lo_));
  s.normalize();
  return s;
}

PSeries PSeries::derivative() const {
  PSeries s;
  s.acc_ = acc_ - 1;
  s.lo_ = lo_ - 1;
  s.c_.reserve(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    int k = lo_ + static_cast<int>(i);
    s.c_.push_back(c_[i] * QuadExt(k));
  }
  if (s.lo_ + static_cast<int>(s.c_.size()) > s.acc_) s.c_.resize(std::max(0, s.acc_ - s.lo_));
  s.normalize();
  return s;
}

PSeries PSeries::shifted(int k) const {
  PSeries s = *this;
  s.lo_ += k;
  s.acc_ += k;
  return s;
}

PSeries operator+(const PSeries& f, const PSeries& g) {
  PSeries s;
  s.acc_ = std::min(f.acc_, g.acc_);
  int lo = std::min(f.order(), g.order());
  lo = std::min(lo, s.acc_);
  s.lo_ = lo;
  s.c_.assign(std::max(0, s.acc_ - lo), QuadExt(0));
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    int k = f.lo_ + static_cast<int>(i);
    if (k < s.acc_) s.c_[k - lo] += f.c_[i];
  }
  for (std::size_t i = 0; i < g.c_.size(); ++i) {
    int k = g.lo_ + static_cast<int>(i);
    if (k < s.acc_) s.c_[k - lo] += g.c_[i];
  }
  s.normalize();
  return s;
}

PSeries PSeries::operator-() const {
  PSeries s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

PSeries operator-(const PSeries& f, const PSeries& g) { return f + (-g); }

PSeries operator*(const PSeries& f, const PSeries& g) {
  PSeries s;
  // product accurate below min(f.lo + g.acc, g.lo + f.acc)
  int facc = f.c_.empty() ? f.acc_ : f.lo_;
  int gacc = g.c_.empty() ? g.acc_ : g.lo_;
  s.acc_ = std::min(facc + g.acc_, gacc + f.acc_);
  if (f.c_.empty() || g.c_.empty()) {
    s.lo_ = s.acc_;
    return s;
  }
  s.lo_ = f.lo_ + g.lo_;
  if (s.lo_ >= s.acc_) { s.lo_ = s.acc_; return s; }
  s.c_.assign(s.acc_ - s.lo_, QuadExt(0));
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.c_.size(); ++j) {
      int k = f.lo_ + static_cast<int>(i) + g.lo_ + static_cast<int>(j);
      if (k >= s.acc_) break;
      s.c_[k - s.lo_] += f.c_[i] * g.c_[j];
    }
  }
  s.normalize();
  return s;
}

PSeries operator/(const PSeries& f, const PSeries& g) {
  if (g.c_.empty()) throw std::domain_error("PSeries: division by (known-)zero series");
  int m = g.lo_;
  if (f.c_.empty()) {
    PSeries z;
    z.acc_ = f.acc_ - m;
    z.lo_ = z.acc_;
    return z;
  }
  // invert unit part of g: g = tau^m * (g0 + g1 tau + ...) with g0 != 0
  int n = std::min(g.acc_ - m, std::max(1, f.acc_ - f.order()));
  if (n <= 0) throw std::domain_error("PSeries: no accuracy left in division");
  std::vector<QuadExt> ginv(n, QuadExt(0));
  QuadExt g0inv = QuadExt(1) / g.c_[0];
  ginv[0] = g0inv;
  for (int k = 1; k < n; ++k) {
    QuadExt acc(0);
    for (int j = 1; j <= k; ++j) {
      QuadExt gj = (j < static_cast<int>(g.c_.size())) ? g.c_[j] : QuadExt(0);
      if (!gj.is_zero()) acc += gj * ginv[k - j];
    }
    ginv[k] = -g0inv * acc;
  }
  PSeries inv;
  inv.lo_ = -m;
  inv.acc_ = -m + n;
  inv.c_ = std::move(ginv);
  inv.normalize();
  return f * inv;
}

PSeries PSeries::pow(long e) const {
  if (e < 0) throw std::invalid_argument("PSeries::pow negative");
  PSeries r = PSeries::constant(QuadExt(1), acc_ - 0);
  // keep accuracy window of *this for simplicity
  PSeries base = *this;
  if (e == 0) return r;
  r = base;
  for (long i = 1; i < e; ++i) r = r * base;
  return r;
}

PSeries PSeries::scaled(const QuadExt& c) const {
  PSeries s = *this;
  if (c.is_zero()) { s.c_.clear(); s.lo_ = s.acc_; return s; }
  for (auto& k : s.c_) k *= c;
  return s;
}

std::string PSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].str() << ")*tau^" << lo_ + static_cast<int>(i);
  }
  if (first) os << "0";
  os << " + O(tau^" << acc_ << ")";
  return os.str();
}

PSeries eval_series(const MPoly& f, const std::vector<PSeries>& point) {
  if (static_cast<int>(point.size()) != f.vars()->size())
    throw std::invalid_argument("eval_series: arity mismatch");
  int acc = point.empty() ? 64 : point.front().acc();
  for (const auto& p : point) acc = std::min(acc, p.acc());
  PSeries out = PSeries::zero(acc + 64);
  std::vector<std::vector<PSeries>> powers(point.size());
  auto power = [&](std::size_t i, int32_t k) -> const PSeries& {
    auto& tab = powers[i];
    if (tab.empty()) tab.push_back(PSeries::constant(QuadExt(1), point[i].acc() + 64));
    while (static_cast<int32_t>(tab.size()) <= k) tab.push_back(tab.back() * point[i]);
    return tab[k];
  };
  for (const auto& [e, c] : f.terms()) {
    PSeries t = PSeries::constant(c, acc + 64);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

PSeries eval_series(const RatFun& f, const std::vector<PSeries>& point) {
  PSeries n = eval_series(f.num(), point);
  PSeries d = eval_series(f.den(), point);
  return n / d;
}

}  // namespace chazy
