#include "chazy/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chazy {

namespace {
constexpr std::size_t kTermLimit = 2'000'000;

void check_same(const VarsPtr& a, const VarsPtr& b) {
  if (a == b) return;
  if (a && b && *a == *b) return;
  throw std::invalid_argument("MPoly: VarTable mismatch");
}
}  // namespace

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("VarTable: duplicate name " + names_[i]);
  }
}

std::shared_ptr<const VarTable> VarTable::make(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

int VarTable::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("VarTable: unknown symbol " + name);
  return it->second;
}

std::optional<int> VarTable::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MPoly MPoly::constant(VarsPtr vars, const QuadExt& c) {
  MPoly f(std::move(vars));
  if (!c.is_zero()) f.terms_.emplace(Expo(f.vars_->size(), 0), c);
  return f;
}

MPoly MPoly::var(VarsPtr vars, const std::string& name, int exp) {
  int i = vars->index(name);
  return var(std::move(vars), i, exp);
}

MPoly MPoly::var(VarsPtr vars, int index, int exp) {
  MPoly f(std::move(vars));
  Expo e(f.vars_->size(), 0);
  e.at(index) = exp;
  f.terms_.emplace(std::move(e), QuadExt(1));
  return f;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Expo& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int32_t k) { return k == 0; });
}

QuadExt MPoly::constant_value() const {
  if (terms_.empty()) return QuadExt(0);
  if (!is_constant()) throw std::logic_error("MPoly: not a constant");
  return terms_.begin()->second;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int32_t k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

int MPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e.at(var));
  return d;
}

void MPoly::add_term(const Expo& e, const QuadExt& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly operator+(const MPoly& f, const MPoly& g) {
  check_same(f.vars_, g.vars_);
  MPoly r = f;
  for (const auto& [e, c] : g.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& f, const MPoly& g) {
  check_same(f.vars_, g.vars_);
  MPoly r = f;
  for (const auto& [e, c] : g.terms_) r.add_term(e, -c);
  return r;
}

MPoly operator*(const MPoly& f, const MPoly& g) {
  check_same(f.vars_, g.vars_);
  if (f.terms_.size() * g.terms_.size() > kTermLimit)
    throw std::runtime_error("MPoly: term count guard tripped in multiply");
  MPoly r(f.vars_);
  Expo e(f.vars_ ? f.vars_->size() : 0, 0);
  for (const auto& [e1, c1] : f.terms_) {
    for (const auto& [e2, c2] : g.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  if (r.terms_.size() > kTermLimit) throw std::runtime_error("MPoly: result too large");
  return r;
}

bool operator==(const MPoly& f, const MPoly& g) {
  return f.terms_ == g.terms_;
}

MPoly MPoly::scaled(const QuadExt& c) const {
  MPoly r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

MPoly operator*(const QuadExt& c, const MPoly& f) { return f.scaled(c); }

MPoly MPoly::pow(long e) const {
  if (e < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly r = MPoly::constant(vars_, QuadExt(1));
  MPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    if (e >>= 1) base = base * base;
  }
  return r;
}

MPoly MPoly::derivative(int var) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Expo e2 = e;
    --e2[var];
    r.add_term(e2, c * QuadExt(e[var]));
  }
  return r;
}

MPoly MPoly::derivative(const std::string& var) const { return derivative(vars_->index(var)); }

QuadExt MPoly::eval(const std::vector<QuadExt>& point) const {
  QuadExt out(0);
  for (const auto& [e, c] : terms_) {
    QuadExt t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= chazy::pow(point.at(i), e[i]);
    out += t;
  }
  return out;
}

CScalar MPoly::eval_c(const std::vector<CScalar>& point) const {
  CScalar out(0);
  for (const auto& [e, c] : terms_) {
    CScalar t = c.to_complex();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int32_t k = 0; k < e[i]; ++k) t *= point.at(i);
    out += t;
  }
  return out;
}

RatFun MPoly::substitute(const std::vector<RatFun>& image) const {
  if (static_cast<int>(image.size()) != vars_->size())
    throw std::invalid_argument("MPoly::substitute: image arity mismatch");
  VarsPtr tgt = image.empty() ? vars_ : image.front().vars();
  RatFun out = RatFun::constant(tgt, QuadExt(0));
  // memoized powers per variable
  std::vector<std::vector<RatFun>> powers(image.size());
  auto power = [&](std::size_t i, int32_t k) -> const RatFun& {
    auto& tab = powers[i];
    if (tab.empty()) tab.push_back(RatFun::constant(tgt, QuadExt(1)));
    while (static_cast<int32_t>(tab.size()) <= k) tab.push_back(tab.back() * image[i]);
    return tab[k];
  };
  for (const auto& [e, c] : terms_) {
    RatFun t = RatFun::constant(tgt, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= power(i, e[i]);
    out += t;
  }
  return out;
}

RatFun MPoly::substitute(const std::map<std::string, RatFun>& bindings) const {
  std::vector<RatFun> image;
  image.reserve(vars_->size());
  for (int i = 0; i < vars_->size(); ++i) {
    auto it = bindings.find(vars_->name(i));
    if (it != bindings.end()) {
      check_same(it->second.vars(), vars_);
      image.push_back(it->second);
    } else {
      image.push_back(RatFun::var(vars_, vars_->name(i)));
    }
  }
  return substitute(image);
}

MPoly MPoly::coeff_of(int var, int k) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) != k) continue;
    Expo e2 = e;
    e2[var] = 0;
    r.add_term(e2, c);
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      os << "*" << vars_->name(static_cast<int>(i));
      if (it->first[i] != 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

// ---------------- division ----------------

std::optional<MPoly> divides_exactly(const MPoly& den, const MPoly& num) {
  check_same(den.vars(), num.vars());
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return MPoly::zero(num.vars());
  if (den.is_constant()) {
    QuadExt inv = QuadExt(1) / den.constant_value();
    return num.scaled(inv);
  }
  MPoly q(num.vars());
  MPoly r = num;
  const auto& dlead = *den.terms().rbegin();  // lex-largest
  std::size_t guard = 4 * num.term_count() + 64;
  while (!r.is_zero()) {
    if (guard-- == 0) return std::nullopt;
    const auto& rlead = *r.terms().rbegin();
    Expo qe(rlead.first.size());
    for (std::size_t i = 0; i < qe.size(); ++i) {
      qe[i] = rlead.first[i] - dlead.first[i];
      if (qe[i] < 0) return std::nullopt;
    }
    QuadExt qc = rlead.second / dlead.second;
    MPoly t(num.vars());
    t.add_term(qe, qc);
    q += t;
    r -= t * den;
  }
  return q;
}

// ---------------- RatFun ----------------

RatFun::RatFun(MPoly num) : num_(std::move(num)) {
  den_ = MPoly::constant(num_.vars(), QuadExt(1));
}

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  check_same(num_.vars(), den_.vars());
  if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(num_.vars(), QuadExt(1));
    return;
  }
  // strip common monomial content
  const int n = num_.vars()->size();
  Expo mn(n, INT32_MAX);
  for (const auto& [e, c] : num_.terms())
    for (int i = 0; i < n; ++i) mn[i] = std::min(mn[i], e[i]);
  for (const auto& [e, c] : den_.terms())
    for (int i = 0; i < n; ++i) mn[i] = std::min(mn[i], e[i]);
  bool strip = std::any_of(mn.begin(), mn.end(), [](int32_t k) { return k > 0; });
  if (strip) {
    auto shift = [&](MPoly& f) {
      MPoly g(f.vars());
      for (const auto& [e, c] : f.terms()) {
        Expo e2 = e;
        for (int i = 0; i < n; ++i) e2[i] -= mn[i];
        g.add_term(e2, c);
      }
      f = g;
    };
    shift(num_);
    shift(den_);
  }
  if (den_.is_constant()) {
    QuadExt inv = QuadExt(1) / den_.constant_value();
    num_ = num_.scaled(inv);
    den_ = MPoly::constant(num_.vars(), QuadExt(1));
    return;
  }
  if (auto q = divides_exactly(den_, num_)) {
    num_ = *q;
    den_ = MPoly::constant(num_.vars(), QuadExt(1));
    return;
  }
  // scale so den's lex-leading coefficient is 1
  QuadExt lead = den_.terms().rbegin()->second;
  if (!(lead == QuadExt(1))) {
    QuadExt inv = QuadExt(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

std::optional<MPoly> RatFun::as_polynomial() const {
  if (den_.is_constant()) return num_.scaled(QuadExt(1) / den_.constant_value());
  return divides_exactly(den_, num_);
}

RatFun operator+(const RatFun& f, const RatFun& g) {
  if (f.den_ == g.den_) return RatFun(f.num_ + g.num_, f.den_);
  return RatFun(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RatFun operator-(const RatFun& f, const RatFun& g) {
  if (f.den_ == g.den_) return RatFun(f.num_ - g.num_, f.den_);
  return RatFun(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RatFun operator*(const RatFun& f, const RatFun& g) {
  return RatFun(f.num_ * g.num_, f.den_ * g.den_);
}

RatFun operator/(const RatFun& f, const RatFun& g) {
  if (g.num_.is_zero()) throw std::domain_error("RatFun: division by zero");
  return RatFun(f.num_ * g.den_, f.den_ * g.num_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::pow(long e) const {
  if (e < 0) {
    if (num_.is_zero()) throw std::domain_error("RatFun::pow: zero to negative power");
    return RatFun(den_, num_).pow(-e);
  }
  return RatFun(num_.pow(e), den_.pow(e));
}

RatFun RatFun::derivative(int var) const {
  // (n' d - n d') / d^2
  return RatFun(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFun RatFun::derivative(const std::string& var) const { return derivative(vars()->index(var)); }

RatFun RatFun::substitute(const std::vector<RatFun>& image) const {
  RatFun n = num_.substitute(image);
  RatFun d = den_.substitute(image);
  if (d.is_zero()) throw std::domain_error("RatFun::substitute: denominator vanishes identically");
  return n / d;
}

RatFun RatFun::substitute(const std::map<std::string, RatFun>& bindings) const {
  RatFun n = num_.substitute(bindings);
  RatFun d = den_.substitute(bindings);
  if (d.is_zero()) throw std::domain_error("RatFun::substitute: denominator vanishes identically");
  return n / d;
}

QuadExt RatFun::eval(const std::vector<QuadExt>& point) const {
  QuadExt d = den_.eval(point);
  if (d.is_zero()) throw std::domain_error("RatFun::eval: denominator vanishes at point");
  return num_.eval(point) / d;
}

CScalar RatFun::eval_c(const std::vector<CScalar>& point) const {
  return num_.eval_c(point) / den_.eval_c(point);
}

bool equal(const RatFun& f, const RatFun& g) {
  return (f.num_ * g.den_ - g.num_ * f.den_).is_zero();
}

bool is_zero(const RatFun& f) { return f.is_zero(); }

std::string RatFun::str() const {
  if (den_.is_constant()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---------------- derivation rules ----------------

void DerivationRules::set(const std::string& var, MPoly rhs) {
  check_same(vars_, rhs.vars());
  rules_[vars_->index(var)] = std::move(rhs);
}

const MPoly* DerivationRules::rule(int var) const {
  auto it = rules_.find(var);
  return it == rules_.end() ? nullptr : &it->second;
}

MPoly total_derivative(const MPoly& f, const DerivationRules& rules) {
  check_same(f.vars(), rules.vars());
  MPoly out(f.vars());
  for (int i = 0; i < f.vars()->size(); ++i) {
    MPoly di = f.derivative(i);
    if (di.is_zero()) continue;
    const MPoly* r = rules.rule(i);
    if (!r)
      throw std::invalid_argument("total_derivative: no rule for variable " + f.vars()->name(i));
    out += di * *r;
  }
  return out;
}

RatFun total_derivative(const RatFun& f, const DerivationRules& rules) {
  MPoly dn = total_derivative(f.num(), rules);
  MPoly dd = total_derivative(f.den(), rules);
  return RatFun(dn * f.den() - f.num() * dd, f.den() * f.den());
}

std::vector<std::vector<RatFun>> jacobian(const std::vector<RatFun>& fields,
                                          const std::vector<int>& vars) {
  std::vector<std::vector<RatFun>> J;
  J.reserve(fields.size());
  for (const auto& f : fields) {
    std::vector<RatFun> row;
    row.reserve(vars.size());
    for (int v : vars) row.push_back(f.derivative(v));
    J.push_back(std::move(row));
  }
  return J;
}

// ---------------- parser ----------------

namespace {

struct Parser {
  const VarsPtr& vars;
  const std::string& s;
  std::size_t pos = 0;

  void skip() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at " + std::to_string(pos) + " in '" + s + "': " + why);
  }

  RatFun expr() {
    RatFun v = term();
    for (;;) {
      skip();
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  RatFun term() {
    RatFun v = unary();
    for (;;) {
      skip();
      if (eat('*')) v *= unary();
      else if (eat('/')) v /= unary();
      else return v;
    }
  }
  RatFun unary() {
    skip();
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RatFun power() {
    RatFun base = atom();
    skip();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("exponent expected");
      long e = std::stol(s.substr(start, pos - start));
      return base.pow(neg ? -e : e);
    }
    return base;
  }
  RatFun atom() {
    skip();
    if (eat('(')) {
      RatFun v = expr();
      if (!eat(')')) fail("expected )");
      return v;
    }
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      Rat q(rat_from_string(s.substr(start, pos - start)));
      return RatFun::constant(vars, QuadExt(q));
    }
    if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\''))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (name.rfind("sqrt", 0) == 0 && name.size() > 4 &&
          std::isdigit(static_cast<unsigned char>(name[4]))) {
        long dd = std::stol(name.substr(4));
        return RatFun::constant(vars, QuadExt::sqrt_of(dd));
      }
      if (name.rfind("isqrt", 0) == 0 && name.size() > 5 &&
          std::isdigit(static_cast<unsigned char>(name[5]))) {
        long dd = std::stol(name.substr(5));
        return RatFun::constant(vars, QuadExt::sqrt_of(-dd));
      }
      if (!vars->find(name)) fail("unknown symbol " + name);
      return RatFun::var(vars, name);
    }
    fail("unexpected character");
  }
};

}  // namespace

RatFun parse_ratfun(const VarsPtr& vars, const std::string& text) {
  Parser p{vars, text};
  RatFun v = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

MPoly parse_poly(const VarsPtr& vars, const std::string& text) {
  RatFun v = parse_ratfun(vars, text);
  auto pl = v.as_polynomial();
  if (!pl) throw std::invalid_argument("parse_poly: expression is not polynomial: " + text);
  return *pl;
}

}  // namespace chazy
