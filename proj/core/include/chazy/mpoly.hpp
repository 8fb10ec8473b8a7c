#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chazy/exact.hpp"

namespace chazy {

/// Ordered list of symbol names; the order fixes the lex monomial order.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);
  static std::shared_ptr<const VarTable> make(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index(const std::string& name) const;              // throws on miss
  std::optional<int> find(const std::string& name) const;

  friend bool operator==(const VarTable& x, const VarTable& y) { return x.names_ == y.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using VarsPtr = std::shared_ptr<const VarTable>;
using Expo = std::vector<int32_t>;

class RatFun;

/// Multivariate polynomial with QuadExt coefficients, sparse lex-ordered.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(VarsPtr vars) : vars_(std::move(vars)) {}

  static MPoly zero(VarsPtr vars) { return MPoly(std::move(vars)); }
  static MPoly constant(VarsPtr vars, const QuadExt& c);
  static MPoly var(VarsPtr vars, const std::string& name, int exp = 1);
  static MPoly var(VarsPtr vars, int index, int exp = 1);

  const VarsPtr& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  QuadExt constant_value() const;  // requires is_constant
  int term_count() const { return static_cast<int>(terms_.size()); }
  int degree() const;              // total degree, -1 for zero
  int degree_in(int var) const;
  const std::map<Expo, QuadExt>& terms() const { return terms_; }

  void add_term(const Expo& e, const QuadExt& c);

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& f, const MPoly& g);
  friend MPoly operator-(const MPoly& f, const MPoly& g);
  friend MPoly operator*(const MPoly& f, const MPoly& g);
  MPoly& operator+=(const MPoly& g) { *this = *this + g; return *this; }
  MPoly& operator-=(const MPoly& g) { *this = *this - g; return *this; }
  MPoly& operator*=(const MPoly& g) { *this = *this * g; return *this; }
  friend bool operator==(const MPoly& f, const MPoly& g);
  friend bool operator!=(const MPoly& f, const MPoly& g) { return !(f == g); }

  MPoly scaled(const QuadExt& c) const;
  MPoly pow(long e) const;
  MPoly derivative(int var) const;
  MPoly derivative(const std::string& var) const;

  QuadExt eval(const std::vector<QuadExt>& point) const;
  CScalar eval_c(const std::vector<CScalar>& point) const;

  /// Total substitution: image[i] replaces variable i; all images share one
  /// target table. Returns num/den over that table.
  RatFun substitute(const std::vector<RatFun>& image) const;

  /// Same-table partial substitution by name.
  RatFun substitute(const std::map<std::string, RatFun>& bindings) const;

  /// Coefficient of var^k viewed as polynomial in `var` (other vars kept).
  MPoly coeff_of(int var, int k) const;

  std::string str() const;

 private:
  friend class RatFun;
  VarsPtr vars_;
  std::map<Expo, QuadExt> terms_;
};

MPoly operator*(const QuadExt& c, const MPoly& f);

/// Rational function num/den; no gcd normalization beyond monomial content
/// and exact-division folding, equality via cross multiplication.
class RatFun {
 public:
  RatFun() = default;
  RatFun(MPoly num);  // NOLINT implicit: polynomial as rational
  RatFun(MPoly num, MPoly den);

  static RatFun constant(VarsPtr vars, const QuadExt& c) { return RatFun(MPoly::constant(std::move(vars), c)); }
  static RatFun var(VarsPtr vars, const std::string& name) { return RatFun(MPoly::var(std::move(vars), name)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const VarsPtr& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Polynomial content when den divides num (or is constant).
  std::optional<MPoly> as_polynomial() const;

  friend RatFun operator+(const RatFun& f, const RatFun& g);
  friend RatFun operator-(const RatFun& f, const RatFun& g);
  friend RatFun operator*(const RatFun& f, const RatFun& g);
  friend RatFun operator/(const RatFun& f, const RatFun& g);
  RatFun operator-() const;
  RatFun& operator+=(const RatFun& g) { *this = *this + g; return *this; }
  RatFun& operator-=(const RatFun& g) { *this = *this - g; return *this; }
  RatFun& operator*=(const RatFun& g) { *this = *this * g; return *this; }
  RatFun& operator/=(const RatFun& g) { *this = *this / g; return *this; }

  RatFun pow(long e) const;
  RatFun derivative(int var) const;
  RatFun derivative(const std::string& var) const;
  RatFun substitute(const std::vector<RatFun>& image) const;
  RatFun substitute(const std::map<std::string, RatFun>& bindings) const;
  QuadExt eval(const std::vector<QuadExt>& point) const;  // throws when den vanishes
  CScalar eval_c(const std::vector<CScalar>& point) const;

  /// Exact equality as rational functions (cross multiplication).
  friend bool equal(const RatFun& f, const RatFun& g);

  std::string str() const;

 private:
  void normalize();
  MPoly num_, den_;
};

bool is_zero(const RatFun& f);

/// Exact quotient num/den when division is exact, else nullopt.
std::optional<MPoly> divides_exactly(const MPoly& den, const MPoly& num);

/// d(var)/dt table for differential-ring style derivation.
class DerivationRules {
 public:
  DerivationRules() = default;
  explicit DerivationRules(VarsPtr vars) : vars_(std::move(vars)) {}
  void set(const std::string& var, MPoly rhs);
  const MPoly* rule(int var) const;
  const VarsPtr& vars() const { return vars_; }

 private:
  VarsPtr vars_;
  std::map<int, MPoly> rules_;
};

MPoly total_derivative(const MPoly& f, const DerivationRules& rules);
RatFun total_derivative(const RatFun& f, const DerivationRules& rules);

/// Entry (i,j) = d fields[i] / d vars[j].
std::vector<std::vector<RatFun>> jacobian(const std::vector<RatFun>& fields,
                                          const std::vector<int>& vars);

/// Parse "x^2*y - 3/2*z + sqrt5*x" style expressions over the table.
/// Supported atoms: names from the table, integer/rational literals,
/// `sqrtD`/`isqrtD` for sqrt(±D); operators + - * / ^ and parentheses.
MPoly parse_poly(const VarsPtr& vars, const std::string& text);
RatFun parse_ratfun(const VarsPtr& vars, const std::string& text);

}  // namespace chazy
