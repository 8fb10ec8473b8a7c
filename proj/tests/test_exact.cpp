#include <doctest.h>

#include <random>

#include "chazy/exact.hpp"
#include "chazy/linalg.hpp"
#include "chazy/mpoly.hpp"
#include "chazy/pseries.hpp"

using namespace chazy;

namespace {

QuadExt rnd_quad(std::mt19937_64& rng, long d) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
  return QuadExt(rat(num(rng), den(rng)), rat(num(rng), den(rng)), d);
}

}  // namespace

TEST_CASE("quadext basic arithmetic") {
  QuadExt r5 = QuadExt::sqrt_of(5);
  QuadExt one_p = QuadExt(1) + r5;       // 1 + sqrt5
  QuadExt one_m = QuadExt(1) - r5;       // 1 - sqrt5
  CHECK(one_p * one_m == QuadExt(-4));   // difference of squares

  QuadExt inv = QuadExt(1) / r5;         // rationalization
  CHECK(inv == QuadExt(Rat(0), rat(1, 5), 5));

  // the delta multipliers of g0 and g1 are inverse units
  QuadExt m0 = QuadExt(rat(7, 2), rat(3, 2), 5);
  QuadExt m1 = QuadExt(rat(7, 2), rat(-3, 2), 5);
  CHECK(m0 * m1 == QuadExt(1));
}

TEST_CASE("quadext rejects incompatible radicals and zero division") {
  QuadExt a = QuadExt::sqrt_of(5), b = QuadExt::sqrt_of(3);
  CHECK_THROWS_AS(a + b, std::domain_error);
  CHECK_THROWS_AS(a / QuadExt(0), std::domain_error);
  CHECK_NOTHROW(a * QuadExt(rat(2, 3)));  // pure rational mixes fine
}

TEST_CASE("quadext field axioms, randomized") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    long d = (it % 2) ? 5 : -3;
    QuadExt x = rnd_quad(rng, d), y = rnd_quad(rng, d), z = rnd_quad(rng, d);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == QuadExt(1));
  }
}

TEST_CASE("embed_numeric values") {
  CHECK(QuadExt(rat(1, 2)).to_complex() == CScalar(0.5, 0.0));
  CScalar im = QuadExt::sqrt_of(-3).to_complex();
  CHECK(im.real() == 0.0);
  CHECK(im.imag() == doctest::Approx(1.7320508075688772).epsilon(1e-15));
  // (3/2)(sqrt5 - 1), evaluated independently to 50 digits: 0.92705098312484227...*2
  QuadExt v = QuadExt(rat(-3, 2), rat(3, 2), 5);
  CHECK(v.to_complex().real() == doctest::Approx(1.8541019662496845).epsilon(1e-15));
}

TEST_CASE("embed is a ring homomorphism up to ulps") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    QuadExt x = rnd_quad(rng, 5), y = rnd_quad(rng, 5);
    CScalar lhs = (x * y).to_complex();
    CScalar rhs = x.to_complex() * y.to_complex();
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    lhs = (x + y).to_complex();
    rhs = x.to_complex() + y.to_complex();
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("recognize_rational") {
  CHECK(*recognize_rational({2.9999999997, 0}, 64, 1e-8) == rat(3));
  CHECK(*recognize_rational({0.333333333, 0}, 10, 1e-6) == rat(1, 3));
  CHECK(!recognize_rational({1.7320508, 0}, 1000, 1e-9));          // sqrt3 is not rational
  CHECK(!recognize_rational({0.5, 1e-3}, 10, 1e-6));               // imaginary part too large
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    std::uniform_int_distribution<long> num(-300, 300), den(1, 40);
    Rat q = rat(num(rng), den(rng));
    auto rec = recognize_rational(QuadExt(q).to_complex(), 64, 1e-12);
    REQUIRE(rec);
    CHECK(*rec == q);
  }
}

TEST_CASE("quadext sqrt") {
  QuadExt m0 = QuadExt(rat(7, 2), rat(3, 2), 5);  // = ((1+sqrt5)/2)^2 * ... check root exists
  auto r = m0.sqrt();
  REQUIRE(r);
  CHECK(*r * *r == m0);
  CHECK(!QuadExt(rat(2)).sqrt());                 // sqrt(2) not in Q
  auto r9 = QuadExt(rat(9, 4)).sqrt();
  REQUIRE(r9);
  CHECK(*r9 == QuadExt(rat(3, 2)));
}

TEST_CASE("recognize_quadext lifts") {
  QuadExt v = QuadExt(rat(3, 2), rat(-1, 2), 5);
  auto lift = recognize_quadext(v.to_complex(), 5, 16, 1e-9);
  REQUIRE(lift);
  CHECK(*lift == v);
  QuadExt w = QuadExt(rat(-3), rat(1), -3);
  auto liftw = recognize_quadext(w.to_complex(), -3, 16, 1e-9);
  REQUIRE(liftw);
  CHECK(*liftw == w);
}

TEST_CASE("mpoly arithmetic and derivatives") {
  auto vars = VarTable::make({"x", "y"});
  MPoly x = MPoly::var(vars, "x"), y = MPoly::var(vars, "y");
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x + MPoly::constant(vars, QuadExt(1))).pow(0) ==
        MPoly::constant(vars, QuadExt(1)));
  MPoly f = x * x * y + QuadExt(3) * x;
  CHECK(f.derivative("x") == QuadExt(2) * (x * y) + MPoly::constant(vars, QuadExt(3)));
  CHECK(f.derivative("y") == x * x);
}

TEST_CASE("mpoly parser round trips") {
  auto vars = VarTable::make({"x", "y", "delta"});
  MPoly f = parse_poly(vars, "3/2*(sqrt5 - 1)*x^2 - y*delta + 7");
  CHECK(f.term_count() == 3);
  CHECK(f.eval({QuadExt(0), QuadExt(0), QuadExt(0)}) == QuadExt(7));
  CHECK_THROWS(parse_poly(vars, "x + unknown_sym"));
  RatFun g = parse_ratfun(vars, "(x^2 - y^2)/(x - y) - (x + y)");
  CHECK(g.is_zero());
}

TEST_CASE("divides_exactly") {
  auto vars = VarTable::make({"x", "y"});
  MPoly x = MPoly::var(vars, "x"), y = MPoly::var(vars, "y");
  auto q = divides_exactly(x, x * x * y + QuadExt(3) * x);
  REQUIRE(q);
  CHECK(*q == x * y + MPoly::constant(vars, QuadExt(3)));
  CHECK(!divides_exactly(x, x * y + y));
  // randomized d * q / d == q
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4);
    auto rnd = [&](int terms) {
      MPoly f(vars);
      for (int t = 0; t < terms; ++t) {
        Expo e = {deg(rng), deg(rng)};
        f.add_term(e, QuadExt(rat(coef(rng))));
      }
      return f;
    };
    MPoly d = rnd(3), qq = rnd(4);
    if (d.is_zero()) continue;
    auto got = divides_exactly(d, d * qq);
    REQUIRE(got);
    CHECK(*got == qq);
  }
}

TEST_CASE("vartable mismatch and vanishing denominators are explicit errors") {
  auto v1 = VarTable::make({"x", "y"});
  auto v2 = VarTable::make({"x", "z"});
  CHECK_THROWS_AS(MPoly::var(v1, "x") + MPoly::var(v2, "x"), std::invalid_argument);
  RatFun f = parse_ratfun(v1, "1/(x - y)");
  std::map<std::string, RatFun> collapse = {{"x", RatFun::var(v1, "y")}};
  CHECK_THROWS_AS(f.substitute(collapse), std::domain_error);
}

TEST_CASE("substitution composes") {
  auto vars = VarTable::make({"x", "y"});
  RatFun f = parse_ratfun(vars, "x^2");
  auto uvars = VarTable::make({"u"});
  std::vector<RatFun> image = {parse_ratfun(uvars, "1/u"), RatFun::constant(uvars, QuadExt(0))};
  RatFun g = f.substitute(image);
  CHECK(equal(g, parse_ratfun(uvars, "1/u^2")));
}

TEST_CASE("total_derivative leibniz, randomized") {
  auto vars = VarTable::make({"u", "u1", "u2"});
  DerivationRules rules(vars);
  rules.set("u", MPoly::var(vars, "u1"));
  rules.set("u1", MPoly::var(vars, "u2"));
  rules.set("u2", parse_poly(vars, "2*u*u2 - 3*u1^2"));
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> deg(0, 2), coef(-3, 3);
  auto rnd = [&]() {
    MPoly f(vars);
    for (int t = 0; t < 4; ++t) f.add_term({deg(rng), deg(rng), deg(rng)}, QuadExt(rat(coef(rng))));
    return f;
  };
  for (int it = 0; it < 40; ++it) {
    MPoly f = rnd(), g = rnd();
    CHECK(total_derivative(f * g, rules) ==
          f * total_derivative(g, rules) + g * total_derivative(f, rules));
  }
  DerivationRules empty_rules(vars);
  CHECK_THROWS_WITH_AS(total_derivative(MPoly::var(vars, "u"), empty_rules),
                       doctest::Contains("no rule for variable u"), std::invalid_argument);
}

TEST_CASE("is_zero agrees with random evaluation") {
  auto vars = VarTable::make({"x", "y", "z"});
  RatFun f = parse_ratfun(vars, "(x + y)*(x - y) - x^2 + y^2");
  CHECK(f.is_zero());
  RatFun g = parse_ratfun(vars, "(x + y)^2 - x^2 - y^2");
  CHECK(!g.is_zero());
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-9, 9);
  int zero_hits = 0;
  for (int it = 0; it < 20; ++it) {
    std::vector<QuadExt> pt = {QuadExt(rat(num(rng), 7)), QuadExt(rat(num(rng), 5)),
                               QuadExt(rat(num(rng), 3))};
    if (g.eval(pt).is_zero()) ++zero_hits;
    CHECK(f.eval(pt).is_zero());
  }
  CHECK(zero_hits < 20);
}

TEST_CASE("pseries arithmetic") {
  // geometric series: 1/(1 - tau)
  PSeries one = PSeries::constant(QuadExt(1), 8);
  PSeries tau = PSeries::tau_power(1, 8);
  PSeries geo = one / (one - tau);
  for (int k = 0; k < 8; ++k) CHECK(geo.coeff(k) == QuadExt(1));
  PSeries d = geo.derivative();
  CHECK(d.coeff(0) == QuadExt(1));
  CHECK(d.coeff(2) == QuadExt(3));
  // Laurent division: (1 + tau) / tau^2
  PSeries lau = (one + tau) / tau.pow(2);
  CHECK(lau.coeff(-2) == QuadExt(1));
  CHECK(lau.coeff(-1) == QuadExt(1));
  CHECK(lau.coeff(0) == QuadExt(0));
}

TEST_CASE("linalg: det, charpoly, roots") {
  QMatrix A = {{QuadExt(2), QuadExt(1)}, {QuadExt(1), QuadExt(2)}};
  CHECK(qmat_det(A) == QuadExt(3));
  QVector cp = char_poly(A);  // x^2 - 4x + 3
  CHECK(cp[0] == QuadExt(3));
  CHECK(cp[1] == QuadExt(-4));
  CHECK(cp[2] == QuadExt(1));
  auto roots = upoly_roots(cp, 0);
  REQUIRE(roots.complete_exact());
  std::vector<QuadExt> ev = roots.exact;
  std::sort(ev.begin(), ev.end());
  CHECK(ev[0] == QuadExt(1));
  CHECK(ev[1] == QuadExt(3));

  // eigenvalues in an imaginary quadratic field: [[-2,1],[-4,-4]] -> -3 +- sqrt(-3)
  QMatrix B = {{QuadExt(-2), QuadExt(1)}, {QuadExt(-4), QuadExt(-4)}};
  auto r2 = upoly_roots(char_poly(B), 0);
  REQUIRE(r2.complete_exact());
  QuadExt want1 = QuadExt(rat(-3), rat(1), -3), want2 = QuadExt(rat(-3), rat(-1), -3);
  CHECK(((r2.exact[0] == want1 && r2.exact[1] == want2) ||
         (r2.exact[0] == want2 && r2.exact[1] == want1)));
}

TEST_CASE("linalg: solve and nullspace") {
  QMatrix A = {{QuadExt(1), QuadExt(2), QuadExt(3)}, {QuadExt(2), QuadExt(4), QuadExt(6)}};
  QVector b = {QuadExt(6), QuadExt(12)};
  auto s = solve_linear(A, b);
  REQUIRE(s);
  CHECK(s->nullspace.size() == 2);
  QVector bad = {QuadExt(6), QuadExt(13)};
  CHECK(!solve_linear(A, bad));
}

TEST_CASE("jet prolongation reproduces the transformation structure") {
  // differentiating the y-component of the IX-system map along the jet flow
  // lands exactly on its z-component
  auto vars = VarTable::make({"u", "u1", "u2", "delta"});
  DerivationRules rules(vars);
  rules.set("u", MPoly::var(vars, "u1"));
  rules.set("u1", MPoly::var(vars, "u2"));
  rules.set("u2", parse_poly(vars, "54*u^4 + 72*u^2*u1 + 12*u1^2 + delta"));
  rules.set("delta", MPoly::zero(vars));
  MPoly y_comp = parse_poly(vars, "u1 + 3/2*(sqrt5 - 1)*u^2");
  MPoly z_comp = parse_poly(vars, "u2 + 3*(sqrt5 - 1)*u*u1");
  CHECK(total_derivative(y_comp, rules) == z_comp);
}
