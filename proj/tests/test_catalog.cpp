#include <doctest.h>

#include "chazy/json_io.hpp"

using namespace chazy;

namespace {
QuadExt q(long n, long d = 1) { return QuadExt(rat(n, d)); }
}

TEST_CASE("registry holds every displayed system") {
  const auto& cat = Catalog::instance();
  CHECK(cat.names().size() >= 30);
  // all thirteen canonical classes present (X split into a/b)
  for (const char* n :
       {"chazy.I.canonical", "chazy.II.canonical", "chazy.III.canonical", "chazy.IV.canonical",
        "chazy.V.canonical", "chazy.VI.canonical", "chazy.VII.canonical", "chazy.VIII.canonical",
        "chazy.IX.canonical", "chazy.X.a.canonical", "chazy.X.b.canonical", "chazy.XI.canonical",
        "chazy.XII.canonical", "chazy.XIII.canonical"})
    CHECK(cat.contains(n));
}

TEST_CASE("well-formedness lint") {
  const auto& cat = Catalog::instance();
  for (const auto& name : cat.names()) {
    const auto& e = cat.entry(name);
    if (std::holds_alternative<SystemDef>(e)) {
      const auto& s = std::get<SystemDef>(e);
      CHECK(static_cast<int>(s.field.size()) == s.dim);
      int expected = s.dim + (s.has_time ? 1 : 0) + static_cast<int>(s.params.size());
      CHECK(s.vars->size() == expected);
    } else if (std::holds_alternative<PfaffianDef>(e)) {
      const auto& p = std::get<PfaffianDef>(e);
      CHECK(p.f.size() == p.g.size());
      CHECK(static_cast<int>(p.f.size()) == p.dim);
    }
  }
}

TEST_CASE("catalog get with bindings") {
  const auto& cat = Catalog::instance();
  auto e = cat.get("chazy.III.canonical");
  const auto& ode = std::get<ScalarODE>(e);
  // rhs 2 u u'' - 3 u'^2
  CHECK(equal(ode.rhs, parse_ratfun(ode.vars, "2*u*u2 - 3*u1^2")));

  // class XII with N = 3 carries the coefficient 4/27
  auto e12 = cat.get("chazy.XII.canonical", {{"N", q(3)}});
  const auto& xii = std::get<ScalarODE>(e12);
  RatFun expected = parse_ratfun(xii.vars, "2*u*u2 - 3*u1^2 + 4/27*(6*u1 - u^2)^2");
  CHECK(equal(xii.rhs, expected));

  // constraints on N
  CHECK_THROWS(cat.get("chazy.XII.canonical", {{"N", q(6)}}));
  CHECK_THROWS(cat.get("chazy.XI.canonical", {{"N", q(12)}}));
  CHECK_NOTHROW(cat.get("chazy.XI.canonical", {{"N", q(3)}}));
  CHECK_THROWS(cat.get("chazy.III.canonical", {{"N", q(3)}}));  // not a parameter

  // Halphen degenerates to dx/dt = x^2 at zero parameters
  auto hz = cat.get("halphen.classic", {{"alpha", q(0)}, {"beta", q(0)}, {"gamma", q(0)}});
  const auto& h = std::get<SystemDef>(hz);
  CHECK(equal(h.field[0], parse_ratfun(h.vars, "x^2")));
}

TEST_CASE("jet_system and autonomize") {
  const auto& cat = Catalog::instance();
  {
    SystemDef jet = jet_system(cat.ode("chazy.III.canonical"));
    CHECK(jet.dim == 3);
    CHECK(equal(jet.field[0], RatFun::var(jet.vars, "u1")));
    CHECK(equal(jet.field[2], parse_ratfun(jet.vars, "2*u*u2 - 3*u1^2")));
  }
  {
    SystemDef jet = jet_system(cat.ode("chazy.IX.equation"));
    CHECK(equal(jet.field[2], parse_ratfun(jet.vars, "54*u^4 + 72*u^2*u1 + 12*u1^2 + delta")));
  }
  {
    // order-1 toy
    ScalarODE o;
    o.name = "toy";
    o.order = 1;
    o.vars = VarTable::make({"u"});
    o.rhs = parse_ratfun(o.vars, "u^2");
    SystemDef jet = jet_system(o);
    CHECK(jet.dim == 1);
    CHECK(equal(jet.field[0], parse_ratfun(jet.vars, "u^2")));
  }
  {
    auto res = autonomize(cat.system("chazy.VIII.system"));
    CHECK(!res.was_autonomous);
    CHECK(res.sys.dim == 4);
    CHECK(equal(res.sys.field[3], RatFun::constant(res.sys.vars, q(1))));
    auto res2 = autonomize(cat.system("chazy.III.system"));
    CHECK(res2.was_autonomous);
  }
  {
    // jet elimination round trip: substituting u1 = u', ... reproduces the rhs
    const auto& ode = cat.ode("chazy.IX.equation");
    SystemDef jet = jet_system(ode);
    CHECK(equal(jet.field[jet.dim - 1], ode.rhs));
  }
  {
    // the 9-dim coefficient-ring closure only mentions registered symbols
    const auto& s = cat.system("chazy.I.system");
    CHECK(s.dim == 9);
    CHECK(s.is_polynomial());
  }
}

TEST_CASE("canonical JSON form is stable") {
  const auto& sys = Catalog::instance().system("appE.system");
  Json j = to_json(sys);
  std::string dumped = j.dump();
  // golden prefix: name, kind, dim and the lex-sorted first field terms
  CHECK(dumped.find("\"name\":\"appE.system\"") != std::string::npos);
  CHECK(j["field"].size() == 3);
  // serialization round trips through the term list deterministically
  CHECK(to_json(sys).dump() == dumped);
  // exact scalar serialization shape {"a":"p/q","b":"p/q","d":n}
  Json e = to_json(QuadExt(rat(1, 2), rat(-3, 7), 5));
  CHECK(e["a"] == "1/2");
  CHECK(e["b"] == "-3/7");
  CHECK(e["d"] == 5);
  Json c = to_json(CScalar(1.5, -2.0));
  CHECK(c[0] == 1.5);
  CHECK(c[1] == -2.0);
}

TEST_CASE("suggestions for unknown names") {
  auto s = Catalog::instance().suggest("chazy.IX");
  REQUIRE(!s.empty());
  CHECK(s.front().rfind("chazy.IX", 0) == 0);
}
