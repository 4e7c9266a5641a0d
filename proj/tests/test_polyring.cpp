#include <random>

#include "doctest.h"
#include "fqloop/corpus.hpp"
#include "fqloop/equivalence.hpp"
#include "fqloop/polyring.hpp"

using namespace fqloop;

namespace {

// Value of p at an integer point, by direct expansion.
Coefficient value_at(const Poly& p, const std::array<long long, 4>& pt) {
  Coefficient acc = 0;
  for (const auto& [m, c] : p.terms()) {
    Coefficient t = c;
    for (int v = 0; v < 4; ++v)
      for (unsigned k = 0; k < m.exps[v]; ++k) t *= pt[v];
    acc += t;
  }
  return acc;
}

Poly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> coeff(-9, 9), var(0, 3), deg(1, max_deg), nterms(1, 4);
  Poly p;
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Monomial m;
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) ++m.exps[var(rng)];
    p = p + Poly::term(coeff(rng), m);
  }
  return p;
}

}  // namespace

TEST_CASE("parse and print") {
  const auto p = parse_poly("2*x^2*u - y*v + 3*x");
  CHECK(to_string(p) == "2*x^2*u - y*v + 3*x");
  CHECK(parse_poly(to_string(p)) == p);
  CHECK(parse_poly("x + x - 2x").is_zero());
  CHECK(to_string(parse_poly("0")) == "0");
  CHECK(parse_poly(" - x y ") == -(generators().x * generators().y));
  CHECK(parse_poly("u^2v") == parse_poly("u*u*v"));
  CHECK(p.degree() == 3);
}

TEST_CASE("parse errors") {
  auto kind_of = [](std::string_view s) {
    try {
      (void)parse_poly(s);
    } catch (const AlgebraError& e) {
      return e.kind();
    }
    return ErrorKind::InvariantViolation;
  };
  CHECK(kind_of("1 + x") == ErrorKind::PolyParse);
  CHECK(kind_of("x + 5") == ErrorKind::PolyParse);
  CHECK(kind_of("") == ErrorKind::PolyParse);
  CHECK(kind_of("x*") == ErrorKind::PolyParse);
  CHECK(kind_of("x + z") == ErrorKind::PolyParse);
  CHECK(kind_of("x^13") == ErrorKind::DegreeOverflow);
}

TEST_CASE("degree cap on products") {
  const auto g = generators();
  Poly p = g.x;
  for (int i = 1; i < 12; ++i) p = p * g.y;
  CHECK(p.degree() == 12);
  CHECK_THROWS_AS(p * g.u, AlgebraError);
}

TEST_CASE("ring operations agree with point evaluation") {
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<long long> coord(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = random_poly(rng, 3), q = random_poly(rng, 3);
    const std::array<long long, 4> pt{coord(rng), coord(rng), coord(rng), coord(rng)};
    CHECK(value_at(p + q, pt) == value_at(p, pt) + value_at(q, pt));
    CHECK(value_at(p * q, pt) == value_at(p, pt) * value_at(q, pt));
    CHECK(value_at(-p, pt) == -value_at(p, pt));
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("big coefficients stay exact") {
  Poly p = parse_poly("99999999999*x");
  for (int i = 0; i < 3; ++i) p = p + p * parse_poly("99999999999*y");
  const std::array<long long, 4> pt{1, 1, 0, 0};
  CHECK(value_at(p, pt) == Coefficient("99999999999") * Coefficient("100000000000") *
                               Coefficient("100000000000") * Coefficient("100000000000"));
}

TEST_CASE("evaluation is a ring homomorphism on corpus modules") {
  std::mt19937_64 rng(kDefaultSeed);
  std::vector<PointedGenModule> modules;
  for (const auto& g : group_tables()) {
    const auto forms = enumerate_forms(g.loop, 3);
    for (const auto& f : forms) modules.push_back(rho(PointedFQ{build_fq(f), g.loop.zero()}, f));
  }
  for (const auto& pm : modules) {
    const auto& ctx = pm.module.context();
    for (int trial = 0; trial < 5; ++trial) {
      const Poly p = random_poly(rng, 3), q = random_poly(rng, 3);
      const Endo ep = evaluate(p, pm.module.action(), ctx), eq = evaluate(q, pm.module.action(), ctx);
      CHECK(evaluate(p + q, pm.module.action(), ctx) == endo_add(ctx.loop(), ep, eq));
      CHECK(evaluate(p * q, pm.module.action(), ctx) == endo_compose(ep, eq));
    }
  }
}

TEST_CASE("evaluate checks the images") {
  const auto s3 = permutation_group({{1, 0, 2}, {1, 2, 0}});
  const ActionImages not_special{identity_endo(6), identity_endo(6), identity_endo(6), identity_endo(6)};
  CHECK_THROWS_AS(evaluate(generators().x, not_special, s3), AlgebraError);

  const auto z4 = cyclic(4);
  const Endo three{{0, 3, 2, 1}}, zero = zero_endo(z4);
  CHECK_THROWS_AS(evaluate(generators().x, ActionImages{three, zero, zero, Endo{{0, 1, 2}}}, z4), AlgebraError);

  const auto c = cml81();
  const EndoContext ctx(c);
  const Endo z = zero_endo(c);
  CHECK(evaluate(parse_poly("3*x*y - u"), ActionImages{z, z, z, z}, ctx) == z);
}
