#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qzeta/int_poly.hpp"
#include "qzeta/jet.hpp"
#include "qzeta/laurent_poly.hpp"
#include "qzeta/number.hpp"
#include "qzeta/q_toolkit.hpp"
#include "qzeta/rat_func.hpp"
#include "qzeta/rpoly.hpp"

using namespace qzeta;

namespace {

IntPoly ip(std::vector<long> coeffs) {
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly::from_coeffs(std::move(c));
}

// Deterministic small-state generator for property sweeps; no libc rand so
// failures reproduce across platforms.
struct Lcg {
  unsigned long long s = 0x2545F4914F6CDD1Dull;
  long next(long lo, long hi) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<long>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
  }
};

RatFunc random_ratfunc(Lcg& rng) {
  IntPoly num = ip({rng.next(-4, 4), rng.next(-4, 4), rng.next(0, 3)});
  IntPoly den = ip({rng.next(1, 4), rng.next(-3, 3), rng.next(0, 2)});
  if (num.is_zero()) num = IntPoly(1L);
  if (den.is_zero()) den = IntPoly(1L);
  BigRat scale(rng.next(1, 5), rng.next(1, 5));
  scale.canonicalize();
  return RatFunc(num, den, scale);
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("3/6") == BigRat(1, 2));
  CHECK(parse_rational("-7/3") == BigRat(-7, 3));
  CHECK(parse_rational("5") == BigRat(5));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
}

TEST_CASE("integer polynomial arithmetic and exact division") {
  const IntPoly q = IntPoly::variable();
  const IntPoly a = ip({-1, 0, 1});  // q^2 - 1
  const IntPoly b = ip({-1, 1});     // q - 1

  CHECK(a.degree() == 2);
  CHECK(a.divexact(b) == ip({1, 1}));
  CHECK_THROWS_AS(ip({1, 0, 1}).divexact(b), std::domain_error);
  CHECK_FALSE(ip({1, 0, 1}).try_divide(b).has_value());
  CHECK((q * q - IntPoly(1L)) == a);
  CHECK(ip({2, 4, 6}).content() == BigInt(2));
  CHECK(ip({2, 4, 6}).primitive_part() == ip({1, 2, 3}));
  CHECK(a.eval(BigRat(1, 2)) == BigRat(-3, 4));
  CHECK(a.reversed() == ip({1, 0, -1}));
  CHECK(a.derivative() == ip({0, 2}));
}

TEST_CASE("polynomial gcd via divisibility") {
  const IntPoly f = ip({1, 1});          // q + 1
  const IntPoly g = ip({2, 0, 1});       // q^2 + 2
  const IntPoly h = ip({-3, 1, 0, 2});   // 2q^3 + q - 3
  const IntPoly d = poly_gcd(f * h, g * h);
  // f and g are coprime, so the gcd is an associate of h's primitive part.
  CHECK(d.try_divide(h.primitive_part()).has_value());
  CHECK(h.try_divide(d).has_value());
  CHECK((f * h).try_divide(d).has_value());
  CHECK((g * h).try_divide(d).has_value());
}

TEST_CASE("laurent polynomial ring operations") {
  LaurentPoly f = LaurentPoly::monomial(BigInt(1), -2) +
                  LaurentPoly::monomial(BigInt(3), 1);
  CHECK(f.min_exp() == -2);
  CHECK(f.max_exp() == 1);
  CHECK(f.coeff(-2) == BigInt(1));
  CHECK(f.coeff(0) == BigInt(0));

  LaurentPoly g = f.subst_inverse();
  CHECK(g.coeff(2) == BigInt(1));
  CHECK(g.coeff(-1) == BigInt(3));
  CHECK(g.subst_inverse() == f);

  CHECK(f.eval(BigRat(2)) == BigRat(1, 4) + BigRat(6));
  CHECK((f * f).coeff(-4) == BigInt(1));
  CHECK((f - f).is_zero());
  CHECK(f.shifted(2).min_exp() == 0);
  CHECK_THROWS_AS(LaurentPoly().min_exp(), std::domain_error);
  CHECK_THROWS_AS(f.eval(BigRat(0)), std::domain_error);

  // divexact round trip
  LaurentPoly h = LaurentPoly::monomial(BigInt(1), 0) -
                  LaurentPoly::monomial(BigInt(1), -3);
  CHECK((f * h).divexact(h) == f);
}

TEST_CASE("rational function field examples") {
  const IntPoly q = IntPoly::variable();
  const IntPoly qm1 = ip({-1, 1});

  // q/(q-1) + (-1)/(q-1) telescopes to the constant 1
  RatFunc a(q, qm1);
  RatFunc b(IntPoly(-1L), qm1);
  CHECK(a + b == RatFunc(1L));

  // (q^2-1)/(q-1) cancels exactly to q+1
  CHECK(RatFunc(ip({-1, 0, 1}), qm1) == RatFunc(ip({1, 1})));

  // inverse pair
  RatFunc u(ip({1, 1}), ip({1, -1}));
  RatFunc v(ip({1, -1}), ip({1, 1}));
  CHECK(u * v == RatFunc(1L));
  CHECK(u.inverse() == v);

  CHECK_THROWS_AS(u / RatFunc(0L), std::domain_error);
  CHECK_THROWS_AS(RatFunc(0L).inverse(), std::domain_error);
}

TEST_CASE("canonical form is unique") {
  Lcg rng;
  for (int trial = 0; trial < 30; ++trial) {
    IntPoly a = ip({rng.next(-5, 5), rng.next(-5, 5), rng.next(0, 4)});
    IntPoly b = ip({rng.next(1, 5), rng.next(-5, 5)});
    IntPoly c = ip({rng.next(-3, 3), rng.next(1, 3)});
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    CHECK(RatFunc(a * c, b * c) == RatFunc(a, b));
  }
  // scale extraction: (2q+2)/(4q-4) = (1/2)(q+1)/(q-1)
  CHECK(RatFunc(ip({2, 2}), ip({-4, 4})) ==
        RatFunc(ip({1, 1}), ip({-1, 1}), BigRat(1, 2)));
  // denominator sign is normalized away
  CHECK(RatFunc(ip({1, 1}), ip({1, -1})) ==
        RatFunc(ip({-1, -1}), ip({-1, 1})));
}

TEST_CASE("field axioms on generated triples") {
  Lcg rng;
  for (int trial = 0; trial < 20; ++trial) {
    RatFunc a = random_ratfunc(rng);
    RatFunc b = random_ratfunc(rng);
    RatFunc c = random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1L));
  }
}

TEST_CASE("substitution and derivative rules") {
  Lcg rng;
  for (int trial = 0; trial < 12; ++trial) {
    RatFunc f = random_ratfunc(rng);
    RatFunc g = random_ratfunc(rng);
    CHECK(f.subst_inverse().subst_inverse() == f);
    CHECK((f * g).subst_inverse() == f.subst_inverse() * g.subst_inverse());
    CHECK((f + g).subst_inverse() == f.subst_inverse() + g.subst_inverse());
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
    if (!f.is_zero()) {
      RatFunc inv = f.inverse();
      CHECK(inv.derivative() == -f.derivative() * inv * inv);
    }
  }
  RatFunc h(ip({-1, 0, 1}), ip({-1, 1}));  // = q + 1 canonically
  CHECK(h.eval(BigRat(3)) == BigRat(4));
  RatFunc pole(IntPoly(1L), ip({-1, 1}));
  CHECK_THROWS_AS(pole.eval(BigRat(1)), std::domain_error);
}

TEST_CASE("laurent ring membership with witnesses") {
  // (q^3-1)/q^3 lies in Z[1/q] with witness 1 - q^{-3}
  RatFunc f(ip({-1, 0, 0, 1}), ip({0, 0, 0, 1}));
  MembershipResult inv = laurent_membership(f, LaurentRing::kPolyInvQ);
  REQUIRE(inv.member);
  LaurentPoly expected = LaurentPoly(BigInt(1)) -
                         LaurentPoly::monomial(BigInt(1), -3);
  CHECK(inv.witness == expected);
  CHECK(laurent_membership(f, LaurentRing::kLaurent).member);
  CHECK_FALSE(laurent_membership(f, LaurentRing::kPolyQ).member);

  // (q^2+1)/(q-1): irreducible non-monomial denominator fails everywhere
  RatFunc g(ip({1, 0, 1}), ip({-1, 1}));
  CHECK_FALSE(laurent_membership(g, LaurentRing::kLaurent).member);
  CHECK_FALSE(laurent_membership(g, LaurentRing::kPolyQ).member);
  CHECK_FALSE(laurent_membership(g, LaurentRing::kPolyInvQ).member);

  // d_3(1/q) against the brute-force mirror of d_3(q)
  RatFunc d3inv = RatFunc(d_n(3)).subst_inverse();
  MembershipResult m = laurent_membership(d3inv, LaurentRing::kPolyInvQ);
  REQUIRE(m.member);
  LaurentPoly mirror;
  for (int e = 0; e <= d_n(3).degree(); ++e)
    mirror += LaurentPoly::monomial(d_n(3).coeff(e), -e);
  CHECK(m.witness == mirror);

  // non-integer scale blocks membership; integer scale folds into witness
  CHECK_FALSE(
      laurent_membership(RatFunc(ip({1, 1}), IntPoly(1L), BigRat(1, 2)),
                         LaurentRing::kLaurent)
          .member);
  MembershipResult tripled = laurent_membership(
      RatFunc(ip({1, 1}), IntPoly(1L), BigRat(3)), LaurentRing::kPolyQ);
  REQUIRE(tripled.member);
  CHECK(tripled.witness == LaurentPoly::from_poly(ip({3, 3})));
}

TEST_CASE("jet arithmetic basics") {
  const RatFunc one(1L);

  Jet geom = Jet::variable(one, 2).inverse();  // 1/(1+eps)
  CHECK(geom.coeff(0) == one);
  CHECK(geom.coeff(1) == RatFunc(-1L));
  CHECK(geom.coeff(2) == one);

  Jet prod = Jet::variable(one, 2) *
             Jet::linear_factor(one, RatFunc(-1L), 1, 2);  // (1+e)(1-e)
  CHECK(prod.coeff(0) == one);
  CHECK(prod.coeff(1).is_zero());
  CHECK(prod.coeff(2) == RatFunc(-1L));

  const RatFunc c = RatFunc::variable();  // expansion base q
  Jet shifted = Jet::variable(c, 1).inverse();
  CHECK(shifted.coeff(0) == c.inverse());
  CHECK(shifted.coeff(1) == -c.inverse() * c.inverse());

  // (c+eps)^3 from the closed binomial form equals iterated products
  Jet cubed = Jet::linear_factor(c, one, 3, 3);
  Jet manual = Jet::variable(c, 3);
  manual = manual * Jet::variable(c, 3) * Jet::variable(c, 3);
  CHECK(cubed == manual);

  CHECK_THROWS_AS(Jet::constant(RatFunc(0L), 2).inverse(), std::domain_error);
  CHECK_THROWS_AS(Jet::linear_factor(RatFunc(0L), one, -1, 2),
                  std::domain_error);
  CHECK_THROWS_AS(Jet::variable(one, 2) + Jet::variable(one, 3),
                  std::invalid_argument);
  CHECK(Jet::variable(one, 3).truncated(1).order() == 1);
}

TEST_CASE("jet coefficients match a logarithmic-derivative oracle") {
  // f = prod (c_i + b_i eps)^{e_i}.  Independent route: expand log f as a
  // power series through power sums of b_i/c_i, then exponentiate by the
  // series ODE g' = (log f)' g.  Any mismatch with the jet route would
  // expose an error in truncated multiplication or the binomial factors.
  const int order = 4;
  struct Factor {
    RatFunc c, b;
    int e;
  };
  const RatFunc q = RatFunc::variable();
  std::vector<std::vector<Factor>> cases = {
      {{RatFunc(1L), RatFunc(1L), 2}, {q, RatFunc(-1L), -3}},
      {{RatFunc(2L) - q, q, 1},
       {RatFunc(1L) + q, RatFunc(1L), -2},
       {q * q, RatFunc(1L), 2}},
      {{q, q, -1}, {RatFunc(1L), q * q, 3}, {RatFunc(3L), RatFunc(-1L), 1}},
      {{RatFunc(1L) + q, RatFunc(-1L), -1},
       {RatFunc(5L), q, 2},
       {q, RatFunc(1L), 1},
       {RatFunc(2L), RatFunc(1L), -2}}};

  for (const auto& factors : cases) {
    Jet viaJets = Jet::constant(RatFunc(1L), order);
    for (const auto& f : factors)
      viaJets = viaJets * Jet::linear_factor(f.c, f.b, f.e, order);

    std::vector<RatFunc> lambda(order + 1);  // log-series coefficients
    for (int m = 1; m <= order; ++m) {
      RatFunc power_sum;
      for (const auto& f : factors)
        power_sum += RatFunc(static_cast<long>(f.e)) * (f.b / f.c).pow(m);
      lambda[m] = power_sum * RatFunc(BigRat((m % 2 != 0) ? 1 : -1,
                                             static_cast<long>(m)));
    }
    std::vector<RatFunc> g(order + 1);
    g[0] = RatFunc(1L);
    for (const auto& f : factors) g[0] = g[0] * f.c.pow(f.e);
    for (int k = 1; k <= order; ++k) {
      RatFunc acc;
      for (int m = 1; m <= k; ++m)
        acc += RatFunc(static_cast<long>(m)) * lambda[m] * g[k - m];
      g[k] = acc * RatFunc(BigRat(1, static_cast<long>(k)));
    }
    for (int k = 0; k <= order; ++k) CHECK(viaJets.coeff(k) == g[k]);
  }
}

TEST_CASE("polynomials over the rational-function field") {
  const RatFunc q = RatFunc::variable();
  RPoly p = RPoly::from_coeffs({RatFunc(1L), q, q * q});
  CHECK(p.degree() == 2);
  CHECK(p.eval(RatFunc(1L)) == RatFunc(1L) + q + q * q);
  CHECK(p.eval(q) == RatFunc(1L) + q * q + q * q * q * q);
  CHECK(p.derivative() == RPoly::from_coeffs({q, q * q * BigRat(2)}));

  RPoly z = RPoly::variable();
  CHECK((z + RPoly(RatFunc(1L))).pow(2) ==
        RPoly::from_coeffs({RatFunc(1L), RatFunc(2L), RatFunc(1L)}));
  RPoly a = RPoly::from_coeffs({q, RatFunc(1L)});
  RPoly b = RPoly::from_coeffs({RatFunc(1L), q.inverse()});
  CHECK((a * b).derivative() ==
        a.derivative() * b + a * b.derivative());
}
