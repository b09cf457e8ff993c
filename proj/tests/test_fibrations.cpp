#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sextic/exactmath/roots.hpp"
#include "sextic/fibrations/fibrations.hpp"
#include "sextic/satake/satake.hpp"

using namespace sextic;

namespace {

using Counts = std::map<std::string, int>;

FibrationParams random_params(std::mt19937_64& rng) {
  while (true) {
    FibrationParams p{oracle::random_rational(rng, 20), oracle::random_rational(rng, 20),
                      oracle::random_rational(rng, 20), oracle::random_rational(rng, 20),
                      oracle::random_rational(rng, 20)};
    if (p.e != 0 && p.c != 0) return p;
  }
}

// Parameters for which (x, y) lies on the alternate fiber over t: b is solved
// from the curve equation.
FibrationParams params_through(std::mt19937_64& rng, const Rational& t, const Rational& x, const Rational& y) {
  FibrationParams p = random_params(rng);
  p.b = (y * y - x * x * x - p.e * (p.c * t + p.d) * x) / (x * x) - t * t * t - p.a * t;
  return p;
}

RationalPolynomial even_sextic() {
  const std::array<Rational, 6> roots{Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(3), Rational(-3)};
  return from_roots(roots);
}

}  // namespace

TEST_CASE("Kodaira table") {
  CHECK(kodaira_type({0, 0, 3}).name() == "I3");
  CHECK(kodaira_type({2, 3, 11}).name() == "I5*");
  CHECK(kodaira_type({2, 3, 6}).name() == "I0*");
  CHECK(kodaira_type({3, 4, 6}).name() == "I0*");
  CHECK(kodaira_type({1, 1, 2}).name() == "II");
  CHECK(kodaira_type({1, 2, 3}).name() == "III");
  CHECK(kodaira_type({2, 2, 4}).name() == "IV");
  CHECK(kodaira_type({3, 4, 8}).name() == "IV*");
  CHECK(kodaira_type({3, 5, 9}).name() == "III*");
  CHECK(kodaira_type({4, 5, 10}).name() == "II*");
  CHECK(kodaira_type({kInfiniteOrder, 5, 10}).name() == "II*");
  CHECK(kodaira_type({0, 0, 0}).name() == "I0");
  CHECK_THROWS_AS(kodaira_type({4, 6, 12}), NonMinimalModel);
  CHECK_THROWS_AS(kodaira_type({1, 1, 5}), NonMinimalModel);

  CHECK(KodairaType{KodairaKind::IStar, 10}.euler() == 16);
  CHECK(KodairaType{KodairaKind::IIStar, 0}.euler() == 10);
  CHECK(KodairaType{KodairaKind::I, 2}.euler() == 2);
}

TEST_CASE("short form") {
  const auto zero = short_form(WeierstrassModel{});
  CHECK(zero.g2.is_zero());
  CHECK(zero.g3.is_zero());

  WeierstrassModel m;
  m.B = RationalPolynomial{Rational(1)};
  const auto s = short_form(m);
  CHECK(s.delta.degree() == 0);
  CHECK(s.delta[0] != 0);

  // j is unchanged by completing the cube.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5; ++i) {
    const Rational a2 = oracle::random_rational(rng, 30);
    const Rational a4 = oracle::random_rational(rng, 30);
    const Rational a6 = oracle::random_rational(rng, 30);
    WeierstrassModel w{RationalPolynomial{a2}, RationalPolynomial{a4}, RationalPolynomial{a6}};
    const auto f = short_form(w);
    if (f.delta.is_zero()) continue;
    const Rational j = 1728 * f.g2[0] * f.g2[0] * f.g2[0] / f.delta[0];
    CHECK(j == oracle::j_invariant(a2, a4, a6));
  }

  const auto alt = alternate_model(FibrationParams::from_igusa(igusa_from_rosenhain(
      RosenhainCurve{Rational(2), Rational(3), Rational(5)})));
  const auto sa = short_form(alt);
  CHECK(sa.g2.degree() <= 8);
  CHECK(sa.g3.degree() <= 12);
}

TEST_CASE("classification of a rational elliptic surface") {
  // y^2 = x^3 + t x + t: g2 = -4t, g3 = -4t, Delta = -16 t^2 (4t + 27).
  WeierstrassModel m;
  m.B = RationalPolynomial{Rational(0), Rational(1)};
  m.C = RationalPolynomial{Rational(0), Rational(1)};
  const auto census = classify_fibers(m);
  CHECK(census.weight == 1);
  CHECK(census.euler_sum == 12);
  REQUIRE(census.fibers.size() == 3);
  bool zero = false, node = false, inf = false;
  for (const auto& f : census.fibers) {
    if (f.location.at_infinity) {
      inf = true;
      CHECK(f.type.name() == "III*");
      CHECK(f.orders == VanishingOrders{3, 5, 9});
    } else if (*f.location.exact == 0) {
      zero = true;
      CHECK(f.type.name() == "II");
      CHECK(f.orders == VanishingOrders{1, 1, 2});
    } else {
      node = *f.location.exact == make_rational(-27, 4);
      CHECK(f.type.name() == "I1");
    }
  }
  CHECK((zero && node && inf));

  WeierstrassModel dead;
  CHECK_THROWS_AS(classify_fibers(dead), DomainError);
  // Forcing the K3 weight makes the point at infinity non-minimal.
  m.weight = 2;
  CHECK_THROWS_AS(classify_fibers(m), NonMinimalModel);
}

TEST_CASE("KumFib2 model") {
  const auto m = kumfib2_model(IgusaInvariants{Rational(0), Rational(0), Rational(0), Rational(1)});
  CHECK(m.B == RationalPolynomial{Rational(0), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0),
                                  Rational(1)});

  std::mt19937_64 rng(21);
  for (int i = 0; i < 5; ++i) {
    const auto c = oracle::random_rosenhain(rng, 25);
    const auto I = igusa_from_rosenhain(c);
    const auto k = kumfib2_model(I);
    const auto f = satake_sextic(power_sums_from_igusa(I));
    CHECK(f.compose(RationalPolynomial{Rational(0), Rational(-3)}) == Rational(729) * k.B);
    CHECK(k.B == alternate_radicand(FibrationParams::from_igusa(I)));
    CHECK(classify_fibers(k).counts() == Counts{{"I2", 6}, {"I5*", 1}, {"I1", 1}});
  }
}

TEST_CASE("alternate model") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 5; ++i) {
    const auto c = oracle::random_rosenhain(rng, 25);
    const auto p = FibrationParams::from_igusa(igusa_from_rosenhain(c));
    const auto m = alternate_model(p);
    const auto s = short_form(m);
    const RationalPolynomial ctd{p.d, p.c};
    CHECK(s.delta == Rational(16 * p.e * p.e) * (ctd * ctd * alternate_radicand(p)));
    const auto census = classify_fibers(m);
    CHECK(census.counts() == Counts{{"I1", 6}, {"I10*", 1}, {"I2", 1}});
    CHECK(census.euler_sum == 24);
    const auto rad = alternate_radicand(p);
    for (const auto& f : census.fibers) {
      if (f.location.at_infinity) CHECK(f.type.name() == "I10*");
      if (f.type.name() == "I2") CHECK(*f.location.exact == p.d);
      if (f.type.name() != "I1") continue;
      if (f.location.exact) {
        CHECK(rad(*f.location.exact) == 0);
      } else {
        CHECK(divmod(rad, f.location.bundle).second.is_zero());
        CHECK(relative_residual(to_complex(rad), f.location.numeric) < 1e-9);
      }
    }
  }

  // Rational Satake roots give exact I1 positions t = -x/3.
  const auto I235 = igusa_from_rosenhain(RosenhainCurve{Rational(2), Rational(3), Rational(5)});
  const auto f235 = satake_sextic(power_sums_from_igusa(I235));
  int exact_nodes = 0;
  for (const auto& f : classify_fibers(alternate_model(FibrationParams::from_igusa(I235))).fibers) {
    if (f.type.name() != "I1") continue;
    REQUIRE(f.location.exact);
    CHECK(f235(Rational(-3 * *f.location.exact)) == 0);
    ++exact_nodes;
  }
  CHECK(exact_nodes == 6);

  const auto census = classify_fibers(alternate_model_ftheory(SiegelForms{Rational(1), Rational(2), Rational(0), Rational(3)}));
  CHECK(census.counts() == Counts{{"I1", 6}, {"I12*", 1}});

  // Same model through the dictionary.
  const IgusaInvariants I = igusa_from_rosenhain(RosenhainCurve{Rational(2), Rational(3), Rational(5)});
  const auto ft = alternate_model_ftheory(siegel_from_igusa(I));
  const auto al = alternate_model(FibrationParams::from_igusa(I));
  CHECK(classify_fibers(ft).counts() == classify_fibers(al).counts());
}

TEST_CASE("standard model") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 5; ++i) {
    const auto p = FibrationParams::from_igusa(igusa_from_rosenhain(oracle::random_rosenhain(rng, 25)));
    const auto census = classify_fibers(standard_model(p));
    CHECK(census.counts() == Counts{{"I1", 5}, {"II*", 1}, {"III*", 1}});
    CHECK(standard_alternate_transform_holds(p));
  }
  auto p = random_params(rng);
  CHECK(standard_alternate_transform_holds(p));
  p.e = 0;
  CHECK_THROWS_AS(standard_alternate_transform_holds(p), DomainError);
  CHECK_THROWS_AS(classify_fibers(standard_model(p)), NonMinimalModel);
}

TEST_CASE("Kummer quartic model and its Jacobian") {
  std::mt19937_64 rng(24);
  std::vector<RosenhainCurve> curves{{Rational(2), Rational(3), Rational(5)}};
  for (int i = 0; i < 4; ++i) curves.push_back(oracle::random_rosenhain(rng, 25));
  for (const auto& c : curves) {
    const auto q = kummer_quartic_model(c);
    const auto jac = quartic_jacobian(q);
    const auto census = classify_fibers(jac);
    CHECK(census.counts() == Counts{{"I2", 6}, {"I0*", 2}});

    // Fiberwise j against the cross ratio of the quartic roots (mu^2 + t) / mu.
    for (const Rational t : {Rational(7), make_rational(-5, 3), make_rational(11, 2)}) {
      std::array<Rational, 4> X;
      const std::array<Rational, 4> mu{Rational(1), c.lambda1, c.lambda2, c.lambda3};
      for (std::size_t k = 0; k < 4; ++k) X[k] = (mu[k] * mu[k] + t) / mu[k];
      const Rational expected = oracle::j_from_branch_points(X[0], X[1], X[2], X[3]);
      CHECK(oracle::j_invariant(Rational(0), jac.B(t), jac.C(t)) == expected);
    }

    // The quartic is K = 0 at Y = 0.
    const auto K = kummer_polynomial(c);
    for (const Rational X : {Rational(2), make_rational(1, 3)}) {
      const Rational t(3);
      Rational qv(0);
      for (std::size_t k = 0; k < 5; ++k) qv += q.coefficients[k](t) * pow(X, static_cast<int>(k));
      CHECK(K.evaluate({Rational(0), X, t}) == -qv);
    }
  }
  CHECK_THROWS_AS(kummer_quartic_model(RosenhainCurve{Rational(2), Rational(2), Rational(5)}), DomainError);
}

TEST_CASE("sextic recovery limit") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 5; ++i) {
    const auto c = oracle::random_rosenhain(rng, 40);
    CHECK(sextic_recovery_limit(c) == rosenhain_curve_equation(c));
  }
}

TEST_CASE("isogeny, dual isogeny and duplication") {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 8; ++i) {
    const Rational t = oracle::random_rational(rng, 9);
    Rational x = oracle::random_rational(rng, 9);
    if (x == 0) x = 1;
    Rational y = oracle::random_rational(rng, 9);
    if (y == 0) y = 2;
    const auto p = params_through(rng, t, x, y);
    const auto alt = alternate_model(p);
    const EllipticPoint P{x, y};
    REQUIRE(fiber_residual(alt, P, t) == 0);

    const auto Q = isogeny(P, t, p);
    CHECK(fiber_residual(isogenous_model(p), Q, t) == 0);
    const auto R = dual_isogeny(Q, t, p);
    CHECK(fiber_residual(alt, R, t) == 0);
    CHECK(R.x == oracle::doubled_x(alt.A(t), alt.B(t), x, y));

    const auto N = nikulin_involution(P, t, p);
    CHECK(fiber_residual(alt, N, t) == 0);
    CHECK(nikulin_involution(N, t, p) == P);
  }
  const auto p = random_params(rng);
  CHECK(isogeny({Rational(0), Rational(0)}, Rational(1), p).infinity);
  CHECK(dual_isogeny({Rational(0), Rational(0)}, Rational(1), p).infinity);
  CHECK(nikulin_involution({Rational(0), Rational(0)}, Rational(1), p).infinity);
  CHECK(nikulin_involution(EllipticPoint::at_infinity(), Rational(1), p) == EllipticPoint{Rational(0), Rational(0)});
}

TEST_CASE("Nikulin fixed points") {
  const auto p = FibrationParams::from_igusa(igusa_from_rosenhain(RosenhainCurve{Rational(2), Rational(3), Rational(5)}));
  const auto fixed = nikulin_fixed_points(p);
  CHECK(fixed.size() == 6);
  for (const auto& f : fixed) {
    const Complex A = f.t * f.t * f.t + to_complex(p.a) * f.t + to_complex(p.b);
    const Complex B = to_complex(p.e) * (to_complex(p.c) * f.t + to_complex(p.d));
    const double scale = std::abs(B) + std::abs(A * f.x) + std::abs(f.x * f.x);
    CHECK(std::abs(f.x * f.x - B) / scale < 1e-9);
    CHECK(std::abs(f.x * f.x + A * f.x + B) / scale < 1e-9);
  }

  // x^2 = e(ct + d) with y != 0 is not fixed: y changes sign.
  const Rational t(4);
  const Rational B = p.e * (p.c * t + p.d);
  const auto root = rational_sqrt(B);
  if (root) {
    const EllipticPoint P{*root, Rational(1)};
    const auto N = nikulin_involution(P, t, p);
    CHECK(N.x == P.x);
    CHECK(N.y == -P.y);
  }
}

TEST_CASE("degeneration predicates") {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 6; ++i) {
    const auto p = random_params(rng);
    CHECK(discriminant(alternate_radicand(p)) == Rational(kQvanishConstant) * pow(p.e, 3) * qvanish_bracket(p));
  }
  for (int i = 0; i < 6; ++i) {
    const auto I = igusa_from_rosenhain(oracle::random_rosenhain(rng, 30));
    const auto p = FibrationParams::from_igusa(I);
    CHECK(pow(p.e, 3) * type_iii_polynomial(p) == type_iii_constant() * type_iii_siegel(siegel_from_igusa(I)));
  }

  const auto generic = igusa_from_rosenhain(RosenhainCurve{Rational(2), Rational(3), Rational(5)});
  const auto fg = degeneration_predicates(FibrationParams::from_igusa(generic));
  CHECK_FALSE(fg.su2_enhancement);
  CHECK_FALSE(fg.type_III);
  CHECK_FALSE(fg.so32_enhancement);
  const auto sg = degeneration_predicates(siegel_from_igusa(generic));
  CHECK_FALSE(sg.su2_enhancement);
  CHECK_FALSE(sg.type_III);
  CHECK_FALSE(sg.so32_enhancement);

  const auto even = igusa_from_sextic(even_sextic());
  const auto pe = FibrationParams::from_igusa(even);
  CHECK(degeneration_predicates(pe).su2_enhancement);
  CHECK(degeneration_predicates(siegel_from_igusa(even)).su2_enhancement);
  const auto census = classify_fibers(alternate_model(pe));
  CHECK(census.counts() == Counts{{"I1", 4}, {"I2", 2}, {"I10*", 1}});
  // One I2 sits over ct + d = 0, the other over the double root of the radicand.
  const auto rad = alternate_radicand(pe);
  const auto twice = gcd(rad, rad.derivative());
  REQUIRE(twice.degree() == 1);
  const Rational collision = -twice[0];
  int near_d = 0, near_collision = 0;
  for (const auto& f : census.fibers) {
    if (f.type.name() != "I2") continue;
    if (std::abs(f.location.numeric - to_complex(pe.d)) < 1e-8) ++near_d;
    if (std::abs(f.location.numeric - to_complex(collision)) < 1e-8) ++near_collision;
  }
  CHECK(near_d == 1);
  CHECK(near_collision == 1);

  auto pz = random_params(rng);
  pz.e = 0;
  CHECK(degeneration_predicates(pz).so32_enhancement);
  const auto sz = degeneration_predicates(SiegelForms{Rational(1), Rational(2), Rational(0), Rational(3)});
  CHECK(sz.so32_enhancement);
  CHECK_FALSE(sz.type_III);
}
