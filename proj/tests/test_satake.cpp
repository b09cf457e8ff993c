#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sextic/satake/satake.hpp"

using namespace sextic;

namespace {

IgusaInvariants random_igusa(std::mt19937_64& rng) {
  while (true) {
    IgusaInvariants I{oracle::random_rational(rng, 50), oracle::random_rational(rng, 50), oracle::random_rational(rng, 50),
                      oracle::random_rational(rng, 50)};
    if (I.I10 != 0 && I.I2 != 0) return I;
  }
}

SiegelForms random_siegel(std::mt19937_64& rng) {
  return {oracle::random_rational(rng, 30), oracle::random_rational(rng, 30), oracle::random_rational(rng, 30),
          oracle::random_rational(rng, 30)};
}

RationalPolynomial even_sextic() {
  const std::array<Rational, 6> roots{Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(3), Rational(-3)};
  return from_roots(roots);
}

}  // namespace

TEST_CASE("power sums from Igusa invariants") {
  const auto a = power_sums_from_igusa(IgusaInvariants{Rational(0), Rational(0), Rational(0), Rational(1)});
  CHECK(a.s == std::array<Rational, 6>{Rational(0), Rational(0), Rational(0), Rational(0), Rational(1215), Rational(0)});
  const auto b = power_sums_from_igusa(IgusaInvariants{Rational(0), Rational(1), Rational(0), Rational(0)});
  CHECK(b(2) == 3);
  CHECK(b(3) == 0);
  CHECK(b(4) == make_rational(9, 4));
  CHECK(b(5) == 0);
  CHECK(b(6) == make_rational(27, 16));
}

TEST_CASE("power sums invert") {
  std::mt19937_64 rng(1);
  const IgusaInvariants unit{Rational(0), Rational(0), Rational(0), Rational(1)};
  CHECK(igusa_from_power_sums(power_sums_from_igusa(unit)) == unit);
  for (int trial = 0; trial < 20; ++trial) {
    const auto I = random_igusa(rng);
    const auto s = power_sums_from_igusa(I);
    CHECK(5 * s(2) * s(3) - 12 * s(5) == -14580 * I.I10);
    CHECK(igusa_from_power_sums(s) == I);
    const auto sg = siegel_from_igusa(I);
    CHECK(power_sums_from_siegel(sg) == s);
  }
  PowerSums<Rational> bad{{Rational(0), Rational(12), Rational(1), Rational(36), Rational(5), Rational(0)}};
  CHECK_THROWS_AS(igusa_from_power_sums(bad), InversionSingular);
}

TEST_CASE("complete Bell polynomials") {
  std::mt19937_64 rng(4);
  std::array<Rational, 6> z;
  for (auto& v : z) v = oracle::random_rational(rng, 9);
  CHECK(complete_bell(1, z) == z[0]);
  CHECK(complete_bell(2, z) == z[0] * z[0] + z[1]);
  CHECK(complete_bell(3, z) == z[0] * z[0] * z[0] + 3 * z[0] * z[1] + z[2]);
  CHECK(complete_bell(4, z) ==
        pow(z[0], 4) + 6 * z[0] * z[0] * z[1] + 4 * z[0] * z[2] + 3 * z[1] * z[1] + z[3]);
  const Rational s2(7);
  const Rational s3(-2);
  const std::array<Rational, 6> zs{Rational(0), -s2, 2 * s3, Rational(0), Rational(0), Rational(0)};
  CHECK(complete_bell(1, zs) == 0);
  CHECK(complete_bell(2, zs) == -s2);
  CHECK(complete_bell(3, zs) == 2 * s3);
  CHECK_THROWS_AS(complete_bell(0, z), DomainError);
  CHECK_THROWS_AS(complete_bell(7, z), DomainError);
}

TEST_CASE("Satake sextic constructions") {
  const Rational s5(10);
  const Rational s6(-12);
  const auto f = satake_sextic(PowerSums<Rational>{{Rational(0), Rational(0), Rational(0), Rational(0), s5, s6}});
  CHECK(f == RationalPolynomial{Rational(2), Rational(-2), 0, 0, 0, 0, Rational(1)});

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto I = random_igusa(rng);
    const auto s = power_sums_from_igusa(I);
    const auto closed = satake_sextic_closed(s);
    CHECK(closed == satake_sextic_bell(s));
    CHECK(closed[4] == -s(2) / 2);
    CHECK(closed[5] == 0);
    CHECK(satake_sextic_siegel(siegel_from_igusa(I)) == closed);
  }
  const Rational c = make_rational(5, 7);
  const SiegelForms pure12{Rational(0), Rational(0), Rational(0), c};
  const auto g = satake_sextic_siegel(pure12);
  CHECK(g == RationalPolynomial{Rational(-power(2, 14) * power(3, 6) * c), 0, 0, 0, 0, 0, Rational(1)});
  CHECK(satake_sextic(power_sums_from_siegel(pure12)) == g);
  for (int trial = 0; trial < 10; ++trial) {
    const auto sg = random_siegel(rng);
    CHECK(satake_sextic(power_sums_from_siegel(sg)) == satake_sextic_siegel(sg));
  }
}

TEST_CASE("Satake sextic rejects power sums off the Igusa quartic") {
  auto s = power_sums_from_igusa(IgusaInvariants{Rational(3), Rational(2), Rational(-1), Rational(5)});
  auto off = s;
  off.s[3] += 1;
  CHECK_THROWS_AS(satake_sextic(off), IdentityViolation);
  auto shifted = s;
  shifted.s[0] = 1;
  CHECK_THROWS_AS(satake_sextic(shifted), IdentityViolation);
}

TEST_CASE("discriminant identity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const auto I = igusa_from_rosenhain(oracle::random_rosenhain(rng, 50));
    const auto rep = satake_discriminant_identity(I);
    CHECK(rep.holds);
    CHECK(rep.discriminant != 0);
    const auto f = satake_sextic(power_sums_from_igusa(I));
    CHECK(igusa_from_sextic(f).I10 == rep.discriminant);
  }
  for (int trial = 0; trial < 10; ++trial) CHECK(satake_discriminant_identity(random_igusa(rng)).holds);

  const auto even = satake_discriminant_identity(igusa_from_sextic(even_sextic()));
  CHECK(even.discriminant == 0);
  CHECK(even.Q == 0);

  const auto unit = satake_discriminant_identity(IgusaInvariants{Rational(0), Rational(0), Rational(0), Rational(1)});
  const Rational chi10 = Rational(-1) / power(2, 14);
  CHECK(unit.Q == power(2, 32) * power(3, 9) * power(5, 5) * pow(chi10, 6));
  CHECK(unit.discriminant == power(2, 52) * power(3, 21) * unit.Q);

  const auto I = igusa_from_rosenhain(RosenhainCurve{Rational(2), Rational(3), Rational(5)});
  auto f = satake_sextic(power_sums_from_igusa(I));
  f += RationalPolynomial{Rational(1)};
  CHECK_THROWS_AS(check_discriminant_identity(f, siegel_from_igusa(I)), IdentityViolation);
}

TEST_CASE("reconstruction from Satake roots") {
  const auto trip = satake_roundtrip(RosenhainCurve{Rational(2), Rational(3), Rational(5)});
  CHECK(trip.max_rel_err < 1e-8);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    const auto c = oracle::random_rosenhain(rng, 50);
    CHECK(satake_roundtrip(c).max_rel_err < 1e-8);
  }

  const auto& roots = trip.satake_roots;
  RootOrdering perm{5, 3, 1, 0, 2, 4};
  try {
    const auto l = reconstruct_from_satake_roots(roots, perm);
    const auto a = projective_signature(igusa_from_rosenhain(l[0], l[1], l[2]));
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(a[k] - trip.original[k]) <= 1e-8 * std::abs(trip.original[k]));
  } catch (const OrderingRejected&) {
  }

  const theta::PeriodMatrix tau(Complex(1.0, 2.0), Complex(0.0, 1.0 / 3.0), Complex(0.0, 1.5));
  const auto tc = theta::even_theta_constants(tau);
  const auto sc = theta::satake_from_theta(tc);
  const auto direct = theta::rosenhain_from_theta4(theta::theta4_from_satake(sc.x));
  const auto via = reconstruct_from_satake_roots(sc.x, RootOrdering{0, 1, 2, 3, 4, 5});
  CHECK(via == direct);

  CHECK_THROWS_AS(reconstruct_from_satake_roots(std::array<Complex, 6>{}, RootOrdering{0, 1, 2, 3, 4, 5}), DegeneratePoint);
  CHECK_THROWS_AS(reconstruct_from_satake_roots(roots, RootOrdering{0, 0, 2, 3, 4, 5}), DomainError);
  std::array<Complex, 6> unbalanced = roots;
  unbalanced[0] += 1.0;
  CHECK_THROWS_AS(reconstruct_from_satake_roots(unbalanced, RootOrdering{0, 1, 2, 3, 4, 5}), DomainError);
}

TEST_CASE("numeric closed loop through theta constants") {
  const theta::PeriodMatrix tau(Complex(1.0, 2.0), Complex(0.0, 1.0 / 3.0), Complex(0.0, 1.5));
  const auto loop = theta_closed_loop(tau);
  CHECK(loop.frobenius.passed);
  CHECK(loop.sum_residual <= 1e-12);
  CHECK(loop.quartic_residual <= 1e-9);
  CHECK(loop.fit.max_residual <= 1e-7);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(loop.lambda[i] - loop.lambda4[i]) <= 1e-9 * std::abs(loop.lambda[i]));
  CHECK_THROWS_AS(theta_closed_loop(theta::PeriodMatrix(Complex(0, 1), Complex(0, 0), Complex(0, 1))), DegeneratePoint);
}

TEST_CASE("map Phi") {
  const auto I = igusa_from_rosenhain(RosenhainCurve{Rational(2), Rational(3), Rational(5)});
  const auto res = phi_map(I);
  CHECK(res.j_image == res.oracle);
  // Independent route: power-sum construction at the original tuple.
  CHECK(absolute_invariants(igusa_from_sextic(satake_sextic(power_sums_from_igusa(I)))) == res.j_image);
  const auto& d = res.diagnostics;
  CHECK(d.chi10_relation);
  CHECK(d.chi12_relation);
  CHECK(d.q_relation);
  CHECK(d.proof_form);
  CHECK(d.j3_forms_agree);
  REQUIRE(d.N.has_value());
  CHECK(*d.N * *d.N == d.N_squared);

  const auto j = absolute_invariants(I);
  const Rational m = -j.j2 * j.j2 * j.j1 + 6 * j.j2 * j.j3 * j.j1 - 9 * j.j3 * j.j3 * j.j1 + j.j2 * j.j2 * j.j2 +
                     540 * j.j1 * j.j1;
  CHECK(phi_g1(j) == pow(m, 5));
  CHECK(phi_map(j).j_image == res.j_image);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const auto J = random_igusa(rng);
    const auto r = phi_map(J);
    CHECK(r.diagnostics.q_relation);
    CHECK(r.diagnostics.N.has_value());
  }

  CHECK_THROWS_AS(phi_map(igusa_from_sextic(even_sextic())), DivisorError);
  CHECK_THROWS_AS(phi_map(AbsoluteInvariants{Rational(0), Rational(1), Rational(1)}), DomainError);
  auto corrupted = res.j_image;
  corrupted.j2 += 1;
  CHECK_THROWS_AS(compare_phi_paths(corrupted, res.oracle), IdentityViolation);
}
