// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sextic/exactmath/roots.hpp"
#include "sextic/fibrations/fibrations.hpp"
#include "sextic/satake/satake.hpp"

using namespace sextic;

namespace {

using Counts = std::map<std::string, int>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<RosenhainCurve> triples(std::uint64_t seed, int n, long height) {
  std::mt19937_64 rng(seed);
  std::vector<RosenhainCurve> out;
  for (int i = 0; i < n; ++i) out.push_back(oracle::random_rosenhain(rng, height));
  return out;
}

const std::vector<RosenhainCurve>& twenty() {
  static const auto t = triples(20240101, 20, 50);
  return t;
}

const std::vector<RosenhainCurve>& ten() {
  static const auto t = triples(20240202, 10, 50);
  return t;
}

std::optional<Integer> exact_integer_root(const Integer& v, unsigned k) {
  if (v < 0 && k % 2 == 0) return std::nullopt;
  Integer a = abs(v);
  Integer r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
  if (v < 0) r = -r;
  return r;
}

std::optional<Rational> exact_root(const Rational& v, unsigned k) {
  const auto n = exact_integer_root(v.get_num(), k);
  const auto d = exact_integer_root(v.get_den(), k);
  if (!n || !d) return std::nullopt;
  return make_rational(*n, *d);
}

Outcome criterion1() {
  Outcome o;
  for (const auto& c : twenty()) {
    const auto I = igusa_from_rosenhain(c);
    const auto f = satake_sextic(power_sums_from_igusa(I));
    const Rational lhs = discriminant(f);
    const Rational rhs = power(2, 52) * power(3, 21) * q_polynomial(siegel_from_igusa(I));
    if (lhs != rhs) {
      o.pass = false;
      o.detail = "mismatch at lambda = (" + to_string(c.lambda1) + ", " + to_string(c.lambda2) + ", " +
                 to_string(c.lambda3) + ")";
      return o;
    }
  }
  o.detail = "20/20 exact";
  return o;
}

struct PhiSample {
  IgusaInvariants I;
  PhiResult r;
};

std::vector<PhiSample> phi_samples(int& skipped) {
  std::vector<PhiSample> out;
  skipped = 0;
  for (const auto& c : twenty()) {
    const auto I = igusa_from_rosenhain(c);
    if (I.I2 == 0 || phi_q(absolute_invariants(I)) == 0) {
      ++skipped;
      continue;
    }
    out.push_back({I, phi_map(I)});
  }
  return out;
}

Outcome criterion2() {
  Outcome o;
  int skipped = 0;
  std::vector<PhiSample> samples;
  try {
    samples = phi_samples(skipped);
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
  for (const auto& s : samples) {
    const auto j = absolute_invariants(s.I);
    const Rational q = phi_q(j);
    // Oracle path: Igusa invariants of the constructed Satake sextic.
    const auto oracle_j = absolute_invariants(igusa_from_sextic(satake_sextic(power_sums_from_igusa(s.I))));
    const AbsoluteInvariants poly{64 * phi_g1(j) / (729 * q), 4 * phi_g2(j) / (729 * q), phi_g3(j) / (729 * q)};
    if (!(poly == oracle_j)) return {false, "polynomial and oracle images differ"};
    const auto fifth = exact_root(Rational(oracle_j.j1 * 729 * q / 64), 5);
    if (!fifth || *fifth != phi_m(j)) return {false, "g1 is not m^5 on the oracle path"};
    const Rational Q = q_polynomial(siegel_from_igusa(s.I));
    if (Q * pow(s.I.I2, -30) != q * pow(j.j1, -15) / power(2, 63)) return {false, "denominator relation fails"};
  }
  o.detail = std::to_string(samples.size()) + " samples exact, " + std::to_string(skipped) + " skipped (q = 0 or I2 = 0)";
  return o;
}

Outcome criterion3() {
  int skipped = 0;
  for (const auto& c : twenty()) {
    const auto I = igusa_from_rosenhain(c);
    const SiegelForms s = siegel_from_igusa(I);
    const Rational Q = q_polynomial(s);
    if (Q == 0) {
      ++skipped;
      continue;
    }
    const auto f = satake_sextic_siegel(s);
    const Rational Qp = q_polynomial(siegel_from_igusa(igusa_from_sextic(f)));
    const Rational ratio = Qp / (power(2, 210) * power(3, 132) * pow(Q, 3));
    if (!exact_root(ratio, 2)) return {false, "ratio is not a square"};
  }
  return {true, std::to_string(20 - skipped) + "/20 squares, " + std::to_string(skipped) + " skipped (Q = 0)"};
}

Outcome criterion4() {
  const Counts kum23{{"I2", 6}, {"I5*", 1}, {"I1", 1}};
  const Counts alt{{"I1", 6}, {"I10*", 1}, {"I2", 1}};
  const Counts std_{{"I1", 5}, {"II*", 1}, {"III*", 1}};
  const Counts kum1{{"I2", 6}, {"I0*", 2}};
  for (const auto& c : ten()) {
    const auto I = igusa_from_rosenhain(c);
    const auto p = FibrationParams::from_igusa(I);
    const std::array<std::pair<WeierstrassModel, const Counts*>, 4> cases{{
        {kumfib2_model(I), &kum23},
        {alternate_model(p), &alt},
        {standard_model(p), &std_},
        {quartic_jacobian(kummer_quartic_model(c)), &kum1},
    }};
    for (const auto& [m, expected] : cases) {
      const auto census = classify_fibers(m);
      if (census.counts() != *expected || census.euler_sum != 24) {
        return {false, "unexpected census at lambda = (" + to_string(c.lambda1) + ", " + to_string(c.lambda2) + ", " +
                           to_string(c.lambda3) + ")"};
      }
    }
  }
  return {true, "10 triples x 4 fibrations, Euler sums 24"};
}

Outcome criterion5() {
  const std::array<Rational, 6> roots{Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(3), Rational(-3)};
  const auto even = igusa_from_sextic(from_roots(roots));
  if (q_polynomial(siegel_from_igusa(even)) != 0) return {false, "Q != 0 for the even sextic"};
  const auto p = FibrationParams::from_igusa(even);
  if (!degeneration_predicates(p).su2_enhancement) return {false, "su2 predicate false for the even sextic"};
  const auto rad = alternate_radicand(p);
  const auto twice = gcd(rad, rad.derivative());
  if (twice.degree() != 1) return {false, "radicand has no double root"};
  const Rational collision = -twice[0];
  bool collided = false;
  for (const auto& f : classify_fibers(alternate_model(p)).fibers) {
    if (f.type.name() == "I2" && f.location.exact && *f.location.exact == collision) collided = true;
  }
  if (!collided) return {false, "no I2 fiber at the collision point"};

  const auto ft = classify_fibers(alternate_model_ftheory(SiegelForms{Rational(1), Rational(2), Rational(0), Rational(3)}));
  if (ft.counts().count("I12*") != 1) return {false, "no I12* fiber for chi10 = 0"};

  for (const auto& c : ten()) {
    const auto I = igusa_from_rosenhain(c);
    const auto q = FibrationParams::from_igusa(I);
    if (pow(q.e, 3) * type_iii_polynomial(q) != type_iii_constant() * type_iii_siegel(siegel_from_igusa(I))) {
      return {false, "type-III identity fails"};
    }
  }
  return {true, "Q = 0 and I2 collision; I12* at chi10 = 0; type-III identity on 10 triples"};
}

Outcome criterion6() {
  const RationalPolynomial minus3t{Rational(0), Rational(-3)};
  for (const auto& c : ten()) {
    const auto I = igusa_from_rosenhain(c);
    const auto f = satake_sextic(power_sums_from_igusa(I)).compose(minus3t);
    const auto rad = alternate_radicand(FibrationParams::from_igusa(I));
    const auto delta = short_form(alternate_model(FibrationParams::from_igusa(I))).delta;
    if (f != Rational(729) * kumfib2_model(I).B) return {false, "KumFib2 B differs from the Satake sextic"};
    if (f != Rational(729) * rad) return {false, "radicand differs from the Satake sextic"};
    if (divmod(delta, rad).second != RationalPolynomial{}) return {false, "radicand does not divide Delta"};
  }
  return {true, "10/10 exact (f(-3t) = 729 B = 729 radicand)"};
}

Outcome criterion7() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> diag(0.8, 2.0);
  std::uniform_real_distribution<double> re(-0.5, 0.5);
  std::uniform_real_distribution<double> off(-0.25, 0.25);
  double frob = 0, sum = 0, quart = 0, fit = 0;
  for (int i = 0; i < 5; ++i) {
    const theta::PeriodMatrix tau({re(rng), diag(rng)}, {re(rng), off(rng)}, {re(rng), diag(rng)});
    const auto loop = theta_closed_loop(tau, 12, 1e-10);
    frob = std::max({frob, loop.frobenius.max_identity, loop.frobenius.max_reduction});
    sum = std::max(sum, loop.sum_residual);
    quart = std::max(quart, loop.quartic_residual);
    fit = std::max(fit, loop.fit.max_residual);
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "frobenius %.2e, sum %.2e, s2^2-4s4 %.2e, rescaling fit %.2e", frob, sum, quart, fit);
  return {frob <= 1e-10 && sum <= 1e-12 && quart <= 1e-9 && fit <= 1e-7, buf};
}

Outcome criterion8() {
  double worst = 0;
  for (const auto& c : ten()) worst = std::max(worst, satake_roundtrip(c).max_rel_err);
  char buf[100];
  std::snprintf(buf, sizeof buf, "max relative error %.2e over 10 triples", worst);
  return {worst <= 1e-8, buf};
}

Outcome criterion9() {
  for (const auto& c : ten()) {
    if (!(sextic_recovery_limit(c) == rosenhain_curve_equation(c))) return {false, "limit differs from eta^2 - F(xi)"};
  }
  return {true, "10/10 exact"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "discriminant identity disc(f) = 2^52 3^21 Q", 10, criterion1},
      {2, "dual-path equality of the moduli map", 30, criterion2},
      {3, "perfect-square property of Q(tau')", 10, criterion3},
      {4, "fiber census of the four fibrations", 30, criterion4},
      {5, "degeneration corollaries", 10, criterion5},
      {6, "Satake positions of the I2 and I1 fibers", 5, criterion6},
      {7, "numeric theta loop", 20, criterion7},
      {8, "reconstruction round trip", 20, criterion8},
      {9, "sextic recovery limit", 5, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.detail += " (over time budget)";
    }
    if (!o.pass) ++failures;
    std::printf("%-4s criterion %d: %s [%.2fs / %.0fs] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_s,
                o.detail.c_str());
  }
  std::printf(
      "DOC  criterion 10: not reproduced by design: the degree-16 property of the moduli map, the Mordell-Weil groups "
      "of the fibrations and the physics statements; criteria 1-9 stand in for them\n");
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
