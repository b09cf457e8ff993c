#include "sextic/satake/satake.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tables.hpp"

namespace sextic {

PowerSums<Rational> power_sums_from_siegel(const SiegelForms& f) {
  const Rational s2 = 12 * f.psi4;
  const Rational s3 = 12 * f.psi6;
  const Rational s5 = 60 * f.psi4 * f.psi6 - 1215 * power(2, 14) * f.chi10;
  const Rational s6 = 108 * f.psi4 * f.psi4 * f.psi4 + 24 * f.psi6 * f.psi6 + 729 * 3 * power(2, 15) * f.chi12;
  return {{Rational(0), s2, s3, s2 * s2 / 4, s5, s6}};
}

IgusaInvariants igusa_from_power_sums(const PowerSums<Rational>& p) {
  const Rational& s2 = p.s[1];
  const Rational& s3 = p.s[2];
  const Rational& s5 = p.s[4];
  const Rational& s6 = p.s[5];
  const Rational den = 5 * s2 * s3 - 12 * s5;
  if (is_zero(den)) throw InversionSingular("5 s2 s3 - 12 s5 = 0");
  return {
      Rational(5, 3) * (3 * s2 * s2 * s2 + 8 * s3 * s3 - 48 * s6) / den,
      s2 / 3,
      (15 * s2 * s2 * s2 * s2 + 10 * s2 * s3 * s3 - 240 * s2 * s6 + 72 * s3 * s5) / (27 * den),
      -s2 * s3 / 2916 + s5 / 1215,
  };
}

Rational complete_bell(int i, const std::array<Rational, 6>& z) {
  if (i < 1 || i > 6) throw DomainError("complete Bell polynomial order must be in 1..6");
  // B_(n+1) = sum_k C(n, k) B_(n-k) z_(k+1).
  std::array<Rational, 7> B;
  B[0] = 1;
  for (int n = 0; n < i; ++n) {
    Rational acc(0);
    Rational binom(1);
    for (int k = 0; k <= n; ++k) {
      acc += binom * B[static_cast<std::size_t>(n - k)] * z[static_cast<std::size_t>(k)];
      binom = binom * (n - k) / (k + 1);
    }
    B[static_cast<std::size_t>(n + 1)] = acc;
  }
  return B[static_cast<std::size_t>(i)];
}

RationalPolynomial satake_sextic_bell(const PowerSums<Rational>& p) {
  const auto& s = p.s;
  const std::array<Rational, 6> z{s[0], -s[1], 2 * s[2], -6 * s[3], 24 * s[4], -120 * s[5]};
  std::vector<Rational> c(7);
  c[6] = 1;
  Rational factorial(1);
  for (int i = 1; i <= 6; ++i) {
    factorial *= i;
    const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
    c[static_cast<std::size_t>(6 - i)] = sign * complete_bell(i, z) / factorial;
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial satake_sextic_closed(const PowerSums<Rational>& p) {
  const Rational& s2 = p.s[1];
  const Rational& s3 = p.s[2];
  const Rational& s5 = p.s[4];
  const Rational& s6 = p.s[5];
  const RationalPolynomial cubic{Rational(-s3 / 6), Rational(-s2 / 4), Rational(0), Rational(1)};
  const RationalPolynomial rest{Rational(s2 * s2 * s2 / 96 + s3 * s3 / 36 - s6 / 6), Rational(s2 * s3 / 12 - s5 / 5)};
  return cubic * cubic + rest;
}

RationalPolynomial satake_sextic(const PowerSums<Rational>& s) {
  auto closed = satake_sextic_closed(s);
  if (!(closed == satake_sextic_bell(s)))
    throw IdentityViolation("Bell-polynomial and closed-form Satake sextics differ (power sums off the Igusa quartic)");
  return closed;
}

RationalPolynomial satake_sextic_siegel(const SiegelForms& s) {
  const RationalPolynomial cubic{Rational(-2 * s.psi6), Rational(-3 * s.psi4), Rational(0), Rational(1)};
  const Rational k = power(2, 14) * power(3, 5);
  const RationalPolynomial rest{Rational(-3 * k * s.chi12), Rational(k * s.chi10)};
  return cubic * cubic + rest;
}

DiscriminantIdentity check_discriminant_identity(const RationalPolynomial& f, const SiegelForms& s) {
  DiscriminantIdentity out{discriminant(f), q_polynomial(s), false};
  out.holds = out.discriminant == power(2, 52) * power(3, 21) * out.Q;
  if (!out.holds) throw IdentityViolation("discriminant of the Satake sextic differs from 2^52 3^21 Q");
  return out;
}

DiscriminantIdentity satake_discriminant_identity(const IgusaInvariants& I) {
  return check_discriminant_identity(satake_sextic(power_sums_from_igusa(I)), siegel_from_igusa(I));
}

theta::RosenhainTriple reconstruct_from_satake_roots(const std::array<Complex, 6>& roots, const RootOrdering& ordering,
                                                     double min_denominator) {
  std::array<bool, 6> seen{};
  for (int k : ordering) {
    if (k < 0 || k > 5 || seen[static_cast<std::size_t>(k)]) throw DomainError("ordering must be a permutation of 0..5");
    seen[static_cast<std::size_t>(k)] = true;
  }
  double scale = 0.0;
  Complex sum(0.0, 0.0);
  for (const auto& x : roots) {
    scale = std::max(scale, std::abs(x));
    sum += x;
  }
  if (scale == 0.0) throw DegeneratePoint("all Satake roots vanish");
  if (std::abs(sum) > 1e-8 * scale) throw DomainError("Satake roots do not sum to zero");
  std::array<Complex, 6> x;
  for (std::size_t k = 0; k < 6; ++k) x[k] = roots[static_cast<std::size_t>(ordering[k])];
  try {
    return theta::rosenhain_from_theta4(theta::theta4_from_satake(x), min_denominator);
  } catch (const DegeneratePoint&) {
    throw OrderingRejected("Picard denominator vanishes for this labelling of the Satake roots");
  }
}

Reconstruction reconstruct_with_search(const std::array<Complex, 6>& roots, double min_denominator) {
  RootOrdering ordering{0, 1, 2, 3, 4, 5};
  int attempts = 0;
  do {
    ++attempts;
    try {
      return {reconstruct_from_satake_roots(roots, ordering, min_denominator), ordering, attempts};
    } catch (const OrderingRejected&) {
    }
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  throw DegeneratePoint("every labelling of the Satake roots makes a Picard denominator vanish");
}

std::array<Complex, 3> projective_signature(const IgusaTuple<Complex>& I) {
  if (I.I10 == Complex(0.0, 0.0)) throw DomainError("I10 = 0");
  if (I.I2 != Complex(0.0, 0.0)) {
    const auto j = absolute_invariants(I);
    return {j.j1, j.j2, j.j3};
  }
  const Complex i4sq = I.I4 * I.I4;
  return {I.I4 * I.I6 / I.I10, i4sq * i4sq * I.I4 / (I.I10 * I.I10), Complex(0.0, 0.0)};
}

namespace {

// floor(log2 |r|) up to one unit.
double relative_distance(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b) {
  double top = 0.0;
  for (const auto& v : b) top = std::max(top, std::abs(v));
  double err = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double den = std::abs(b[k]) > 0.0 ? std::abs(b[k]) : top;
    if (den == 0.0) continue;
    err = std::max(err, std::abs(a[k] - b[k]) / den);
  }
  return err;
}

}  // namespace

RoundTrip satake_roundtrip(const RosenhainCurve& c, const RootOptions& options) {
  if (!c.valid()) throw DomainError("Rosenhain roots must be distinct and different from 0 and 1");
  const auto I = igusa_from_rosenhain(c);
  const auto f = satake_sextic(power_sums_from_igusa(I));
  if (is_zero(discriminant(f))) throw DivisorError("the Satake sextic has a repeated root (Q = 0)");
  const auto roots = complex_roots(f, options);

  RoundTrip out;
  std::copy(roots.begin(), roots.end(), out.satake_roots.begin());
  out.reconstruction = reconstruct_with_search(out.satake_roots);
  const auto& l = out.reconstruction.lambda;
  out.recovered = projective_signature(igusa_from_rosenhain(l[0], l[1], l[2]));
  out.original = projective_signature(
      IgusaTuple<Complex>{to_complex(I.I2), to_complex(I.I4), to_complex(I.I6), to_complex(I.I10)});
  out.max_rel_err = relative_distance(out.recovered, out.original);
  return out;
}

RescalingFit fit_power_sum_rescaling(const PowerSums<Complex>& theta_sums, const PowerSums<Complex>& model) {
  if (model(2) == Complex(0.0, 0.0)) throw DomainError("rescaling fit needs s2 != 0");
  const Complex r4 = theta_sums(2) / model(2);
  RescalingFit best;
  best.max_residual = std::numeric_limits<double>::infinity();
  for (double sign : {1.0, -1.0}) {
    RescalingFit fit;
    fit.r2 = sign * std::sqrt(r4);
    constexpr std::array<int, 4> js{2, 3, 5, 6};
    for (std::size_t k = 0; k < js.size(); ++k) {
      const int j = js[k];
      const Complex predicted = std::pow(fit.r2, j) * model(j);
      const double den = std::max(std::abs(theta_sums(j)), std::abs(predicted));
      fit.residuals[k] = den == 0.0 ? 0.0 : std::abs(theta_sums(j) - predicted) / den;
    }
    fit.max_residual = *std::max_element(fit.residuals.begin(), fit.residuals.end());
    if (fit.max_residual < best.max_residual) best = fit;
  }
  return best;
}

ThetaLoop theta_closed_loop(const theta::PeriodMatrix& tau, int radius, double frobenius_tol) {
  auto tc = theta::even_theta_constants(tau, radius);
  ThetaLoop out{tc, theta::check_frobenius(tc, frobenius_tol), theta::satake_from_theta(tc), {}, 0.0, 0.0, {}, {}, {}};
  double scale = 0.0;
  for (const auto& x : out.satake.x) scale = std::max(scale, std::abs(x));
  for (int j = 1; j <= 6; ++j) out.power_sums.s[static_cast<std::size_t>(j - 1)] = out.satake.power_sum(j);
  out.sum_residual = scale == 0.0 ? 0.0 : std::abs(out.satake.sum()) / scale;
  const Complex s2 = out.power_sums(2);
  out.quartic_residual = std::abs(s2 * s2 - 4.0 * out.power_sums(4)) / std::abs(s2 * s2);
  out.lambda = theta::rosenhain_from_theta(tc);
  out.lambda4 = theta::rosenhain_from_theta4(tc.fourth_powers());
  const auto& l = out.lambda;
  out.fit = fit_power_sum_rescaling(out.power_sums, power_sums_from_igusa(igusa_from_rosenhain(l[0], l[1], l[2])));
  return out;
}

namespace {

std::array<Rational, 3> jvec(const AbsoluteInvariants& j) { return {j.j1, j.j2, j.j3}; }

}  // namespace

Rational phi_q(const AbsoluteInvariants& j) { return detail::evaluate_terms(detail::kPhiQ, jvec(j)); }

Rational phi_m(const AbsoluteInvariants& j) {
  return -j.j2 * j.j2 * j.j1 + 6 * j.j2 * j.j3 * j.j1 - 9 * j.j3 * j.j3 * j.j1 + j.j2 * j.j2 * j.j2 + 540 * j.j1 * j.j1;
}

Rational phi_g1(const AbsoluteInvariants& j) { return pow(phi_m(j), 5); }

Rational phi_g2(const AbsoluteInvariants& j) {
  return detail::evaluate_terms(detail::kPhiK, jvec(j)) * pow(phi_m(j), 3);
}

Rational phi_g3(const AbsoluteInvariants& j) {
  return detail::evaluate_terms(detail::kPhiG3, jvec(j)) * pow(phi_m(j), 2);
}

void compare_phi_paths(const AbsoluteInvariants& polynomial_path, const AbsoluteInvariants& oracle_path) {
  if (!(polynomial_path == oracle_path))
    throw IdentityViolation("appendix polynomials and the Satake-sextic oracle give different images");
}

namespace {

PhiResult phi_impl(const AbsoluteInvariants& j, const IgusaInvariants& I) {
  if (is_zero(j.j1)) throw DomainError("the map needs j1 != 0");
  PhiResult out;
  out.q = phi_q(j);
  if (is_zero(out.q)) throw DivisorError("q(j1, j2, j3) = 0: the point lies on the vanishing divisor of chi35");

  const Rational c729(729);
  out.j_image = {64 * phi_g1(j) / (c729 * out.q), 4 * phi_g2(j) / (c729 * out.q), phi_g3(j) / (c729 * out.q)};

  const IgusaInvariants rep = igusa_representative(j);
  const SiegelForms sg = siegel_from_igusa(rep);
  out.sextic = satake_sextic_siegel(sg);
  const IgusaInvariants image = igusa_from_sextic(out.sextic);
  out.oracle = absolute_invariants(image);
  compare_phi_paths(out.j_image, out.oracle);

  auto& d = out.diagnostics;
  const SiegelForms sp = siegel_from_igusa(image);
  d.psi4_prime = sp.psi4;
  d.psi6_prime = sp.psi6;
  d.chi10_prime = sp.chi10;
  d.chi12_prime = sp.chi12;
  d.K = sp.psi4 / (power(2, 4) * power(3, 6));
  d.L = -sp.psi6 / (power(2, 6) * power(3, 9));
  d.M = sg.psi4 * sg.psi4 * sg.psi4 - sg.psi6 * sg.psi6 + power(2, 13) * power(3, 4) * 5 * sg.chi12;
  d.Q = q_polynomial(sg);
  d.Q_prime = q_polynomial(sp);
  d.chi10_relation = d.chi10_prime == -power(2, 38) * power(3, 21) * d.Q;
  d.chi12_relation = d.chi12_prime == power(2, 40) * power(3, 23) * d.Q * d.M;
  d.N_squared = d.Q_prime / (power(2, 210) * power(3, 132) * pow(d.Q, 3));
  d.N = rational_sqrt(d.N_squared);

  const Rational QI = q_polynomial(siegel_from_igusa(I));
  d.q_relation = QI * pow(I.I2, -30) == out.q * pow(j.j1, -15) / power(2, 63);

  const Rational m = power(2, 6) * pow(j.j1, 3) * d.M;
  const Rational k = power(2, 12) * pow(j.j1, 6) * d.K;
  const Rational l = power(2, 18) * pow(j.j1, 9) * d.L;
  const auto jv = jvec(j);
  d.proof_form = m == phi_m(j) && k == detail::evaluate_terms(detail::kPhiK, jv) &&
                 (l + 4 * k * m) / 2187 == detail::evaluate_terms(detail::kPhiG3, jv) / 729;
  d.j3_proof = m * m * (l + 4 * k * m) / (2187 * out.q);
  d.j3_forms_agree = d.j3_proof == out.j_image.j3;
  return out;
}

}  // namespace

PhiResult phi_map(const AbsoluteInvariants& j) {
  if (is_zero(j.j1)) throw DomainError("the map needs j1 != 0");
  return phi_impl(j, igusa_representative(j));
}

PhiResult phi_map(const IgusaInvariants& I) {
  if (is_zero(I.I2)) throw DomainError("the map needs I2 != 0");
  return phi_impl(absolute_invariants(I), I);
}

}  // namespace sextic
