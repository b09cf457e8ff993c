#include "sextic/thetafn/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sextic/errors.hpp"

namespace sextic::theta {

PeriodMatrix::PeriodMatrix(Complex tau1, Complex z, Complex tau2) : tau1_(tau1), z_(z), tau2_(tau2) {
  const double a = tau1.imag();
  const double b = z.imag();
  const double c = tau2.imag();
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(tau1.real()) &&
        std::isfinite(z.real()) && std::isfinite(tau2.real())))
    throw DomainError("period matrix entries must be finite");
  if (!(c > 0.0 && a * c > b * b)) throw DomainError("imaginary part of the period matrix is not positive definite");
}

namespace {

Complex term(const ThetaCharacteristic& ch, const PeriodMatrix& tau, int u1, int u2) {
  const double v1 = u1 + 0.5 * ch.a1();
  const double v2 = u2 + 0.5 * ch.a2();
  const double b1 = 0.5 * ch.b1();
  const double b2 = 0.5 * ch.b2();
  const Complex quad = tau.tau1() * (v1 * v1) + 2.0 * tau.z() * (v1 * v2) + tau.tau2() * (v2 * v2);
  const Complex phase = quad + 2.0 * (v1 * b1 + v2 * b2);
  return std::exp(Complex(0.0, std::numbers::pi) * phase);
}

}  // namespace

ThetaValue theta_constant(const ThetaCharacteristic& ch, const PeriodMatrix& tau, int radius) {
  if (radius < 1) throw DomainError("theta truncation radius must be positive");
  if (!ch.even()) return {Complex(0.0, 0.0), 0.0, false};
  Complex sum(0.0, 0.0);
  for (int u1 = -radius; u1 <= radius; ++u1)
    for (int u2 = -radius; u2 <= radius; ++u2) sum += term(ch, tau, u1, u2);
  double tail = 0.0;
  const int r = radius + 1;
  for (int k = -r; k <= r; ++k) {
    tail += std::abs(term(ch, tau, k, r)) + std::abs(term(ch, tau, k, -r));
    if (k != -r && k != r) tail += std::abs(term(ch, tau, r, k)) + std::abs(term(ch, tau, -r, k));
  }
  return {sum, tail, tail > kTailWarning * std::abs(sum)};
}

ThetaConstants::ThetaConstants(const std::array<Complex, 10>& values, double max_tail, bool warning)
    : values_(values), max_tail_(max_tail), warning_(warning) {}

Complex ThetaConstants::operator()(int k) const {
  if (k < 1 || k > 10) throw DomainError("theta index must be in 1..10");
  return values_[static_cast<std::size_t>(k - 1)];
}

ThetaFourth ThetaConstants::fourth_powers() const {
  ThetaFourth out;
  for (std::size_t i = 0; i < 10; ++i) {
    const Complex sq = values_[i] * values_[i];
    out[i] = sq * sq;
  }
  return out;
}

ThetaConstants even_theta_constants(const PeriodMatrix& tau, int radius) {
  std::array<Complex, 10> values;
  double max_tail = 0.0;
  bool warning = false;
  for (std::size_t i = 0; i < 10; ++i) {
    const auto tv = theta_constant(kEvenCharacteristics[i], tau, radius);
    values[i] = tv.value;
    max_tail = std::max(max_tail, tv.tail);
    warning = warning || tv.precision_warning;
  }
  return ThetaConstants(values, max_tail, warning);
}

namespace {

double scale4(const ThetaFourth& f) {
  double m = 0.0;
  for (const auto& v : f) m = std::max(m, std::abs(v));
  return m > 0.0 ? m : 1.0;
}

}  // namespace

std::array<double, 5> reduction_residuals(const ThetaFourth& t4) {
  auto f = [&](int k) { return t4[static_cast<std::size_t>(k - 1)]; };
  const double s = scale4(t4);
  return {
      std::abs(f(6) - (f(1) - f(2) - f(3) + f(4) - f(5))) / s,
      std::abs(f(7) - (f(3) - f(4) + f(5))) / s,
      std::abs(f(8) - (f(2) - f(4) + f(5))) / s,
      std::abs(f(9) - (f(1) - f(2) - f(5))) / s,
      std::abs(f(10) - (f(1) - f(3) - f(5))) / s,
  };
}

FrobeniusReport check_frobenius(const ThetaConstants& tc, double tol) {
  std::array<Complex, 10> sq;
  for (std::size_t i = 0; i < 10; ++i) sq[i] = tc.values()[i] * tc.values()[i];
  const ThetaFourth f4 = tc.fourth_powers();
  auto t = [&](int k) { return sq[static_cast<std::size_t>(k - 1)]; };
  auto f = [&](int k) { return f4[static_cast<std::size_t>(k - 1)]; };
  const double s = scale4(f4);

  FrobeniusReport rep;
  rep.identities = {
      std::abs(t(5) * t(6) - (t(1) * t(4) - t(2) * t(3))) / s,
      std::abs(f(5) + f(6) - (f(1) - f(2) - f(3) + f(4))) / s,
      std::abs(t(7) * t(9) - (t(1) * t(3) - t(2) * t(4))) / s,
      std::abs(f(7) + f(9) - (f(1) - f(2) + f(3) - f(4))) / s,
      std::abs(t(8) * t(10) - (t(1) * t(2) - t(3) * t(4))) / s,
      std::abs(f(8) + f(10) - (f(1) + f(2) - f(3) - f(4))) / s,
      std::abs(t(5) * t(9) - (t(3) * t(8) - t(4) * t(10))) / s,
      std::abs(t(5) * t(7) - (t(1) * t(8) - t(2) * t(10))) / s,
  };
  rep.reductions = reduction_residuals(f4);
  rep.max_identity = *std::max_element(rep.identities.begin(), rep.identities.end());
  rep.max_reduction = *std::max_element(rep.reductions.begin(), rep.reductions.end());
  rep.passed = rep.max_identity <= tol && rep.max_reduction <= tol;
  return rep;
}

Complex SatakeCoordinates::sum() const {
  Complex acc(0.0, 0.0);
  for (const auto& v : x) acc += v;
  return acc;
}

Complex SatakeCoordinates::power_sum(int j) const {
  if (j < 1) throw DomainError("power sum index must be positive");
  Complex acc(0.0, 0.0);
  for (const auto& v : x) acc += std::pow(v, j);
  return acc;
}

SatakeCoordinates satake_from_theta(const ThetaConstants& tc) {
  return {satake_from_theta4(tc.fourth_powers())};
}

RosenhainTriple rosenhain_from_theta(const ThetaConstants& tc, double min_denominator) {
  std::array<Complex, 10> sq;
  for (std::size_t i = 0; i < 10; ++i) sq[i] = tc.values()[i] * tc.values()[i];
  auto t = [&](int k) { return sq[static_cast<std::size_t>(k - 1)]; };
  const double s = scale4(tc.fourth_powers());
  const Complex d1 = t(2) * t(4);
  const Complex d2 = t(4) * t(10);
  const Complex d3 = t(2) * t(10);
  for (const auto& d : {d1, d2, d3})
    if (std::abs(d) < min_denominator * s) throw DegeneratePoint("theta denominator vanishes in the Rosenhain ratios");
  return {t(1) * t(3) / d1, t(3) * t(8) / d2, t(1) * t(8) / d3};
}

RosenhainTriple rosenhain_from_theta4(const ThetaFourth& t4, double min_denominator) {
  auto f = [&](int k) { return t4[static_cast<std::size_t>(k - 1)]; };
  const double s = scale4(t4);
  const Complex d1 = 2.0 * f(2) * f(4);
  const Complex d2 = 2.0 * f(4) * f(10);
  const Complex d3 = 2.0 * f(2) * f(10);
  for (const auto& d : {d1, d2, d3})
    if (std::abs(d) < min_denominator * s * s) throw DegeneratePoint("theta denominator vanishes in the Rosenhain ratios");
  return {
      0.5 + (f(1) * f(3) - f(7) * f(9)) / d1,
      0.5 + (f(3) * f(8) - f(5) * f(9)) / d2,
      0.5 + (f(1) * f(8) - f(5) * f(7)) / d3,
  };
}

}  // namespace sextic::theta
