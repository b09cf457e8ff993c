#include "sextic/exactmath/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sextic {

namespace {

long approx_log2(const Rational& r) {
  return static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 2));
}

// Coefficients of f(2^k y) / 2^(nk) with 2^k near the root magnitude, in binary64.
ComplexPolynomial balanced(const RationalPolynomial& f, long& k) {
  k = std::numeric_limits<long>::min();
  const int n = f.degree();
  for (int i = 0; i < n; ++i) {
    const Rational& a = f.coefficients()[static_cast<std::size_t>(i)];
    if (is_zero(a)) continue;
    const long e = (approx_log2(a) - approx_log2(f.leading()) + (n - i) - 1) / (n - i);
    k = std::max(k, e);
  }
  if (k == std::numeric_limits<long>::min()) k = 0;
  std::vector<Complex> c;
  for (int i = 0; i <= n; ++i) {
    Rational a = f[static_cast<std::size_t>(i)];
    const long shift = k * (i - n);
    if (shift >= 0)
      mpz_mul_2exp(a.get_num_mpz_t(), a.get_num_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    else
      mpz_mul_2exp(a.get_den_mpz_t(), a.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    a.canonicalize();
    c.push_back(to_complex(a));
  }
  return ComplexPolynomial(std::move(c));
}

struct Evaluation {
  Complex value;
  Complex derivative;
};

Evaluation horner(std::span<const Complex> c, Complex x) {
  Complex v{};
  Complex d{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * x + v;
    v = v * x + *it;
  }
  return {v, d};
}

double scale_at(std::span<const Complex> c, double modulus) {
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * modulus + std::abs(*it);
  return s;
}

}  // namespace

double relative_residual(const ComplexPolynomial& p, Complex r) {
  const auto c = p.coefficients();
  const double scale = scale_at(c, std::abs(r));
  if (scale == 0.0) return 0.0;
  return std::abs(horner(c, r).value) / scale;
}

std::vector<Complex> complex_roots(const ComplexPolynomial& p, const RootOptions& options) {
  const int n = p.degree();
  if (n < 1) throw DomainError("complex_roots needs degree >= 1");
  const auto c = p.coefficients();
  double max_coeff = 0.0;
  for (const auto& v : c) max_coeff = std::max(max_coeff, std::abs(v));
  if (std::abs(p.leading()) <= options.tol * max_coeff)
    throw DomainError("complex_roots: leading coefficient below tolerance");
  for (const auto& v : c) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("complex_roots: non-finite coefficient");
  }

  // Initial guesses on a circle of the Cauchy-bound radius, rotated off the axes.
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)] / p.leading()));
  radius = std::max(1.0 + radius, 1e-3) * 0.5;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }

  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<bool> done(z.size(), false);
  int iteration = 0;
  for (; iteration < options.max_iterations; ++iteration) {
    bool all_done = true;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (done[k]) continue;
      const auto [v, d] = horner(c, z[k]);
      if (std::abs(v) <= 4.0 * eps * scale_at(c, std::abs(z[k]))) {
        done[k] = true;
        continue;
      }
      all_done = false;
      const Complex ratio = v / d;
      Complex repulsion{};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) <= eps * std::abs(z[k])) done[k] = true;
    }
    if (all_done || std::all_of(done.begin(), done.end(), [](bool b) { return b; })) break;
  }

  // Newton polishing of simple roots.
  for (auto& r : z) {
    for (int k = 0; k < 3; ++k) {
      const auto [v, d] = horner(c, r);
      if (d == Complex{}) break;
      const Complex next = r - v / d;
      if (std::abs(horner(c, next).value) < std::abs(v)) r = next;
      else break;
    }
  }

  std::vector<double> residuals;
  residuals.reserve(z.size());
  bool ok = iteration < options.max_iterations;
  for (const auto& r : z) {
    residuals.push_back(relative_residual(p, r));
    if (!(residuals.back() <= options.tol)) ok = false;
  }
  if (!ok) throw NumericError("complex_roots did not converge", std::move(residuals));
  return z;
}

std::vector<Complex> complex_roots(const RationalPolynomial& p, const RootOptions& options) {
  if (p.degree() < 1) throw DomainError("complex_roots needs degree >= 1");
  long k = 0;
  auto roots = complex_roots(balanced(p, k), options);
  for (auto& r : roots) r = std::ldexp(r.real(), static_cast<int>(k)) + Complex(0.0, std::ldexp(r.imag(), static_cast<int>(k)));
  return roots;
}

}  // namespace sextic
