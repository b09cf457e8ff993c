#include "sextic/invariants/igusa.hpp"

#include <vector>

#include "tables.hpp"

namespace sextic {

bool RosenhainCurve::valid() const {
  const std::array<Rational, 5> roots{Rational(0), Rational(1), lambda1, lambda2, lambda3};
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j]) return false;
  return true;
}

RationalPolynomial RosenhainCurve::quintic() const {
  const std::array<Rational, 5> roots{Rational(0), Rational(1), lambda1, lambda2, lambda3};
  return from_roots(roots);
}

template <class T>
IgusaTuple<T> igusa_from_rosenhain(const T& l1, const T& l2, const T& l3) {
  const std::array<T, 3> spq{T(l1 + l2 + l3), T(l1 * l2 + l1 * l3 + l2 * l3), T(l1 * l2 * l3)};
  const T one(1);
  const T prod = T(l1 * l2 * l3 * (l1 - one) * (l2 - one) * (l3 - one) * (l1 - l2) * (l1 - l3) * (l2 - l3));
  return {detail::evaluate_terms(detail::kIgRosI2, spq), detail::evaluate_terms(detail::kIgRosI4, spq),
          detail::evaluate_terms(detail::kIgRosI6, spq), T(prod * prod)};
}

template IgusaTuple<Rational> igusa_from_rosenhain(const Rational&, const Rational&, const Rational&);
template IgusaTuple<Complex> igusa_from_rosenhain(const Complex&, const Complex&, const Complex&);

IgusaInvariants igusa_from_rosenhain(const RosenhainCurve& c) {
  return igusa_from_rosenhain(c.lambda1, c.lambda2, c.lambda3);
}

namespace {

// Binary form sum c[i] x^i y^(n-i).
struct BinaryForm {
  int degree = 0;
  std::vector<Rational> c;

  explicit BinaryForm(int n) : degree(n), c(static_cast<std::size_t>(n + 1)) {}

  Rational scalar() const { return c[0]; }
};

Rational falling(int n, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

// d^(alpha + beta) f / dx^alpha dy^beta.
BinaryForm partial(const BinaryForm& f, int alpha, int beta) {
  const int n = f.degree - alpha - beta;
  BinaryForm out(n);
  for (int i = alpha; i <= f.degree; ++i) {
    const int j = f.degree - i;
    if (j < beta) continue;
    const auto& ci = f.c[static_cast<std::size_t>(i)];
    if (is_zero(ci)) continue;
    out.c[static_cast<std::size_t>(i - alpha)] += ci * falling(i, alpha) * falling(j, beta);
  }
  return out;
}

BinaryForm multiply(const BinaryForm& f, const BinaryForm& g) {
  BinaryForm out(f.degree + g.degree);
  for (int i = 0; i <= f.degree; ++i) {
    const auto& fi = f.c[static_cast<std::size_t>(i)];
    if (is_zero(fi)) continue;
    for (int j = 0; j <= g.degree; ++j) out.c[static_cast<std::size_t>(i + j)] += fi * g.c[static_cast<std::size_t>(j)];
  }
  return out;
}

// (f, g)_k = sum_i (-1)^i C(k, i) d^k f / dx^(k-i) dy^i * d^k g / dx^i dy^(k-i).
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int k) {
  BinaryForm out(f.degree + g.degree - 2 * k);
  Rational binom(1);
  for (int i = 0; i <= k; ++i) {
    auto term = multiply(partial(f, k - i, i), partial(g, i, k - i));
    const Rational w = (i % 2 == 0) ? binom : Rational(-binom);
    for (std::size_t m = 0; m < out.c.size(); ++m) out.c[m] += w * term.c[m];
    binom = binom * (k - i) / (i + 1);
  }
  return out;
}

}  // namespace

IgusaInvariants igusa_from_sextic(const RationalPolynomial& f) {
  if (f.degree() != 5 && f.degree() != 6) throw DomainError("igusa_from_sextic needs a polynomial of degree 5 or 6");
  BinaryForm F(6);
  for (int i = 0; i <= 6; ++i) F.c[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)];

  const auto i_form = transvectant(F, F, 4);
  const auto delta = transvectant(i_form, i_form, 2);
  const auto y1 = transvectant(F, i_form, 4);
  const auto y2 = transvectant(i_form, y1, 2);
  const auto y3 = transvectant(i_form, y2, 2);

  const Rational A = transvectant(F, F, 6).scalar();
  const Rational B = transvectant(i_form, i_form, 4).scalar();
  const Rational C = transvectant(i_form, delta, 4).scalar();
  const Rational D = transvectant(y3, y1, 2).scalar();

  auto inv = [](const char* den) -> Rational { return Rational(1) / Rational(den); };
  IgusaInvariants I;
  I.I2 = -A * inv("4320");
  I.I4 = -A * A * inv("373248000") + B * inv("1433272320");
  I.I6 = A * A * A * inv("16124313600000") - A * B * inv("46438023168000") + C * inv("891610044825600");
  const Rational A2 = A * A;
  I.I10 = -A2 * A2 * A * inv("601836780257280000000000") + A2 * A * B * inv("1386631941712773120000000") +
          A2 * C * inv("29951249940995899392000000") - A * B * B * inv("15973999968531146342400000") -
          B * C * inv("287531999433560634163200000") - D * inv("10649333312354097561600000");
  return I;
}

IgusaInvariants igusa_representative(const AbsoluteInvariants& j) {
  if (is_zero(j.j1)) throw DomainError("j1 = 0 has no representative with I2 = 1");
  return {Rational(1), j.j2 / j.j1, j.j3 / j.j1, Rational(1) / j.j1};
}

IgusaInvariants weighted_rescale(const IgusaInvariants& I, const Rational& r) {
  return {I.I2 * pow(r, 2), I.I4 * pow(r, 4), I.I6 * pow(r, 6), I.I10 * pow(r, 10)};
}

bool weighted_equivalent(const IgusaInvariants& a, const IgusaInvariants& b) {
  // Weights in u = r^2 are 1, 2, 3, 5.
  const std::array<Rational, 4> x{a.I2, a.I4, a.I6, a.I10};
  const std::array<Rational, 4> y{b.I2, b.I4, b.I6, b.I10};
  constexpr std::array<int, 4> w{1, 2, 3, 5};
  bool all_zero_a = true;
  bool all_zero_b = true;
  for (std::size_t i = 0; i < 4; ++i) {
    if (is_zero(x[i]) != is_zero(y[i])) return false;
    all_zero_a = all_zero_a && is_zero(x[i]);
    all_zero_b = all_zero_b && is_zero(y[i]);
  }
  if (all_zero_a || all_zero_b) return all_zero_a && all_zero_b;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (pow(x[i], w[j]) * pow(y[j], w[i]) != pow(y[i], w[j]) * pow(x[j], w[i])) return false;
  return true;
}

SiegelForms siegel_from_igusa(const IgusaInvariants& I) {
  return {I.I4 / 4, (I.I2 * I.I4 - 3 * I.I6) / 8, -I.I10 / power(2, 14), I.I2 * I.I10 / (3 * power(2, 17))};
}

IgusaInvariants igusa_from_siegel(const SiegelForms& s) {
  if (is_zero(s.chi10)) throw ProductLocusError("chi10 = 0: the Igusa dictionary is not invertible on H1");
  const Rational ratio = s.chi12 / s.chi10;
  return {-24 * ratio, 4 * s.psi4, Rational(-8, 3) * s.psi6 - 32 * s.psi4 * ratio, -power(2, 14) * s.chi10};
}

Rational q_polynomial(const SiegelForms& s) {
  return detail::evaluate_terms(detail::kQ, std::array<Rational, 4>{s.psi4, s.psi6, s.chi10, s.chi12});
}

Rational chi35_squared(const SiegelForms& s) {
  return s.chi10 * q_polynomial(s) / (power(2, 12) * power(3, 9));
}

DerivedForms q_form(const SiegelForms& s) {
  const Rational Q = q_polynomial(s);
  return {s.chi10 * Q / (power(2, 12) * power(3, 9)), Q};
}

HumbertFlags humbert_predicates(const SiegelForms& s) {
  return {is_zero(s.chi10), is_zero(q_polynomial(s))};
}

}  // namespace sextic
