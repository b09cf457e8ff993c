#include "sextic/fibrations/fibrations.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "sextic/exactmath/roots.hpp"

namespace sextic {

namespace {

using Poly = RationalPolynomial;

Poly cst(const Rational& v) { return Poly::constant(v); }
const Poly kT = Poly::identity();

int order_at_infinity(const Poly& p, int form_degree) {
  if (p.is_zero()) return kInfiniteOrder;
  return form_degree - p.degree();
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct RootClass {
  Poly bundle;
  std::array<int, 3> orders{};
};

// Splits the roots of a squarefree class by their vanishing order in f, via
// the gcd chain with successive derivatives of f.
std::vector<RootClass> refine(const RootClass& c, const Poly& f, std::size_t slot) {
  if (f.is_zero()) {
    RootClass r = c;
    r.orders[slot] = kInfiniteOrder;
    return {r};
  }
  std::vector<Poly> chain{c.bundle};
  Poly deriv = f;
  while (chain.back().degree() > 0) {
    chain.push_back(gcd(chain.back(), deriv));
    deriv = deriv.derivative();
  }
  std::vector<RootClass> out;
  for (std::size_t m = 0; m + 1 < chain.size(); ++m) {
    Poly exact = exact_quotient(chain[m], chain[m + 1]);
    if (exact.degree() < 1) continue;
    RootClass r = c;
    r.bundle = std::move(exact);
    r.orders[slot] = static_cast<int>(m);
    out.push_back(std::move(r));
  }
  return out;
}

// Continued-fraction convergents of a numerically real root, accepted only if
// they are exact roots of p.
std::optional<Rational> rational_root_near(const Poly& p, Complex r) {
  const double x = r.real();
  if (std::abs(r.imag()) > 1e-8 * std::max(1.0, std::abs(x)) || !std::isfinite(x)) return std::nullopt;
  Integer h0(1), h1(0), k0(0), k1(1);
  double rest = x;
  for (int step = 0; step < 40; ++step) {
    const double fl = std::floor(rest);
    if (std::abs(fl) > 1e18) break;
    const Integer a(static_cast<long>(fl));
    const Integer h = a * h0 + h1;
    const Integer k = a * k0 + k1;
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    if (mpz_sizeinbase(k.get_mpz_t(), 2) > 40) break;
    const Rational q = make_rational(h, k);
    if (p(q) == 0) return q;
    const double frac = rest - fl;
    if (frac < 1e-15) break;
    rest = 1.0 / frac;
  }
  return std::nullopt;
}

std::vector<RootClass> affine_classes(const ShortForm& s) {
  const Poly R = squarefree_part(s.delta);
  if (R.degree() < 1) return {};
  std::vector<RootClass> classes{{R, {0, 0, 0}}};
  const std::array<const Poly*, 3> fs{&s.g2, &s.g3, &s.delta};
  for (std::size_t slot = 0; slot < 3; ++slot) {
    std::vector<RootClass> next;
    for (const auto& c : classes) {
      auto parts = refine(c, *fs[slot], slot);
      next.insert(next.end(), parts.begin(), parts.end());
    }
    classes = std::move(next);
  }
  return classes;
}

}  // namespace

ShortForm short_form(const WeierstrassModel& m) {
  const Poly p = m.B - Rational(1, 3) * (m.A * m.A);
  const Poly q = m.C - Rational(1, 3) * (m.A * m.B) + Rational(2, 27) * (m.A * m.A * m.A);
  ShortForm s;
  s.g2 = Rational(-4) * p;
  s.g3 = Rational(-4) * q;
  s.delta = s.g2 * s.g2 * s.g2 - Rational(27) * (s.g3 * s.g3);
  return s;
}

std::string KodairaType::name() const {
  switch (kind) {
    case KodairaKind::I:
      return "I" + std::to_string(n);
    case KodairaKind::IStar:
      return "I" + std::to_string(n) + "*";
    case KodairaKind::II:
      return "II";
    case KodairaKind::III:
      return "III";
    case KodairaKind::IV:
      return "IV";
    case KodairaKind::IIStar:
      return "II*";
    case KodairaKind::IIIStar:
      return "III*";
    case KodairaKind::IVStar:
      return "IV*";
  }
  return "?";
}

int KodairaType::euler() const {
  switch (kind) {
    case KodairaKind::I:
      return n;
    case KodairaKind::IStar:
      return n + 6;
    case KodairaKind::II:
      return 2;
    case KodairaKind::III:
      return 3;
    case KodairaKind::IV:
      return 4;
    case KodairaKind::IIStar:
      return 10;
    case KodairaKind::IIIStar:
      return 9;
    case KodairaKind::IVStar:
      return 8;
  }
  return 0;
}

KodairaType kodaira_type(const VanishingOrders& v) {
  const int a = v.g2;
  const int b = v.g3;
  const int d = v.delta;
  if (a >= 4 && b >= 6) throw NonMinimalModel("vanishing orders reach (4, 6): non-minimal Weierstrass model");
  if (d == 0) return {KodairaKind::I, 0};
  if (a == 0 && b == 0) return {KodairaKind::I, d};
  if (a >= 1 && b == 1 && d == 2) return {KodairaKind::II, 0};
  if (a == 1 && b >= 2 && d == 3) return {KodairaKind::III, 0};
  if (a >= 2 && b == 2 && d == 4) return {KodairaKind::IV, 0};
  if (a >= 2 && b >= 3 && d == 6) return {KodairaKind::IStar, 0};
  if (a == 2 && b == 3 && d > 6) return {KodairaKind::IStar, d - 6};
  if (a >= 3 && b == 4 && d == 8) return {KodairaKind::IVStar, 0};
  if (a == 3 && b >= 5 && d == 9) return {KodairaKind::IIIStar, 0};
  if (a >= 4 && b == 5 && d == 10) return {KodairaKind::IIStar, 0};
  throw NonMinimalModel("vanishing orders (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                        std::to_string(d) + ") match no Kodaira type");
}

std::map<std::string, int> FiberCensus::counts() const {
  std::map<std::string, int> out;
  for (const auto& f : fibers) ++out[f.type.name()];
  return out;
}

FiberCensus classify_fibers(const WeierstrassModel& m) {
  const ShortForm s = short_form(m);
  if (s.delta.is_zero()) throw DomainError("discriminant vanishes identically");

  const int needed = std::max({1, ceil_div(std::max(s.g2.degree(), 0), 4), ceil_div(std::max(s.g3.degree(), 0), 6)});
  int N = m.weight;
  if (N == 0) {
    N = needed;
  } else if (N < needed) {
    throw DomainError("coefficient degrees exceed the requested weight");
  }

  FiberCensus census;
  census.weight = N;

  for (const auto& c : affine_classes(s)) {
    const VanishingOrders v{c.orders[0], c.orders[1], c.orders[2]};
    const KodairaType type = kodaira_type(v);
    Poly bundle = c.bundle.monic();
    std::vector<Rational> exact;
    if (bundle.degree() == 1) {
      exact.push_back(Rational(-bundle[0]));
      bundle = cst(Rational(1));
    } else {
      for (const auto& r : complex_roots(bundle)) {
        const auto q = rational_root_near(bundle, r);
        if (!q) continue;
        exact.push_back(*q);
        bundle = exact_quotient(bundle, Poly{Rational(-*q), Rational(1)});
      }
    }
    std::sort(exact.begin(), exact.end());
    for (const auto& q : exact) {
      KodairaFiber f{type, {}, v};
      f.location.exact = q;
      f.location.bundle = Poly{Rational(-q), Rational(1)};
      f.location.numeric = to_complex(q);
      census.fibers.push_back(std::move(f));
    }
    if (bundle.degree() < 1) continue;
    auto roots = complex_roots(bundle);
    std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
      return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    for (const auto& r : roots) {
      KodairaFiber f{type, {}, v};
      f.location.bundle = bundle;
      f.location.numeric = r;
      census.fibers.push_back(std::move(f));
    }
  }

  const VanishingOrders inf{order_at_infinity(s.g2, 4 * N), order_at_infinity(s.g3, 6 * N),
                            order_at_infinity(s.delta, 12 * N)};
  const KodairaType tinf = kodaira_type(inf);
  if (inf.delta > 0) {
    KodairaFiber f{tinf, {}, inf};
    f.location.at_infinity = true;
    census.fibers.push_back(std::move(f));
  }

  for (const auto& f : census.fibers) census.euler_sum += f.type.euler();
  if (census.euler_sum != 12 * N) {
    throw IdentityViolation("Euler numbers sum to " + std::to_string(census.euler_sum) + ", expected " +
                            std::to_string(12 * N));
  }
  return census;
}

FibrationParams FibrationParams::from_igusa(const IgusaInvariants& I) {
  return {Rational(-I.I4 / 12), Rational((I.I2 * I.I4 - 3 * I.I6) / 108), Rational(-1), Rational(I.I2 / 24),
          Rational(I.I10 / 4)};
}

WeierstrassModel kumfib2_model(const IgusaInvariants& I) {
  const Poly P = kT * kT * kT + cst(Rational(-I.I4 / 12)) * kT + cst(Rational((I.I2 * I.I4 - 3 * I.I6) / 108));
  WeierstrassModel m;
  m.A = Rational(-2) * P;
  m.B = P * P + I.I10 * (kT - cst(Rational(I.I2 / 24)));
  m.weight = 2;
  return m;
}

WeierstrassModel alternate_model(const FibrationParams& p) {
  WeierstrassModel m;
  m.A = Poly{p.b, p.a, Rational(0), Rational(1)};
  m.B = Poly{Rational(p.e * p.d), Rational(p.e * p.c)};
  m.weight = 2;
  return m;
}

WeierstrassModel alternate_model_ftheory(const SiegelForms& s) {
  WeierstrassModel m;
  m.A = Poly{Rational(-s.psi6 / 864), Rational(-s.psi4 / 48), Rational(0), Rational(1)};
  m.B = Poly{s.chi12, Rational(-4 * s.chi10)};
  m.weight = 2;
  return m;
}

WeierstrassModel standard_model(const FibrationParams& p) {
  WeierstrassModel m;
  m.B = Poly{Rational(0), Rational(0), Rational(0), p.c, p.a};
  m.C = Poly{Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), p.d, p.b, p.e};
  m.weight = 2;
  return m;
}

QuarticModel kummer_quartic_model(const RosenhainCurve& c) {
  if (!c.valid()) throw DomainError("Rosenhain roots must be distinct and avoid 0, 1");
  // Factors alpha(t) + beta X; the product is kept as coefficients in X.
  std::vector<Poly> acc{kT * Poly{Rational(1), Rational(1)}, kT * cst(Rational(-1))};
  for (const Rational* l : {&c.lambda1, &c.lambda2, &c.lambda3}) {
    const Poly alpha{Rational(*l * *l), Rational(1)};
    const Poly beta = cst(Rational(-*l));
    std::vector<Poly> next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k] += alpha * acc[k];
      next[k + 1] += beta * acc[k];
    }
    acc = std::move(next);
  }
  QuarticModel q;
  for (std::size_t k = 0; k < 5; ++k) q.coefficients[k] = acc[k];
  return q;
}

WeierstrassModel quartic_jacobian(const QuarticModel& q) {
  const Poly& a = q.coefficients[4];
  const Poly& b = q.coefficients[3];
  const Poly& c = q.coefficients[2];
  const Poly& d = q.coefficients[1];
  const Poly& e = q.coefficients[0];
  const Poly I = Rational(12) * (a * e) - Rational(3) * (b * d) + c * c;
  const Poly J = Rational(72) * (a * c * e) + Rational(9) * (b * c * d) - Rational(27) * (a * d * d) -
                 Rational(27) * (e * b * b) - Rational(2) * (c * c * c);
  WeierstrassModel m;
  m.B = Rational(-27) * I;
  m.C = Rational(-27) * J;
  m.weight = 2;
  return m;
}

LaurentPolynomial kummer_polynomial(const RosenhainCurve& c) {
  constexpr std::size_t n = 3;
  const auto Y = LaurentPolynomial::variable(n, 0);
  const auto X = LaurentPolynomial::variable(n, 1);
  const auto t = LaurentPolynomial::variable(n, 2);
  const auto one = LaurentPolynomial::constant(n, Rational(1));
  LaurentPolynomial rhs = t * (one - X + t);
  for (const Rational* l : {&c.lambda1, &c.lambda2, &c.lambda3}) {
    rhs = rhs * (LaurentPolynomial::constant(n, Rational(*l * *l)) - *l * X + t);
  }
  return Y * Y - rhs;
}

LaurentPolynomial sextic_recovery_limit(const RosenhainCurve& c) {
  // Variables 0..2 carry K(Y, X, t); 3..5 are (eta, xi, eps).
  constexpr std::size_t n = 6;
  LaurentPolynomial K(n);
  const LaurentPolynomial K3 = kummer_polynomial(c);
  for (const auto& [exps, coef] : K3.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(n, coef);
    for (std::size_t i = 0; i < 3; ++i) {
      if (exps[i] != 0) term = term * LaurentPolynomial::variable(n, i, exps[i]);
    }
    K += term;
  }
  const auto eps = [](int k) { return LaurentPolynomial::variable(n, 5, k); };
  K = K.substitute(0, LaurentPolynomial::variable(n, 3) * eps(-5));
  K = K.substitute(1, eps(-2));
  K = K.substitute(2, LaurentPolynomial::variable(n, 4) * eps(-2));
  const LaurentPolynomial lim = laurent_limit(K, 5, 10);
  LaurentPolynomial out(3);
  for (const auto& [exps, coef] : lim.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(3, coef);
    for (std::size_t i = 0; i < 3; ++i) {
      if (exps[i + 3] != 0) term = term * LaurentPolynomial::variable(3, i, exps[i + 3]);
    }
    out += term;
  }
  return out;
}

LaurentPolynomial rosenhain_curve_equation(const RosenhainCurve& c) {
  const auto eta = LaurentPolynomial::variable(3, 0);
  return eta * eta - LaurentPolynomial::from_univariate(3, 1, c.quintic());
}

Rational fiber_residual(const WeierstrassModel& m, const EllipticPoint& pt, const Rational& t) {
  if (pt.infinity) return Rational(0);
  const Rational& x = pt.x;
  return Rational(pt.y * pt.y - (x * x * x + m.A(t) * x * x + m.B(t) * x + m.C(t)));
}

WeierstrassModel isogenous_model(const FibrationParams& p) {
  const WeierstrassModel alt = alternate_model(p);
  WeierstrassModel m;
  m.A = Rational(-2) * alt.A;
  m.B = alt.A * alt.A - Rational(4) * alt.B;
  m.weight = 2;
  return m;
}

EllipticPoint isogeny(const EllipticPoint& pt, const Rational& t, const FibrationParams& p) {
  if (pt.infinity || pt.x == 0) return EllipticPoint::at_infinity();
  const Rational B = p.e * (p.c * t + p.d);
  const Rational x2 = pt.x * pt.x;
  return {Rational(pt.y * pt.y / x2), Rational(pt.y * (B - x2) / x2)};
}

EllipticPoint dual_isogeny(const EllipticPoint& pt, const Rational& t, const FibrationParams& p) {
  if (pt.infinity || pt.x == 0) return EllipticPoint::at_infinity();
  const Rational A = t * t * t + p.a * t + p.b;
  const Rational Bp = A * A - 4 * p.e * (p.c * t + p.d);
  const Rational X2 = pt.x * pt.x;
  return {Rational(pt.y * pt.y / (4 * X2)), Rational(pt.y * (Bp - X2) / (8 * X2))};
}

EllipticPoint nikulin_involution(const EllipticPoint& pt, const Rational& t, const FibrationParams& p) {
  if (pt.infinity) return {Rational(0), Rational(0)};
  if (pt.x == 0) return EllipticPoint::at_infinity();
  const Rational B = p.e * (p.c * t + p.d);
  return {Rational(B / pt.x), Rational(-pt.y * B / (pt.x * pt.x))};
}

RationalPolynomial alternate_radicand(const FibrationParams& p) {
  const Poly A{p.b, p.a, Rational(0), Rational(1)};
  return A * A - Rational(4 * p.e) * Poly{p.d, p.c};
}

std::vector<FixedPoint> nikulin_fixed_points(const FibrationParams& p) {
  const Poly rad = alternate_radicand(p);
  std::vector<FixedPoint> out;
  for (const Complex& t : complex_roots(rad)) {
    const Complex A = t * t * t + to_complex(p.a) * t + to_complex(p.b);
    // Double root of x^2 + A x + B: x = -A/2.
    out.push_back({t, -A / 2.0});
  }
  return out;
}

bool standard_alternate_transform_holds(const FibrationParams& p) {
  if (p.e == 0) throw DomainError("the standard/alternate transform needs e != 0");
  // Variables: 0..2 standard (T, X, Y); 3..5 alternate (t, x, y).
  constexpr std::size_t n = 6;
  const auto v = [](std::size_t i) { return LaurentPolynomial::variable(n, i); };
  const auto k = [](const Rational& r) { return LaurentPolynomial::constant(n, r); };
  const auto T = v(0);
  const auto X = v(1);
  const auto Y = v(2);
  const LaurentPolynomial std_eq =
      Y * Y - (X * X * X + pow(T, 3) * (k(p.a) * T + k(p.c)) * X + pow(T, 5) * (k(p.e) * T * T + k(p.b) * T + k(p.d)));
  const auto t = v(3);
  const auto x = v(4);
  const auto y = v(5);
  const LaurentPolynomial alt_eq =
      y * y - (x * x * x + (pow(t, 3) + k(p.a) * t + k(p.b)) * x * x + k(p.e) * (k(p.c) * t + k(p.d)) * x);
  const Rational ie = 1 / p.e;
  LaurentPolynomial lhs = std_eq.substitute(0, ie * x);
  lhs = lhs.substitute(1, Rational(ie * ie) * (t * x * x));
  lhs = lhs.substitute(2, Rational(-ie * ie * ie) * (x * x * y));
  const LaurentPolynomial rhs = Rational(pow(ie, 6)) * (pow(x, 4) * alt_eq);
  return lhs == rhs;
}

Rational qvanish_bracket(const FibrationParams& p) {
  struct Term {
    long coef;
    int a, b, c, d, e;
  };
  static constexpr Term kTerms[] = {
      {16, 7, 0, 2, 1, 0},     {-16, 6, 1, 3, 0, 0},    {16, 5, 0, 4, 0, 1},      {16, 6, 0, 0, 3, 0},
      {216, 4, 2, 2, 1, 0},    {888, 4, 0, 2, 2, 1},    {-216, 3, 3, 3, 0, 0},    {-3420, 3, 1, 3, 1, 1},
      {2700, 2, 2, 4, 0, 1},   {4125, 2, 0, 4, 1, 2},   {-5625, 1, 1, 5, 0, 2},   {3125, 0, 0, 6, 0, 3},
      {216, 3, 2, 0, 3, 0},    {864, 3, 0, 0, 4, 1},    {-2592, 2, 1, 1, 3, 1},   {729, 1, 4, 2, 1, 0},
      {-5670, 1, 2, 2, 2, 1},  {16200, 1, 0, 2, 3, 2},  {-729, 0, 5, 3, 0, 0},    {6075, 0, 3, 3, 1, 1},
      {-13500, 0, 1, 3, 2, 2}, {729, 0, 4, 0, 3, 0},    {-5832, 0, 2, 0, 4, 1},   {11664, 0, 0, 0, 5, 2},
  };
  Rational acc(0);
  for (const auto& t : kTerms) {
    acc += Rational(t.coef) * pow(p.a, t.a) * pow(p.b, t.b) * pow(p.c, t.c) * pow(p.d, t.d) * pow(p.e, t.e);
  }
  return acc;
}

Rational type_iii_polynomial(const FibrationParams& p) {
  return Rational(p.a * p.c * p.c * p.d - p.b * p.c * p.c * p.c + p.d * p.d * p.d);
}

Rational type_iii_siegel(const SiegelForms& s) {
  return Rational(2 * s.psi6 * pow(s.chi10, 3) + 9 * s.psi4 * s.chi10 * s.chi10 * s.chi12 - 27 * pow(s.chi12, 3));
}

Rational type_iii_constant() { return Rational(-pow(Rational(2), 36) / 27); }

DegenerationFlags degeneration_predicates(const FibrationParams& p) {
  DegenerationFlags f;
  f.su2_enhancement = qvanish_bracket(p) == 0;
  f.type_III = type_iii_polynomial(p) == 0;
  f.so32_enhancement = p.e == 0;
  return f;
}

DegenerationFlags degeneration_predicates(const SiegelForms& s) {
  DegenerationFlags f;
  f.su2_enhancement = q_polynomial(s) == 0;
  f.so32_enhancement = s.chi10 == 0;
  f.type_III = !f.so32_enhancement && type_iii_siegel(s) == 0;
  return f;
}

}  // namespace sextic
