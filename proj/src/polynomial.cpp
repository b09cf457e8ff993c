#include "sextic/exactmath/polynomial.hpp"

namespace sextic {

RationalPolynomial exact_quotient(const RationalPolynomial& num, const RationalPolynomial& den) {
  auto [quo, rem] = divmod(num, den);
  if (!rem.is_zero()) throw IdentityViolation("polynomial division left a remainder");
  return quo;
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto rem = divmod(a, b).second;
    a = std::move(b);
    b = std::move(rem);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  if (p.degree() == 0) return RationalPolynomial::constant(Rational(1));
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

Rational resultant(const RationalPolynomial& p, const RationalPolynomial& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant of the zero polynomial");
  // res(p, q) = (-1)^(mn) lc(q)^(m - deg r) res(q, r), r = p mod q.
  Rational acc(1);
  RationalPolynomial a = p;
  RationalPolynomial b = q;
  while (true) {
    const int m = a.degree();
    const int n = b.degree();
    if (n == 0) return acc * pow(b.leading(), m);
    auto r = divmod(a, b).second;
    if (r.is_zero()) return Rational(0);
    if ((m * n) % 2 != 0) acc = -acc;
    acc *= pow(b.leading(), m - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

Rational discriminant(const RationalPolynomial& p) {
  const int n = p.degree();
  if (n < 2) throw DomainError("discriminant needs degree >= 2");
  Rational d = resultant(p, p.derivative()) / p.leading();
  if ((n * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

RationalPolynomial substitute_affine(const RationalPolynomial& p, const Rational& alpha, const Rational& beta) {
  return p.compose(RationalPolynomial{beta, alpha});
}

ComplexPolynomial to_complex(const RationalPolynomial& p) {
  std::vector<Complex> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.push_back(to_complex(v));
  return ComplexPolynomial(std::move(c));
}

RationalPolynomial from_roots(std::span<const Rational> roots) {
  auto acc = RationalPolynomial::constant(Rational(1));
  for (const auto& r : roots) acc = acc * RationalPolynomial{Rational(-r), Rational(1)};
  return acc;
}

}  // namespace sextic
