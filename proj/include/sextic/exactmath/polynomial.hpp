#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "sextic/errors.hpp"
#include "sextic/exactmath/rational.hpp"

namespace sextic {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The leading stored coefficient is never zero; the zero polynomial has no
/// coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(const T& value) { return Polynomial(std::vector<T>{value}); }

  static Polynomial monomial(const T& value, std::size_t degree) {
    std::vector<T> c(degree + 1, T{});
    c[degree] = value;
    return Polynomial(std::move(c));
  }

  /// The polynomial x.
  static Polynomial identity() { return monomial(T(1), 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  /// Coefficient of x^i; zero past the degree.
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }

  const T& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  std::span<const T> coefficients() const noexcept { return c_; }

  T operator()(const T& x) const {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = T(acc * x + *it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = T(c_[i] * T(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  /// p(q(x)).
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Polynomial::constant(*it);
    return acc;
  }

  Polynomial monic() const { return *this * T(T(1) / leading()); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T{});
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T{});
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T{});
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T{}) c_.pop_back();
  }

  std::vector<T> c_;
};

using RationalPolynomial = Polynomial<Rational>;
using ComplexPolynomial = Polynomial<Complex>;

template <class T>
Polynomial<T> pow(const Polynomial<T>& p, unsigned exponent) {
  Polynomial<T> result = Polynomial<T>::constant(T(1));
  Polynomial<T> base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// Quotient and remainder; the divisor must be nonzero. Exact over a field.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& num, const Polynomial<T>& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<T> rem(num.coefficients().begin(), num.coefficients().end());
  const int dd = den.degree();
  if (num.degree() < dd) return {Polynomial<T>{}, num};
  std::vector<T> quo(static_cast<std::size_t>(num.degree() - dd + 1), T{});
  const T lead = den.leading();
  for (int k = num.degree() - dd; k >= 0; --k) {
    const T factor = T(rem[static_cast<std::size_t>(k + dd)] / lead);
    quo[static_cast<std::size_t>(k)] = factor;
    if (factor == T{}) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= factor * den[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial<T>(std::move(quo)), Polynomial<T>(std::move(rem))};
}

/// Exact division; throws IdentityViolation when a remainder is left.
RationalPolynomial exact_quotient(const RationalPolynomial& num, const RationalPolynomial& den);

/// Monic greatest common divisor (zero when both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// Squarefree part: the monic product of the distinct irreducible factors.
RationalPolynomial squarefree_part(const RationalPolynomial& p);

/// Resultant of two nonzero polynomials (Euclidean algorithm over Q).
Rational resultant(const RationalPolynomial& p, const RationalPolynomial& q);

/// Discriminant lc^(2n-2) prod_{i<j} (r_i - r_j)^2, so that a monic input gives
/// the bare squared root-difference product. Requires degree >= 2.
Rational discriminant(const RationalPolynomial& p);

/// p(alpha x + beta).
RationalPolynomial substitute_affine(const RationalPolynomial& p, const Rational& alpha, const Rational& beta);

ComplexPolynomial to_complex(const RationalPolynomial& p);

/// Monic polynomial with the given rational roots.
RationalPolynomial from_roots(std::span<const Rational> roots);

}  // namespace sextic
