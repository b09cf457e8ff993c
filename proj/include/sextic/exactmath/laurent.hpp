#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sextic/exactmath/polynomial.hpp"

namespace sextic {

/// Sparse multivariate Laurent polynomial over Q in a fixed number of
/// variables. Exponents may be negative, which lets rational-function
/// identities with monomial denominators be checked exactly.
class LaurentPolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit LaurentPolynomial(std::size_t variables = 0) : nvars_(variables) {}

  static LaurentPolynomial constant(std::size_t variables, const Rational& value);
  static LaurentPolynomial variable(std::size_t variables, std::size_t index, int exponent = 1);
  /// p(v_index) for a univariate p.
  static LaurentPolynomial from_univariate(std::size_t variables, std::size_t index, const RationalPolynomial& p);

  std::size_t variables() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }

  /// Smallest / largest exponent of a variable over all terms (0 for zero).
  int min_exponent(std::size_t index) const;
  int max_exponent(std::size_t index) const;

  /// Coefficient of v_index^k as a polynomial in the remaining variables
  /// (v_index's exponent is zeroed).
  LaurentPolynomial coefficient(std::size_t index, int k) const;

  /// Replaces v_index by value. Negative exponents of v_index are only allowed
  /// when value is a single monomial.
  LaurentPolynomial substitute(std::size_t index, const LaurentPolynomial& value) const;

  /// Rewrites v_index^(k*m + r) as v_index^r * replacement^k (0 <= r < m),
  /// e.g. eliminating y^2 with the curve equation.
  LaurentPolynomial reduce_power(std::size_t index, int m, const LaurentPolynomial& replacement) const;

  /// Univariate polynomial in v_index; every other exponent must be zero.
  RationalPolynomial to_univariate(std::size_t index) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& s);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a) { return a *= Rational(-1); }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }
  friend LaurentPolynomial operator*(const Rational& s, LaurentPolynomial a) { return a *= s; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Exponents& e, const Rational& c);
  void check_compatible(const LaurentPolynomial& o) const;

  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned exponent);

/// lim_{v -> 0} v^order * expr for the variable v = v_index. Throws
/// IdentityViolation when a negative power of v survives the scaling.
LaurentPolynomial laurent_limit(const LaurentPolynomial& expr, std::size_t index, int order);

}  // namespace sextic
