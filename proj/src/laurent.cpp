#include "sextic/exactmath/laurent.hpp"

#include <algorithm>
#include <limits>

namespace sextic {

LaurentPolynomial LaurentPolynomial::constant(std::size_t variables, const Rational& value) {
  LaurentPolynomial p(variables);
  p.add_term(Exponents(variables, 0), value);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t variables, std::size_t index, int exponent) {
  if (index >= variables) throw DomainError("variable index out of range");
  LaurentPolynomial p(variables);
  Exponents e(variables, 0);
  e[index] = exponent;
  p.add_term(e, Rational(1));
  return p;
}

LaurentPolynomial LaurentPolynomial::from_univariate(std::size_t variables, std::size_t index,
                                                     const RationalPolynomial& poly) {
  LaurentPolynomial p(variables);
  const auto c = poly.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    Exponents e(variables, 0);
    e[index] = static_cast<int>(k);
    p.add_term(e, c[k]);
  }
  return p;
}

void LaurentPolynomial::add_term(const Exponents& e, const Rational& c) {
  if (sextic::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sextic::is_zero(it->second)) terms_.erase(it);
  }
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& o) const {
  if (o.nvars_ != nvars_) throw DomainError("Laurent polynomials over different variable sets");
}

int LaurentPolynomial::min_exponent(std::size_t index) const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e[index]);
  return m;
}

int LaurentPolynomial::max_exponent(std::size_t index) const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e[index]);
  return m;
}

LaurentPolynomial LaurentPolynomial::coefficient(std::size_t index, int k) const {
  LaurentPolynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] != k) continue;
    Exponents f = e;
    f[index] = 0;
    r.add_term(f, c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::substitute(std::size_t index, const LaurentPolynomial& value) const {
  check_compatible(value);
  const bool monomial = value.terms_.size() == 1;
  std::map<int, LaurentPolynomial> powers;
  LaurentPolynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    const int k = e[index];
    if (k < 0 && !monomial) throw DomainError("negative power substituted by a non-monomial");
    auto it = powers.find(k);
    if (it == powers.end()) {
      LaurentPolynomial pk(nvars_);
      if (k >= 0) {
        pk = pow(value, static_cast<unsigned>(k));
      } else {
        const auto& [ve, vc] = *value.terms_.begin();
        Exponents inv(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) inv[i] = -ve[i];
        LaurentPolynomial reciprocal(nvars_);
        reciprocal.add_term(inv, Rational(1) / vc);
        pk = pow(reciprocal, static_cast<unsigned>(-k));
      }
      it = powers.emplace(k, std::move(pk)).first;
    }
    Exponents rest = e;
    rest[index] = 0;
    LaurentPolynomial mono(nvars_);
    mono.add_term(rest, c);
    r += mono * it->second;
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::reduce_power(std::size_t index, int m, const LaurentPolynomial& replacement) const {
  check_compatible(replacement);
  if (m <= 0) throw DomainError("reduce_power needs a positive modulus");
  LaurentPolynomial r(nvars_);
  std::map<int, LaurentPolynomial> powers;
  for (const auto& [e, c] : terms_) {
    const int k = e[index];
    if (k < 0) throw DomainError("reduce_power on a negative exponent");
    const int q = k / m;
    Exponents rest = e;
    rest[index] = k % m;
    LaurentPolynomial mono(nvars_);
    mono.add_term(rest, c);
    auto it = powers.find(q);
    if (it == powers.end()) it = powers.emplace(q, pow(replacement, static_cast<unsigned>(q))).first;
    r += mono * it->second;
  }
  return r;
}

RationalPolynomial LaurentPolynomial::to_univariate(std::size_t index) const {
  std::vector<Rational> c;
  for (const auto& [e, v] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i != index && e[i] != 0) throw DomainError("to_univariate: other variables present");
    }
    if (e[index] < 0) throw DomainError("to_univariate: negative exponent");
    const auto k = static_cast<std::size_t>(e[index]);
    if (c.size() <= k) c.resize(k + 1);
    c[k] += v;
  }
  return RationalPolynomial(std::move(c));
}

Rational LaurentPolynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw DomainError("evaluation point has the wrong dimension");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term *= pow(point[i], e[i]);
    }
    acc += term;
  }
  return acc;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& s) {
  if (sextic::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_compatible(b);
  LaurentPolynomial r(a.nvars_);
  LaurentPolynomial::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned exponent) {
  auto result = LaurentPolynomial::constant(p.variables(), Rational(1));
  auto base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

LaurentPolynomial laurent_limit(const LaurentPolynomial& expr, std::size_t index, int order) {
  const auto scaled = expr * LaurentPolynomial::variable(expr.variables(), index, order);
  if (scaled.min_exponent(index) < 0) {
    throw IdentityViolation("laurent_limit: negative powers survive the scaling");
  }
  return scaled.coefficient(index, 0);
}

}  // namespace sextic
