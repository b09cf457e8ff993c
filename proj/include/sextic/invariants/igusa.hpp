#pragma once

// Igusa-Clebsch invariants of genus-two sextics, absolute invariants, the
// dictionary to the even Siegel modular forms psi4, psi6, chi10, chi12, and
// the forms chi35^2 and Q cutting out the Humbert surfaces H1 and H4.

#include <array>

#include "sextic/errors.hpp"
#include "sextic/exactmath/polynomial.hpp"
#include "sextic/exactmath/rational.hpp"

namespace sextic {

template <class T>
struct IgusaTuple {
  T I2{};
  T I4{};
  T I6{};
  T I10{};

  /// I10 = 0: the sextic has a repeated root.
  bool degenerate() const { return I10 == T{}; }

  friend bool operator==(const IgusaTuple&, const IgusaTuple&) = default;
};

using IgusaInvariants = IgusaTuple<Rational>;

template <class T>
struct AbsoluteTuple {
  T j1{};
  T j2{};
  T j3{};

  friend bool operator==(const AbsoluteTuple&, const AbsoluteTuple&) = default;
};

using AbsoluteInvariants = AbsoluteTuple<Rational>;

struct SiegelForms {
  Rational psi4;
  Rational psi6;
  Rational chi10;
  Rational chi12;

  friend bool operator==(const SiegelForms&, const SiegelForms&) = default;
};

struct DerivedForms {
  Rational chi35_squared;
  Rational Q;
};

struct HumbertFlags {
  bool on_H1 = false;
  bool on_H4 = false;
};

/// Y^2 = X (X - 1) (X - lambda1) (X - lambda2) (X - lambda3).
struct RosenhainCurve {
  Rational lambda1;
  Rational lambda2;
  Rational lambda3;

  /// Pairwise distinct and different from 0 and 1.
  bool valid() const;
  RationalPolynomial quintic() const;
};

/// Closed-form Igusa-Clebsch invariants of the Rosenhain quintic. Instantiated
/// for Rational and Complex.
template <class T>
IgusaTuple<T> igusa_from_rosenhain(const T& l1, const T& l2, const T& l3);

IgusaInvariants igusa_from_rosenhain(const RosenhainCurve& c);

/// Invariants of y^2 = f(x) for deg f in {5, 6}, from the Clebsch transvectant
/// invariants of the binary sextic. Throws DomainError on other degrees.
IgusaInvariants igusa_from_sextic(const RationalPolynomial& f);

/// (I2^5, I4 I2^3, I6 I2^2) / I10. Throws DomainError when I10 = 0.
template <class T>
AbsoluteTuple<T> absolute_invariants(const IgusaTuple<T>& I) {
  if (I.I10 == T{}) throw DomainError("absolute invariants need I10 != 0");
  const T i2sq = T(I.I2 * I.I2);
  const T i2cu = T(i2sq * I.I2);
  return {T(i2cu * i2sq / I.I10), T(I.I4 * i2cu / I.I10), T(I.I6 * i2sq / I.I10)};
}

/// Representative (1, j2/j1, j3/j1, 1/j1) of the weighted class with the given
/// absolute invariants. Throws DomainError when j1 = 0.
IgusaInvariants igusa_representative(const AbsoluteInvariants& j);

/// (r^2 I2, r^4 I4, r^6 I6, r^10 I10).
IgusaInvariants weighted_rescale(const IgusaInvariants& I, const Rational& r);

/// Equality in weighted projective space with weights (2, 4, 6, 10) over C.
bool weighted_equivalent(const IgusaInvariants& a, const IgusaInvariants& b);

SiegelForms siegel_from_igusa(const IgusaInvariants& I);

/// Throws ProductLocusError when chi10 = 0.
IgusaInvariants igusa_from_siegel(const SiegelForms& s);

/// Q as the weight-60 polynomial in psi4, psi6, chi10, chi12.
Rational q_polynomial(const SiegelForms& s);

/// chi10 * Q / (2^12 3^9).
Rational chi35_squared(const SiegelForms& s);

DerivedForms q_form(const SiegelForms& s);

HumbertFlags humbert_predicates(const SiegelForms& s);

}  // namespace sextic
