#pragma once

// Jacobian elliptic fibrations y^2 = x^3 + A(t) x^2 + B(t) x + C(t) over the
// projective t-line, Kodaira classification of their singular fibers, and the
// explicit models on the Kummer and Shioda-Inose surfaces of a genus-two curve.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sextic/exactmath/laurent.hpp"
#include "sextic/exactmath/polynomial.hpp"
#include "sextic/invariants/igusa.hpp"

namespace sextic {

struct WeierstrassModel {
  RationalPolynomial A;
  RationalPolynomial B;
  RationalPolynomial C;
  /// Homogenization weight N: g2, g3, Delta are forms of degree 4N, 6N, 12N.
  /// 0 picks the smallest admissible N; K3 models use 2.
  int weight = 0;
};

/// Y^2 = 4 X^3 - g2 X - g3 after completing the cube and Y = 2y.
struct ShortForm {
  RationalPolynomial g2;
  RationalPolynomial g3;
  /// g2^3 - 27 g3^2.
  RationalPolynomial delta;
};

ShortForm short_form(const WeierstrassModel& m);

enum class KodairaKind { I, IStar, II, III, IV, IIStar, IIIStar, IVStar };

struct KodairaType {
  KodairaKind kind = KodairaKind::I;
  int n = 0;

  /// "I3", "I5*", "II", "III*", ...
  std::string name() const;
  int euler() const;
  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

/// Stand-in order for an identically vanishing coefficient.
inline constexpr int kInfiniteOrder = 1 << 20;

struct VanishingOrders {
  int g2 = 0;
  int g3 = 0;
  int delta = 0;
  friend bool operator==(const VanishingOrders&, const VanishingOrders&) = default;
};

/// Kodaira table lookup. Throws NonMinimalModel when the orders reach
/// (4, 6) or match no row; delta = 0 gives I0.
KodairaType kodaira_type(const VanishingOrders& v);

struct FiberLocation {
  bool at_infinity = false;
  /// Set for rational points.
  std::optional<Rational> exact;
  /// Monic squarefree polynomial whose roots all carry this fiber type.
  RationalPolynomial bundle;
  Complex numeric{};
};

struct KodairaFiber {
  KodairaType type;
  FiberLocation location;
  VanishingOrders orders;
};

struct FiberCensus {
  std::vector<KodairaFiber> fibers;
  int weight = 0;
  int euler_sum = 0;

  /// Type name -> number of fibers.
  std::map<std::string, int> counts() const;
};

/// Singular fibers over the affine line (exact, via gcd chains with
/// derivatives of the squarefree discriminant) and at infinity. Throws
/// DomainError when Delta vanishes identically, NonMinimalModel on
/// non-minimal points, and IdentityViolation if the Euler numbers do not add
/// up to 12 N.
FiberCensus classify_fibers(const WeierstrassModel& m);

struct FibrationParams {
  Rational a;
  Rational b;
  Rational c;
  Rational d;
  Rational e;

  /// a = -I4/12, b = (I2 I4 - 3 I6)/108, c = -1, d = I2/24, e = I10/4.
  static FibrationParams from_igusa(const IgusaInvariants& I);
};

/// Fibration on the Kummer surface with two-torsion section; B(t) cuts out the
/// I2 fibers.
WeierstrassModel kumfib2_model(const IgusaInvariants& I);

/// y^2 = x^3 + (t^3 + a t + b) x^2 + e (c t + d) x.
WeierstrassModel alternate_model(const FibrationParams& p);

/// y^2 = x^3 + (t^3 - psi4/48 t - psi6/864) x^2 - (4 chi10 t - chi12) x.
WeierstrassModel alternate_model_ftheory(const SiegelForms& s);

/// y^2 = x^3 + t^3 (a t + c) x + t^5 (e t^2 + b t + d).
WeierstrassModel standard_model(const FibrationParams& p);

/// Y^2 = q(X, t) with q quartic in X; coefficients[k] multiplies X^k.
struct QuarticModel {
  std::array<RationalPolynomial, 5> coefficients;
};

/// Y^2 = t (1 - X + t) prod_i (lambda_i^2 - lambda_i X + t).
QuarticModel kummer_quartic_model(const RosenhainCurve& c);

/// Jacobian y^2 = x^3 - 27 I x - 27 J from the quartic invariants
/// I = 12ae - 3bd + c^2, J = 72ace + 9bcd - 27ad^2 - 27eb^2 - 2c^3.
WeierstrassModel quartic_jacobian(const QuarticModel& q);

/// K(Y, X, t) in variables (Y, X, t).
LaurentPolynomial kummer_polynomial(const RosenhainCurve& c);

/// lim eps^10 K(eta / eps^5, 1 / eps^2, xi / eps^2) in variables (eta, xi, eps).
LaurentPolynomial sextic_recovery_limit(const RosenhainCurve& c);

/// eta^2 - F(xi) in variables (eta, xi, eps).
LaurentPolynomial rosenhain_curve_equation(const RosenhainCurve& c);

struct EllipticPoint {
  Rational x;
  Rational y;
  bool infinity = false;

  static EllipticPoint at_infinity() { return {Rational(0), Rational(0), true}; }
  friend bool operator==(const EllipticPoint&, const EllipticPoint&) = default;
};

/// y^2 - (x^3 + A x^2 + B x + C) on the fiber over t; 0 for infinity.
Rational fiber_residual(const WeierstrassModel& m, const EllipticPoint& pt, const Rational& t);

/// Target of the fibrewise two-isogeny: y^2 = x^3 - 2A x^2 + (A^2 - 4B) x.
WeierstrassModel isogenous_model(const FibrationParams& p);

/// (x, y) -> (y^2 / x^2, y (e(ct + d) - x^2) / x^2); (0, 0) and infinity map to infinity.
EllipticPoint isogeny(const EllipticPoint& pt, const Rational& t, const FibrationParams& p);

/// (X, Y) -> (Y^2 / (4 X^2), Y ((t^3 + a t + b)^2 - 4 e (c t + d) - X^2) / (8 X^2)).
EllipticPoint dual_isogeny(const EllipticPoint& pt, const Rational& t, const FibrationParams& p);

/// Translation by the two-torsion section (0, 0):
/// (x, y) -> (e(ct + d) / x, -y e(ct + d) / x^2).
EllipticPoint nikulin_involution(const EllipticPoint& pt, const Rational& t, const FibrationParams& p);

struct FixedPoint {
  Complex t;
  Complex x;
};

/// Fixed points (y = 0, x^2 = e(ct + d)) of the involution on the alternate
/// model: the nodes of the I1 fibers, at the roots of (t^3 + at + b)^2 - 4e(ct + d).
std::vector<FixedPoint> nikulin_fixed_points(const FibrationParams& p);

/// Checks std(x/e, t x^2/e^2, -x^2 y/e^3) = x^4/e^6 alt(t, x, y) as an
/// identity of Laurent polynomials. Throws DomainError when e = 0.
bool standard_alternate_transform_holds(const FibrationParams& p);

/// (t^3 + a t + b)^2 - 4 e (c t + d).
RationalPolynomial alternate_radicand(const FibrationParams& p);

/// Bracket whose vanishing (times e^3) makes two I1 fibers collide.
Rational qvanish_bracket(const FibrationParams& p);

/// Fixed ratio disc_t(radicand) / (e^3 bracket).
inline constexpr long kQvanishConstant = 4096;

/// a c^2 d - b c^3 + d^3.
Rational type_iii_polynomial(const FibrationParams& p);

/// 2 psi6 chi10^3 + 9 psi4 chi10^2 chi12 - 27 chi12^3.
Rational type_iii_siegel(const SiegelForms& s);

/// e^3 (a c^2 d - b c^3 + d^3) = kTypeIIIConstant * type_iii_siegel through the dictionary.
Rational type_iii_constant();

struct DegenerationFlags {
  bool su2_enhancement = false;
  bool type_III = false;
  bool so32_enhancement = false;
};

DegenerationFlags degeneration_predicates(const FibrationParams& p);

/// On Siegel input: su2 <=> Q = 0, type III <=> chi10 != 0 and the Siegel
/// expression vanishes, so32 <=> chi10 = 0.
DegenerationFlags degeneration_predicates(const SiegelForms& s);

}  // namespace sextic
