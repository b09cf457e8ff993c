#pragma once

#include <vector>

#include "sextic/exactmath/polynomial.hpp"

namespace sextic {

struct RootOptions {
  /// Residual bound, relative to sum_i |a_i| |r|^i at each root.
  double tol = 1e-10;
  int max_iterations = 500;
};

/// All deg(p) complex roots with multiplicity (Aberth-Ehrlich simultaneous
/// iteration followed by Newton polishing). Throws NumericError carrying the
/// relative residuals when the iteration cap is hit or a residual exceeds tol.
std::vector<Complex> complex_roots(const ComplexPolynomial& p, const RootOptions& options = {});

/// Roots of a rational polynomial; the variable is first rescaled by a power
/// of two so that the coefficients are balanced before conversion to binary64.
std::vector<Complex> complex_roots(const RationalPolynomial& p, const RootOptions& options = {});

/// Relative residual |p(r)| / sum_i |a_i| |r|^i.
double relative_residual(const ComplexPolynomial& p, Complex r);

}  // namespace sextic
