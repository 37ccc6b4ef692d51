#pragma once

/// Bessel functions of the first (J) and second (N, Neumann) kind for real
/// non-negative order, as required by the general-taper voltage modes.
///
/// Evaluation strategy per (alpha, s):
///   - ascending power series while its cancellation stays benign,
///   - large-argument (Hankel) asymptotic expansion for
///     s >= bessel_switch_point(alpha),
///   - Schlaefli integral representation (Gauss-Legendre quadrature) in
///     between, where neither expansion reaches full accuracy in doubles.
/// N uses the reflection formula for non-integer order; orders within 1e-6
/// of an integer are evaluated at offsets +/-1e-6 and averaged, which is
/// accurate to roughly 1e-9 there (the only loss in the scheme).
///
/// Supported: order in [0, 20], argument in [0, ~50] at relative accuracy
/// <= 1e-10 (away from the near-integer Neumann case above).

#include "cablesym/errors.hpp"

namespace cablesym {

/// Validated real Bessel order in [0, 20].
struct BesselOrder {
    double alpha;
    explicit BesselOrder(double a);
};

/// J_alpha(s) for s >= 0.
double bessel_j(BesselOrder order, double s);

/// N_alpha(s) for s > 0. Throws std::domain_error at s = 0 (logarithmic
/// singularity) and std::overflow_error when the value exceeds doubles.
double bessel_n(BesselOrder order, double s);

/// Argument above which the Hankel expansion is used for this order.
double bessel_switch_point(double alpha);

/// Order of the general-nu mode, sqrt(1/4 + 3 nu (5 nu - 4)/(4 (2-nu)^2)).
/// The radicand equals ((2 nu - 1)/(2 - nu))^2 and so is never negative for
/// real nu; the guard below is kept for the contract's sake.
BesselOrder order_for_nu(double nu);

}  // namespace cablesym
