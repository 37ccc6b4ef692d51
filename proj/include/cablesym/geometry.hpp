#pragma once

/// Dendrite diameter profiles d(x) = d0*(1+a*x)^nu and the changes of
/// variable that map each taper regime onto a constant-coefficient problem.
///
/// All quantities are assumed given in one consistent unit system; the
/// library performs no unit conversion.

#include <string>

#include "cablesym/errors.hpp"

namespace cablesym {

/// Membrane capacitance c_M, membrane (leak) resistance r_M and
/// longitudinal resistance r_L of the passive cable.
struct CableParams {
    double c_m;
    double r_m;
    double r_l;

    CableParams(double c_m_, double r_m_, double r_l_);

    /// Membrane time constant r_M * c_M.
    double tau() const { return r_m * c_m; }
};

/// Taper classification. a = 0 is always Cylindrical (the profile is
/// constant no matter what nu says); |nu - 2| < 1e-9 counts as Parabolic
/// so the general change of variable never divides by a vanishing 1 - nu/2.
enum class Regime { Cylindrical, Parabolic, General };

const char* to_string(Regime regime);

/// A single unbranched dendrite with diameter d(x) = d0*(1+a*x)^nu on
/// [x_min, x_max]. Construction validates d0 > 0, x_min < x_max and
/// 1 + a*x > 0 across the whole domain.
class DendriteGeometry {
public:
    DendriteGeometry(double d0, double a, double nu, double x_min, double x_max);

    double d0() const { return d0_; }
    double a() const { return a_; }
    double nu() const { return nu_; }
    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }

    Regime regime() const;

    /// Diameter d0*(1+a*x)^nu. Throws std::domain_error when 1+a*x <= 0
    /// (except nu = 0, where the profile is identically d0).
    double diameter(double x) const;

    /// General-regime coordinate z = (1+a*x)^(1-nu/2) / (a*(1-nu/2)).
    /// Signed: negative for nu > 2 with a > 0. Requires a != 0 and nu
    /// away from 2.
    double z_general(double x) const;

    /// Parabolic-regime coordinate z = ln(1+a*x). Requires the Parabolic
    /// regime.
    double z_parabolic(double x) const;

    /// Inverse of z_general.
    double x_from_z_general(double z) const;

    /// Inverse of z_parabolic.
    double x_from_z_parabolic(double z) const;

    bool contains(double x) const { return x >= x_min_ && x <= x_max_; }

private:
    double d0_, a_, nu_, x_min_, x_max_;
};

/// Effective mass of the free-particle correspondence:
/// 2*r_L*c_M/d0 in the cylindrical and general regimes,
/// 2*r_L*c_M/(d0*a^2) in the parabolic one.
double effective_mass(const DendriteGeometry& geom, const CableParams& params);

/// Inverse-square coupling g = 3*d0*nu*(5nu-4) / (16*r_L*c_M*(2-nu)^2).
/// Defined for any nu away from 2 (it vanishes identically at nu = 0 and
/// nu = 4/5, where the transformed equation is free).
double coupling_g(const DendriteGeometry& geom, const CableParams& params);

/// Diffusion coefficient of the x-space equation at unit taper,
/// D = d0 / (4*r_L*c_M).
double diffusivity(const DendriteGeometry& geom, const CableParams& params);

/// Diffusion coefficient of the parabolic z-space heat equation,
/// a^2*d0 / (4*c_M*r_L).
double parabolic_diffusivity(const DendriteGeometry& geom, const CableParams& params);

}  // namespace cablesym
