#include "cablesym/geometry.hpp"

#include <cmath>
#include <sstream>

namespace cablesym {

namespace {

constexpr double kParabolicBand = 1e-9;

bool finite(double v) { return std::isfinite(v); }

}  // namespace

CableParams::CableParams(double c_m_, double r_m_, double r_l_)
    : c_m(c_m_), r_m(r_m_), r_l(r_l_) {
    if (!(finite(c_m) && finite(r_m) && finite(r_l)) || c_m <= 0.0 || r_m <= 0.0 ||
        r_l <= 0.0) {
        throw std::invalid_argument("CableParams: c_m, r_m, r_l must be finite and positive");
    }
}

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::Cylindrical: return "cylindrical";
        case Regime::Parabolic: return "parabolic";
        case Regime::General: return "general";
    }
    return "?";
}

DendriteGeometry::DendriteGeometry(double d0, double a, double nu, double x_min,
                                   double x_max)
    : d0_(d0), a_(a), nu_(nu), x_min_(x_min), x_max_(x_max) {
    if (!(finite(d0) && finite(a) && finite(nu) && finite(x_min) && finite(x_max))) {
        throw std::invalid_argument("DendriteGeometry: parameters must be finite");
    }
    if (d0 <= 0.0) {
        throw std::invalid_argument("DendriteGeometry: d0 must be positive");
    }
    if (!(x_min < x_max)) {
        throw std::invalid_argument("DendriteGeometry: x_min must be < x_max");
    }
    // 1 + a*x is affine, so checking the endpoints covers the whole interval.
    if (1.0 + a * x_min <= 0.0 || 1.0 + a * x_max <= 0.0) {
        std::ostringstream msg;
        msg << "DendriteGeometry: 1 + a*x must stay positive on [" << x_min << ", "
            << x_max << "] (a = " << a << ")";
        throw std::invalid_argument(msg.str());
    }
}

Regime DendriteGeometry::regime() const {
    if (a_ == 0.0 || nu_ == 0.0) return Regime::Cylindrical;
    if (std::abs(nu_ - 2.0) < kParabolicBand) return Regime::Parabolic;
    return Regime::General;
}

double DendriteGeometry::diameter(double x) const {
    const double u = 1.0 + a_ * x;
    if (nu_ == 0.0) return d0_;
    if (u <= 0.0) {
        throw std::domain_error("diameter: 1 + a*x <= 0");
    }
    return d0_ * std::pow(u, nu_);
}

double DendriteGeometry::z_general(double x) const {
    if (a_ == 0.0 || std::abs(nu_ - 2.0) < kParabolicBand) {
        throw RegimeError("z_general: undefined for a = 0 or nu = 2");
    }
    const double u = 1.0 + a_ * x;
    if (u <= 0.0) {
        throw std::domain_error("z_general: 1 + a*x <= 0");
    }
    const double p = 1.0 - 0.5 * nu_;
    return std::pow(u, p) / (a_ * p);
}

double DendriteGeometry::z_parabolic(double x) const {
    if (regime() != Regime::Parabolic) {
        throw RegimeError("z_parabolic: geometry is not in the parabolic regime");
    }
    const double u = 1.0 + a_ * x;
    if (u <= 0.0) {
        throw std::domain_error("z_parabolic: 1 + a*x <= 0");
    }
    return std::log(u);
}

double DendriteGeometry::x_from_z_general(double z) const {
    if (a_ == 0.0 || std::abs(nu_ - 2.0) < kParabolicBand) {
        throw RegimeError("x_from_z_general: undefined for a = 0 or nu = 2");
    }
    const double p = 1.0 - 0.5 * nu_;
    const double u = std::pow(a_ * p * z, 1.0 / p);
    return (u - 1.0) / a_;
}

double DendriteGeometry::x_from_z_parabolic(double z) const {
    if (regime() != Regime::Parabolic) {
        throw RegimeError("x_from_z_parabolic: geometry is not in the parabolic regime");
    }
    return std::expm1(z) / a_;
}

double effective_mass(const DendriteGeometry& geom, const CableParams& params) {
    const double m0 = 2.0 * params.r_l * params.c_m / geom.d0();
    if (geom.regime() == Regime::Parabolic) {
        return m0 / (geom.a() * geom.a());
    }
    return m0;
}

double coupling_g(const DendriteGeometry& geom, const CableParams& params) {
    const double nu = geom.nu();
    if (std::abs(nu - 2.0) < 1e-9) {
        throw RegimeError("coupling_g: singular at nu = 2");
    }
    const double s = 2.0 - nu;
    return 3.0 * geom.d0() * nu * (5.0 * nu - 4.0) /
           (16.0 * params.r_l * params.c_m * s * s);
}

double diffusivity(const DendriteGeometry& geom, const CableParams& params) {
    return geom.d0() / (4.0 * params.r_l * params.c_m);
}

double parabolic_diffusivity(const DendriteGeometry& geom, const CableParams& params) {
    return geom.a() * geom.a() * geom.d0() / (4.0 * params.c_m * params.r_l);
}

}  // namespace cablesym
