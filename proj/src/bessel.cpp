#include "cablesym/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace cablesym {

namespace {

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Gauss-Legendre quadrature (fixed 192-point rule, generated once).
// ---------------------------------------------------------------------------

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

GaussRule make_gauss_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[static_cast<size_t>(i)] = x;
        rule.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const GaussRule& gauss192() {
    static const GaussRule rule = make_gauss_rule(192);
    return rule;
}

template <typename F>
double integrate(F&& f, double a, double b) {
    const GaussRule& rule = gauss192();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

// ---------------------------------------------------------------------------
// Ascending series.
// ---------------------------------------------------------------------------

struct SeriesResult {
    double value = 0.0;
    double cancellation = 0.0;  // max |term| / |sum|
    bool ok = false;
};

SeriesResult j_series(double nu, double s) {
    SeriesResult res;
    const double q = 0.25 * s * s;
    double term = std::pow(0.5 * s, nu) / std::tgamma(nu + 1.0);
    if (!std::isfinite(term)) return res;
    double sum = term;
    double max_term = std::abs(term);
    for (int k = 0; k < 500; ++k) {
        const double den = (k + 1.0) * (k + 1.0 + nu);
        if (std::abs(den) < 1e-12) return res;  // next to a gamma pole
        term *= -q / den;
        sum += term;
        max_term = std::max(max_term, std::abs(term));
        if (std::abs(term) <= 1e-17 * std::abs(sum) && k > 2) {
            res.value = sum;
            res.cancellation = max_term / std::max(std::abs(sum), 1e-300);
            res.ok = std::isfinite(sum);
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Hankel large-argument expansion (DLMF 10.17): both J and N from the same
// P, Q sums, truncated at the smallest term.
// ---------------------------------------------------------------------------

struct HankelPQ {
    double p = 0.0, q = 0.0;
};

HankelPQ hankel_pq(double nu, double s) {
    const double mu = 4.0 * nu * nu;
    HankelPQ pq;
    pq.p = 1.0;
    double c = (mu - 1.0) / (8.0 * s);  // c_k, starting at k = 1
    pq.q = c;
    double prev = std::abs(c);
    int sign = -1;  // (-1)^k pattern across the pair (c_{2k}, c_{2k+1})
    for (int k = 2; k < 80; k += 2) {
        const double c_even = c * (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * s * k);
        const double c_odd =
            c_even * (mu - (2.0 * k + 1.0) * (2.0 * k + 1.0)) / (8.0 * s * (k + 1.0));
        if (std::abs(c_even) > prev) break;  // divergent tail reached
        pq.p += sign * c_even;
        pq.q += sign * c_odd;
        if (std::abs(c_even) < 1e-17 && std::abs(c_odd) < 1e-17) break;
        prev = std::abs(c_even);
        c = c_odd;
        sign = -sign;
    }
    return pq;
}

double j_asymptotic(double nu, double s) {
    const HankelPQ pq = hankel_pq(nu, s);
    const double omega = s - (0.5 * nu + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * s)) * (std::cos(omega) * pq.p - std::sin(omega) * pq.q);
}

double y_asymptotic(double nu, double s) {
    const HankelPQ pq = hankel_pq(nu, s);
    const double omega = s - (0.5 * nu + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * s)) * (std::sin(omega) * pq.p + std::cos(omega) * pq.q);
}

// ---------------------------------------------------------------------------
// Schlaefli integral representation,
//   J_nu(s) = (1/pi) int_0^pi cos(nu q - s sin q) dq
//             - sin(nu pi)/pi int_0^inf exp(-nu t - s sinh t) dt,
// valid for real nu and s > 0. The quadrature branch is only entered for
// s of order 10 and above, where the tail integrand decays fast.
// ---------------------------------------------------------------------------

double tail_cutoff(double nu, double s) {
    // Smallest T with s sinh(T) + nu T >= 745, found by fixed point.
    double t = std::asinh(760.0 / s) + 0.5;
    for (int it = 0; it < 8; ++it) {
        const double target = 745.0 + std::max(0.0, -nu) * t;
        t = std::asinh((target + 15.0) / s);
    }
    return t + 0.5;
}

double j_integral(double nu, double s) {
    const double osc =
        integrate([&](double q) { return std::cos(nu * q - s * std::sin(q)); }, 0.0, kPi);
    double tail = 0.0;
    const double snp = std::sin(nu * kPi);
    if (snp != 0.0) {
        const double cut = tail_cutoff(nu, s);
        tail = integrate([&](double t) { return std::exp(-nu * t - s * std::sinh(t)); },
                         0.0, cut);
    }
    return (osc - snp * tail) / kPi;
}

// ---------------------------------------------------------------------------
// Dispatch for arbitrary real order (negative orders feed the reflection
// formula only).
// ---------------------------------------------------------------------------

constexpr double kMaxSeriesCancellation = 3e4;

double j_any(double nu, double s) {
    if (s == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        return std::numeric_limits<double>::infinity();
    }
    if (s >= bessel_switch_point(std::abs(nu))) {
        return j_asymptotic(nu, s);
    }
    const SeriesResult ser = j_series(nu, s);
    if (ser.ok && ser.cancellation <= kMaxSeriesCancellation) {
        return ser.value;
    }
    return j_integral(nu, s);
}

double y_reflect(double nu, double s) {
    const double c = std::cos(nu * kPi);
    const double sn = std::sin(nu * kPi);
    return (j_any(nu, s) * c - j_any(-nu, s)) / sn;
}

double y_any(double nu, double s) {
    if (s >= bessel_switch_point(nu)) {
        return y_asymptotic(nu, s);
    }
    const double nearest = std::round(nu);
    if (std::abs(nu - nearest) < 1e-6) {
        constexpr double eps = 1e-6;
        return 0.5 * (y_reflect(nearest + eps, s) + y_reflect(nearest - eps, s));
    }
    return y_reflect(nu, s);
}

}  // namespace

BesselOrder::BesselOrder(double a) : alpha(a) {
    if (!std::isfinite(a) || a < 0.0 || a > 20.0) {
        throw UnsupportedOrderError("BesselOrder: order must lie in [0, 20]");
    }
}

double bessel_switch_point(double alpha) {
    return std::max(15.0, 0.6 * alpha * alpha + 4.0);
}

double bessel_j(BesselOrder order, double s) {
    if (!(s >= 0.0)) {
        throw std::domain_error("bessel_j: argument must be >= 0");
    }
    const double v = j_any(order.alpha, s);
    if (!std::isfinite(v)) {
        throw std::overflow_error("bessel_j: value overflowed");
    }
    return v;
}

double bessel_n(BesselOrder order, double s) {
    if (!(s > 0.0)) {
        throw std::domain_error("bessel_n: argument must be > 0 (log singularity at 0)");
    }
    const double v = y_any(order.alpha, s);
    if (!std::isfinite(v)) {
        throw std::overflow_error("bessel_n: value overflowed");
    }
    return v;
}

BesselOrder order_for_nu(double nu) {
    if (std::abs(nu - 2.0) < 1e-9) {
        throw RegimeError("order_for_nu: singular at nu = 2");
    }
    const double s = 2.0 - nu;
    const double radicand = 0.25 + 3.0 * nu * (5.0 * nu - 4.0) / (4.0 * s * s);
    if (radicand < 0.0) {
        throw UnsupportedOrderError("order_for_nu: negative radicand (imaginary order)");
    }
    return BesselOrder(std::sqrt(radicand));
}

}  // namespace cablesym
