#include "cablesym/pde_solver.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cablesym {

std::vector<double> TriDiag::apply(const std::vector<double>& v) const {
    if (static_cast<int>(v.size()) != n) {
        throw std::invalid_argument("TriDiag::apply: size mismatch");
    }
    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double s = diag[i] * v[i];
        if (i > 0) s += lower[i] * v[i - 1];
        if (i < n - 1) s += upper[i] * v[i + 1];
        out[static_cast<size_t>(i)] = s;
    }
    return out;
}

TriDiagSolver::TriDiagSolver(const TriDiag& t)
    : n_(t.n), lower_(t.lower), pivot_(t.diag), upper_(t.upper) {
    // LU sweep: pivot_[i] becomes the diagonal of U, lower_[i] the L multiplier.
    for (int i = 1; i < n_; ++i) {
        const double p = pivot_[i - 1];
        if (p == 0.0 || !std::isfinite(p)) {
            throw std::runtime_error("TriDiagSolver: singular matrix during factorization");
        }
        const double m = lower_[i] / p;
        lower_[i] = m;
        pivot_[i] -= m * upper_[i - 1];
    }
    if (pivot_[n_ - 1] == 0.0 || !std::isfinite(pivot_[n_ - 1])) {
        throw std::runtime_error("TriDiagSolver: singular matrix during factorization");
    }
}

std::vector<double> TriDiagSolver::solve(std::vector<double> rhs, const char* context) const {
    if (static_cast<int>(rhs.size()) != n_) {
        throw std::invalid_argument("TriDiagSolver::solve: size mismatch");
    }
    for (int i = 1; i < n_; ++i) rhs[i] -= lower_[i] * rhs[i - 1];
    for (int i = n_ - 1; i >= 0; --i) {
        const double p = pivot_[i];
        if (p == 0.0) {
            std::ostringstream msg;
            msg << "TriDiagSolver: singular system " << context;
            throw std::runtime_error(msg.str());
        }
        double s = rhs[i];
        if (i < n_ - 1) s -= upper_[i] * rhs[i + 1];
        rhs[i] = s / p;
    }
    return rhs;
}

namespace {

void check_grid_in_domain(const DendriteGeometry& geom, const Grid1D& grid) {
    const double slack = 1e-12 * (1.0 + std::abs(grid.h));
    if (grid.x0 < geom.x_min() - slack || grid.x_last() > geom.x_max() + slack) {
        throw std::domain_error("grid extends outside the geometry's validated domain");
    }
}

}  // namespace

TriDiag assemble_spatial_operator(const DendriteGeometry& geom, const CableParams& params,
                                  const Grid1D& grid, const BoundaryCondition& bc) {
    check_grid_in_domain(geom, grid);
    const int n = grid.n;
    const double h = grid.h;
    const double leak = 1.0 / (params.r_m * params.c_m);
    const double c4 = 4.0 * params.r_l * params.c_m;

    TriDiag L(n);
    // Interior rows: flux form with face diameters d(x_i +/- h/2).
    for (int i = 1; i < n - 1; ++i) {
        const double dp = geom.diameter(grid.x(i) + 0.5 * h);
        const double dm = geom.diameter(grid.x(i) - 0.5 * h);
        const double scale = 1.0 / (c4 * geom.diameter(grid.x(i)) * h * h);
        L.lower[i] = scale * dm * dm;
        L.upper[i] = scale * dp * dp;
        L.diag[i] = -scale * (dp * dp + dm * dm) - leak;
    }
    // Left row.
    if (bc.left == BcKind::SealedEnd) {
        // Half-cell balance on [x_0, x_0 + h/2] with zero flux through x_0.
        const double dp = geom.diameter(grid.x0 + 0.5 * h);
        const double scale = 2.0 / (c4 * geom.diameter(grid.x0) * h * h);
        L.upper[0] = scale * dp * dp;
        L.diag[0] = -scale * dp * dp - leak;
    }
    // Right row.
    if (bc.right == BcKind::SealedEnd) {
        const double dm = geom.diameter(grid.x_last() - 0.5 * h);
        const double scale = 2.0 / (c4 * geom.diameter(grid.x_last()) * h * h);
        L.lower[n - 1] = scale * dm * dm;
        L.diag[n - 1] = -scale * dm * dm - leak;
    }
    // Clamped rows stay identically zero.
    return L;
}

Field solve(const DendriteGeometry& geom, const CableParams& params, const Grid1D& grid,
            const BoundaryCondition& bc, const std::vector<double>& v0, double dt,
            double t_end, double t_begin) {
    if (static_cast<int>(v0.size()) != grid.n) {
        throw std::invalid_argument("solve: initial values must match the grid");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("solve: dt must be positive");
    }
    for (double v : v0) {
        if (!std::isfinite(v)) throw std::invalid_argument("solve: non-finite initial value");
    }

    const TriDiag L = assemble_spatial_operator(geom, params, grid, bc);
    const int n = grid.n;

    // Crank-Nicolson: (I - dt/2 L) V^{k+1} = (I + dt/2 L) V^k.
    TriDiag lhs(n), rhs(n);
    for (int i = 0; i < n; ++i) {
        lhs.lower[i] = -0.5 * dt * L.lower[i];
        lhs.diag[i] = 1.0 - 0.5 * dt * L.diag[i];
        lhs.upper[i] = -0.5 * dt * L.upper[i];
        rhs.lower[i] = 0.5 * dt * L.lower[i];
        rhs.diag[i] = 1.0 + 0.5 * dt * L.diag[i];
        rhs.upper[i] = 0.5 * dt * L.upper[i];
    }
    const TriDiagSolver solver(lhs);

    const long nsteps = std::max(1L, std::lround((t_end - t_begin) / dt));

    Field out;
    out.grid = grid;
    out.times.reserve(static_cast<size_t>(nsteps) + 1);
    out.values.reserve((static_cast<size_t>(nsteps) + 1) * n);

    std::vector<double> v = v0;
    if (bc.left == BcKind::Clamped) v[0] = 0.0;
    if (bc.right == BcKind::Clamped) v[static_cast<size_t>(n) - 1] = 0.0;

    auto record = [&](double t) {
        out.times.push_back(t);
        out.values.insert(out.values.end(), v.begin(), v.end());
    };
    record(t_begin);

    for (long k = 1; k <= nsteps; ++k) {
        std::vector<double> b = rhs.apply(v);
        std::ostringstream ctx;
        ctx << "(step " << k << ")";
        v = solver.solve(std::move(b), ctx.str().c_str());
        if (bc.left == BcKind::Clamped) v[0] = 0.0;
        if (bc.right == BcKind::Clamped) v[static_cast<size_t>(n) - 1] = 0.0;
        for (double vi : v) {
            if (!std::isfinite(vi)) {
                std::ostringstream msg;
                msg << "solve: non-finite state at step " << k;
                throw std::runtime_error(msg.str());
            }
        }
        record(t_begin + dt * static_cast<double>(k));
    }
    return out;
}

ResidualReport residual(const DendriteGeometry& geom, const CableParams& params,
                        const Field& field) {
    field.validate();
    const int nt = field.nt();
    const int nx = field.nx();
    if (nt < 3 || nx < 5) {
        throw std::invalid_argument("residual: need >= 3 time levels and >= 5 nodes");
    }
    check_grid_in_domain(geom, field.grid);
    const bool complex_field = field.scalar_kind == ScalarKind::Complex;

    const double h = field.grid.h;
    const double c_m = params.c_m;
    const double inv_rm = 1.0 / params.r_m;
    const double c4 = 4.0 * params.r_l;

    ResidualReport rep;
    rep.nt_interior = nt - 2;
    rep.nx_interior = nx - 2;
    rep.pointwise.resize(static_cast<size_t>(rep.nt_interior) * rep.nx_interior);

    // Face diameters are time-independent; precompute d_i and d_{i+1/2}.
    std::vector<double> d(static_cast<size_t>(nx)), dhalf_sq(static_cast<size_t>(nx));
    for (int i = 0; i < nx; ++i) d[static_cast<size_t>(i)] = geom.diameter(field.grid.x(i));
    for (int i = 0; i + 1 < nx; ++i) {
        const double df = geom.diameter(field.grid.x(i) + 0.5 * h);
        dhalf_sq[static_cast<size_t>(i)] = df * df;
    }

    auto plane_residual = [&](auto value) {
        // value(k, i) -> one scalar plane of the field.
        return [&, value](int k, int i) {
            const double tm = field.times[static_cast<size_t>(k) - 1];
            const double t0 = field.times[static_cast<size_t>(k)];
            const double tp = field.times[static_cast<size_t>(k) + 1];
            const double dtm = t0 - tm;
            const double dtp = tp - t0;
            // Three-point derivative, second order also on nonuniform spacing.
            const double dvdt =
                (value(k + 1, i) - value(k, i)) / dtp * (dtm / (dtm + dtp)) +
                (value(k, i) - value(k - 1, i)) / dtm * (dtp / (dtm + dtp));
            const double flux =
                (dhalf_sq[static_cast<size_t>(i)] * (value(k, i + 1) - value(k, i)) -
                 dhalf_sq[static_cast<size_t>(i) - 1] * (value(k, i) - value(k, i - 1))) /
                (h * h);
            return c_m * dvdt - flux / (c4 * d[static_cast<size_t>(i)]) +
                   inv_rm * value(k, i);
        };
    };
    auto re = plane_residual([&](int k, int i) { return field.at(k, i); });
    auto im = plane_residual([&](int k, int i) { return field.at_im(k, i); });

    double sum_sq = 0.0;
    for (int k = 1; k + 1 < nt; ++k) {
        for (int i = 1; i + 1 < nx; ++i) {
            double r = std::abs(re(k, i));
            if (complex_field) r = std::hypot(r, im(k, i));
            rep.pointwise[static_cast<size_t>(k - 1) * rep.nx_interior + (i - 1)] = r;
            sum_sq += r * r;
            if (r > rep.max_abs) rep.max_abs = r;
        }
    }
    rep.rms = std::sqrt(sum_sq / static_cast<double>(rep.pointwise.size()));
    return rep;
}

}  // namespace cablesym
