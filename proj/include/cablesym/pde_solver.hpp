#pragma once

/// Finite-difference machinery for the passive cable equation
///
///   c_M dV/dt = (1/(4 r_L d(x))) d/dx (d(x)^2 dV/dx) - V/r_M
///
/// on a dendrite from the (1+a*x)^nu family: conservative (flux-form)
/// spatial operator, Crank-Nicolson time stepping, and an independent
/// residual oracle that certifies whether a sampled field solves the PDE.

#include <vector>

#include "cablesym/geometry.hpp"
#include "cablesym/grid.hpp"

namespace cablesym {

/// Tridiagonal matrix; lower[0] and upper[n-1] are unused.
struct TriDiag {
    int n = 0;
    std::vector<double> lower, diag, upper;

    explicit TriDiag(int n_)
        : n(n_),
          lower(static_cast<size_t>(n_), 0.0),
          diag(static_cast<size_t>(n_), 0.0),
          upper(static_cast<size_t>(n_), 0.0) {}

    std::vector<double> apply(const std::vector<double>& v) const;
};

/// Solves T x = rhs by the Thomas algorithm. The factorization is kept so
/// repeated solves against the same matrix cost O(n) each.
class TriDiagSolver {
public:
    explicit TriDiagSolver(const TriDiag& t);

    /// Throws std::runtime_error (tagged with `context`) on a vanishing pivot.
    std::vector<double> solve(std::vector<double> rhs, const char* context = "") const;

private:
    int n_;
    std::vector<double> lower_, pivot_, upper_;
};

/// Assembles the spatial operator L with
///   (L V)_i = (1/(4 r_L c_M d_i h^2)) * [d_{i+1/2}^2 (V_{i+1}-V_i)
///                                        - d_{i-1/2}^2 (V_i-V_{i-1})]
///             - V_i/(r_M c_M)
/// on interior rows. SealedEnd rows are the zero-flux half-cell balance,
/// Clamped rows are identically zero (the stepper pins the value).
/// The grid must lie inside the geometry's validated domain.
TriDiag assemble_spatial_operator(const DendriteGeometry& geom, const CableParams& params,
                                  const Grid1D& grid, const BoundaryCondition& bc);

/// Crank-Nicolson integration of dV/dt = L V from v0, recording every step
/// (the first recorded row is the initial state at t_begin). The number of
/// steps is round(t_end/dt), at least one.
Field solve(const DendriteGeometry& geom, const CableParams& params, const Grid1D& grid,
            const BoundaryCondition& bc, const std::vector<double>& v0, double dt,
            double t_end, double t_begin = 0.0);

/// Pointwise cable-equation residual
///   c_M dV/dt - (1/(4 r_L d)) d/dx(d^2 dV/dx) + V/r_M
/// over interior space-time samples (central differences in x and t), plus
/// aggregate norms. This is the oracle used to certify analytic and
/// transformed solutions; it never looks at boundary rows, so the solver's
/// boundary treatment cannot contaminate it.
struct ResidualReport {
    int nt_interior = 0;
    int nx_interior = 0;
    std::vector<double> pointwise;  // |residual|, row-major (time, space)
    double rms = 0.0;
    double max_abs = 0.0;
};

ResidualReport residual(const DendriteGeometry& geom, const CableParams& params,
                        const Field& field);

}  // namespace cablesym
