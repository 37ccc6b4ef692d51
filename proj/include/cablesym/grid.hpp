#pragma once

/// Uniform 1-D grids and sampled space-time fields.

#include <complex>
#include <functional>
#include <vector>

namespace cablesym {

/// Uniform spatial grid with n >= 5 nodes, node i at x0 + i*h.
struct Grid1D {
    int n = 0;
    double x0 = 0.0;
    double h = 0.0;

    static Grid1D uniform(double x_min, double x_max, int n);

    double x(int i) const { return x0 + h * static_cast<double>(i); }
    double x_last() const { return x(n - 1); }
    std::vector<double> nodes() const;
};

enum class ScalarKind { Real, Complex };

/// Solution samples V(x_i, t_k) on a Grid1D x strictly increasing times.
/// Row k holds the spatial slice at times[k]. The imaginary plane is
/// allocated only for complex fields.
struct Field {
    Grid1D grid;
    std::vector<double> times;
    std::vector<double> values;     // row-major (time, space)
    std::vector<double> values_im;  // empty for real fields
    ScalarKind scalar_kind = ScalarKind::Real;

    int nt() const { return static_cast<int>(times.size()); }
    int nx() const { return grid.n; }

    double& at(int k, int i) { return values[static_cast<size_t>(k) * grid.n + i]; }
    double at(int k, int i) const { return values[static_cast<size_t>(k) * grid.n + i]; }
    double& at_im(int k, int i) { return values_im[static_cast<size_t>(k) * grid.n + i]; }
    double at_im(int k, int i) const {
        return values_im[static_cast<size_t>(k) * grid.n + i];
    }

    /// Throws std::invalid_argument on shape mismatch, non-increasing
    /// times or non-finite entries.
    void validate() const;
};

using SpaceTimeFn = std::function<double(double x, double t)>;

/// Sample fn on grid x uniformly spaced times [t_begin, t_end] (nt >= 2).
Field sample_field(const SpaceTimeFn& fn, const Grid1D& grid, double t_begin,
                   double t_end, int nt);

/// Boundary treatment per endpoint: SealedEnd imposes zero flux through
/// the end face, Clamped pins the value to zero.
enum class BcKind { SealedEnd, Clamped };

struct BoundaryCondition {
    BcKind left = BcKind::SealedEnd;
    BcKind right = BcKind::SealedEnd;
};

}  // namespace cablesym
