#include "cablesym/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace cablesym {

Grid1D Grid1D::uniform(double x_min, double x_max, int n) {
    if (n < 5) {
        throw std::invalid_argument("Grid1D: need at least 5 nodes");
    }
    if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
        throw std::invalid_argument("Grid1D: invalid interval");
    }
    Grid1D g;
    g.n = n;
    g.x0 = x_min;
    g.h = (x_max - x_min) / static_cast<double>(n - 1);
    return g;
}

std::vector<double> Grid1D::nodes() const {
    std::vector<double> xs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) xs[static_cast<size_t>(i)] = x(i);
    return xs;
}

void Field::validate() const {
    const size_t expect = times.size() * static_cast<size_t>(grid.n);
    if (values.size() != expect) {
        throw std::invalid_argument("Field: values shape != (nt, nx)");
    }
    if (scalar_kind == ScalarKind::Complex && values_im.size() != expect) {
        throw std::invalid_argument("Field: imaginary plane shape != (nt, nx)");
    }
    if (scalar_kind == ScalarKind::Real && !values_im.empty()) {
        throw std::invalid_argument("Field: real field carries an imaginary plane");
    }
    for (size_t k = 1; k < times.size(); ++k) {
        if (!(times[k] > times[k - 1])) {
            throw std::invalid_argument("Field: times must be strictly increasing");
        }
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("Field: non-finite value");
    }
    for (double v : values_im) {
        if (!std::isfinite(v)) throw std::invalid_argument("Field: non-finite value");
    }
}

Field sample_field(const SpaceTimeFn& fn, const Grid1D& grid, double t_begin,
                   double t_end, int nt) {
    if (nt < 2 || !(t_begin < t_end)) {
        throw std::invalid_argument("sample_field: need nt >= 2 and t_begin < t_end");
    }
    Field f;
    f.grid = grid;
    f.times.resize(static_cast<size_t>(nt));
    f.values.resize(static_cast<size_t>(nt) * grid.n);
    const double dt = (t_end - t_begin) / static_cast<double>(nt - 1);
    for (int k = 0; k < nt; ++k) {
        const double t = t_begin + dt * k;
        f.times[static_cast<size_t>(k)] = t;
        for (int i = 0; i < grid.n; ++i) {
            f.at(k, i) = fn(grid.x(i), t);
        }
    }
    return f;
}

}  // namespace cablesym
