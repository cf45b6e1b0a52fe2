#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace anisoheat {

// Complex kernel samples on a uniform spatial grid (row-major over axes).
// Coordinates are the source symbol's diagonal x'-coordinates; grid point j
// along axis k sits at lo[k] + j*h[k]. Immutable after construction.
struct KernelGrid {
    int dim = 0;
    std::vector<double> lo;     // per-axis first grid point
    std::vector<double> h;      // per-axis spacing
    std::vector<int> n;         // per-axis point count
    double t = 0.0;
    std::vector<std::complex<double>> values;

    // meta
    double mass = 0.0;          // cell-volume-weighted sum over the full internal box
    double mass_error = 0.0;    // |mass - 1| for plain kernels
    double peak = 0.0;          // max |K| over the internal box
    double outer_shell_max = 0.0; // max |K| on the outermost internal shell
    double mu = 0.0;
    std::string source_id;
    std::string normalization = "Finv(2pi)^-d";

    long size() const {
        long s = 1;
        for (int nk : n) s *= nk;
        return s;
    }
    double hi(int axis) const { return lo[axis] + h[axis] * (n[axis] - 1); }

    long index(const std::vector<int>& idx) const {
        long lin = 0;
        for (int k = 0; k < dim; ++k) lin = lin * n[k] + idx[k];
        return lin;
    }
    std::complex<double> at(const std::vector<int>& idx) const { return values[index(idx)]; }

    // coordinates of linear index
    std::vector<double> point(long lin) const {
        std::vector<double> x(dim);
        for (int k = dim - 1; k >= 0; --k) {
            x[k] = lo[k] + h[k] * (lin % n[k]);
            lin /= n[k];
        }
        return x;
    }

    // Separable Catmull-Rom cubic interpolation; clamps outside the grid
    // (kernel is negligible there by construction).
    std::complex<double> interpolate(const Eigen::VectorXd& x) const;
};

} // namespace anisoheat
