#pragma once

#include <stdexcept>

namespace upg {

/// Uniform partition of [0,1] into n subintervals, nodes x_j = j*h.
struct UniformMesh1D {
    int n;
    double h;

    explicit UniformMesh1D(int subintervals)
        : n(subintervals), h(1.0 / subintervals) {
        if (subintervals < 2)
            throw std::invalid_argument("UniformMesh1D: need n >= 2");
    }

    double node(int j) const { return static_cast<double>(j) * h; }

    int interior_count() const { return n - 1; }

    /// Index of the subinterval [x_{k}, x_{k+1}] containing x, clamped to [0, n-1].
    int element_of(double x) const {
        int k = static_cast<int>(x / h);
        if (k < 0) k = 0;
        if (k > n - 1) k = n - 1;
        return k;
    }
};

} // namespace upg
