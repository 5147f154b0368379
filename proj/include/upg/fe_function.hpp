#pragma once

#include <stdexcept>
#include <vector>

#include "upg/mesh.hpp"
#include "upg/problem.hpp"

namespace upg {

/// Continuous piecewise-linear function on a uniform mesh with zero boundary
/// values. Only the n-1 interior nodal values are stored.
struct PiecewiseLinearFE1D {
    UniformMesh1D mesh;
    std::vector<double> coeffs;   // coeffs[j-1] = value at x_j, j = 1..n-1

    PiecewiseLinearFE1D(UniformMesh1D m, std::vector<double> c)
        : mesh(m), coeffs(std::move(c)) {
        if (static_cast<int>(coeffs.size()) != mesh.interior_count())
            throw std::invalid_argument("PiecewiseLinearFE1D: coefficient count != n-1");
    }

    static PiecewiseLinearFE1D zero(UniformMesh1D m) {
        return PiecewiseLinearFE1D(m, std::vector<double>(m.interior_count(), 0.0));
    }

    // Nodal value including the implicit boundary zeros, j = 0..n.
    double node_value(int j) const {
        if (j <= 0 || j >= mesh.n) return 0.0;
        return coeffs[static_cast<std::size_t>(j) - 1];
    }

    double value_at(double x) const {
        if (x < 0.0 || x > 1.0)
            throw std::domain_error("PiecewiseLinearFE1D: x outside [0,1]");
        int k = mesh.element_of(x);                    // element [x_k, x_{k+1}]
        double t = (x - mesh.node(k)) / mesh.h;
        return (1.0 - t) * node_value(k) + t * node_value(k + 1);
    }

    // Derivative on the element containing x (piecewise constant).
    double slope_at(double x) const {
        if (x < 0.0 || x > 1.0)
            throw std::domain_error("PiecewiseLinearFE1D: x outside [0,1]");
        int k = mesh.element_of(x);
        return (node_value(k + 1) - node_value(k)) / mesh.h;
    }
};

inline double eval_fe_1d(const PiecewiseLinearFE1D& v, double x) {
    return v.value_at(x);
}

/// coeffs[j-1] = u(x_j) at the interior nodes.
inline PiecewiseLinearFE1D nodal_interpolant_1d(const ScalarField1D& u,
                                                const UniformMesh1D& mesh) {
    std::vector<double> c(mesh.interior_count());
    for (int j = 1; j < mesh.n; ++j)
        c[static_cast<std::size_t>(j) - 1] = u(mesh.node(j));
    return PiecewiseLinearFE1D(mesh, std::move(c));
}

/// Tensor-product bilinear function on a uniform grid of the unit square,
/// zero on the boundary. Entry (l,k) multiplies phi_l(x)*phi_k(y) and is
/// stored x-fastest: coeffs[(k-1)*(n-1) + (l-1)].
struct PiecewiseLinearFE2D {
    UniformMesh1D mesh;
    std::vector<double> coeffs;

    PiecewiseLinearFE2D(UniformMesh1D m, std::vector<double> c)
        : mesh(m), coeffs(std::move(c)) {
        const std::size_t want = static_cast<std::size_t>(m.interior_count()) *
                                 static_cast<std::size_t>(m.interior_count());
        if (coeffs.size() != want)
            throw std::invalid_argument("PiecewiseLinearFE2D: coefficient count != (n-1)^2");
    }

    static PiecewiseLinearFE2D zero(UniformMesh1D m) {
        const std::size_t sz = static_cast<std::size_t>(m.interior_count()) *
                               static_cast<std::size_t>(m.interior_count());
        return PiecewiseLinearFE2D(m, std::vector<double>(sz, 0.0));
    }

    // Nodal value with implicit boundary zeros, l,k = 0..n.
    double node_value(int l, int k) const {
        if (l <= 0 || l >= mesh.n || k <= 0 || k >= mesh.n) return 0.0;
        return coeffs[static_cast<std::size_t>(k - 1) * mesh.interior_count() + (l - 1)];
    }

    double value_at(double x, double y) const {
        if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)
            throw std::domain_error("PiecewiseLinearFE2D: point outside [0,1]^2");
        int i = mesh.element_of(x);
        int j = mesh.element_of(y);
        double s = (x - mesh.node(i)) / mesh.h;
        double t = (y - mesh.node(j)) / mesh.h;
        return (1 - s) * (1 - t) * node_value(i, j) + s * (1 - t) * node_value(i + 1, j) +
               (1 - s) * t * node_value(i, j + 1) + s * t * node_value(i + 1, j + 1);
    }

    // Gradient of the bilinear interpolant at (x,y).
    void gradient_at(double x, double y, double& gx, double& gy) const {
        int i = mesh.element_of(x);
        int j = mesh.element_of(y);
        double s = (x - mesh.node(i)) / mesh.h;
        double t = (y - mesh.node(j)) / mesh.h;
        double u00 = node_value(i, j), u10 = node_value(i + 1, j);
        double u01 = node_value(i, j + 1), u11 = node_value(i + 1, j + 1);
        gx = ((1 - t) * (u10 - u00) + t * (u11 - u01)) / mesh.h;
        gy = ((1 - s) * (u01 - u00) + s * (u11 - u10)) / mesh.h;
    }
};

inline PiecewiseLinearFE2D nodal_interpolant_2d(const ScalarField2D& u,
                                                const UniformMesh1D& mesh) {
    const int m = mesh.interior_count();
    std::vector<double> c(static_cast<std::size_t>(m) * m);
    for (int k = 1; k < mesh.n; ++k)
        for (int l = 1; l < mesh.n; ++l)
            c[static_cast<std::size_t>(k - 1) * m + (l - 1)] = u(mesh.node(l), mesh.node(k));
    return PiecewiseLinearFE2D(mesh, std::move(c));
}

} // namespace upg
