#pragma once

#include "upg/problem.hpp"

namespace upg {

// Exact solutions of -eps u'' + u' = f with homogeneous Dirichlet data,
// written so that only nonpositive exponents are evaluated (e^{1/eps}
// overflows in double precision already for eps < 1/709).

/// Exact solution for f = 1:  u(x) = x - e^{(x-1)/eps} (1 - e^{-x/eps}) / (1 - e^{-1/eps}).
ScalarField1D fixture_f1_exact(double epsilon);

/// Derivative of the f = 1 solution.
ScalarField1D fixture_f1_exact_prime(double epsilon);

/// Exact solution for f = e^x (the 1D factor of the 2D boundary-layer example).
/// Requires 0 < epsilon < 1; the coefficient 1/(1-eps) is singular at eps = 1.
ScalarField1D fixture_example1_v(double epsilon);

/// Derivative of the f = e^x solution.
ScalarField1D fixture_example1_v_prime(double epsilon);

/// Ready-made 1D problems pairing the forcing with its exact solution.
Problem1D problem_f1(double epsilon);      // f = 1
Problem1D problem_ex(double epsilon);      // f = e^x

} // namespace upg
