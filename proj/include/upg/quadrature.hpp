#pragma once

#include <functional>
#include <vector>

#include "upg/errors.hpp"

namespace upg {

using Integrand = std::function<double(double)>;

/// 5-point Gauss-Legendre on [a,b] (exact through degree 9).
double gauss5(const Integrand& f, double a, double b);

/// Composite 5-point Gauss over consecutive pieces given by breakpoints.
double gauss5_composite(const Integrand& f, const std::vector<double>& breakpoints);

/// Adaptive bisection on top of gauss5. Seeds the recursion with the given
/// breakpoints (pass {a, b} when no layer structure is known). Throws
/// QuadratureError when the error estimate stays above rel_fail * |I| after
/// max-depth refinement.
double integrate_adaptive(const Integrand& f, const std::vector<double>& breakpoints,
                          double rel_target = 1e-12, double rel_fail = 1e-9);

/// Geometrically graded breakpoints for a layer of width `scale` at the left
/// end of [a,b]: pieces smallest_piece, 2*smallest, ... up to extent, followed
/// by the smooth remainder. Valid partition of [a,b] in all cases.
std::vector<double> layer_breakpoints_left(double a, double b, double extent,
                                           double smallest_piece);

/// Same but for a layer at the right end of [a,b].
std::vector<double> layer_breakpoints_right(double a, double b, double extent,
                                            double smallest_piece);

} // namespace upg
