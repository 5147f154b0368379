#pragma once

namespace upg {

enum class BubbleFamily { quadratic, exponential };

// Pointwise evaluation of the exponential bubble collapses to its eps -> 0
// limit 1 - x/h once h/eps exceeds this threshold: beyond it the exponential
// factor is indistinguishable from 1 in double precision, and evaluating the
// full expression only adds cancellation noise.
inline constexpr double kExpBubbleCollapseRatio = 36.0;

/// t_e = tanh(h / (2 eps)), the fitting parameter of the exponential scheme.
double tanh_half_ratio(double h, double epsilon);

/// 1/tanh(y) with the y > 19 tail clamped to exactly 1 (difference < 2e-17).
double coth_clamped(double y);

/// The quadratic-bubble scaling beta = (3/4)(coth(h/(2 eps)) - 2 eps/h) that
/// matches the quadratic bubble average to the exponential one, making the
/// two system matrices identical.
double special_quadratic_beta(double h, double epsilon);

/// B_q(x) = (4 beta / h^2) x (h - x) on [0, h].
double eval_quadratic_bubble(double x, double h, double beta);

/// B_e(x) = (1 - e^{-x/eps}) / (1 - e^{-h/eps}) - x/h on [0, h], evaluated
/// with nonpositive exponents only; returns exactly 1 - x/h when h/eps > 36.
double eval_exponential_bubble(double x, double h, double epsilon);

/// Bubble generating function on one element together with its exact average.
struct BubbleSpec {
    BubbleFamily family;
    double beta;       // quadratic scaling; unused for the exponential family
    double epsilon;
    double h;
    double average;    // (1/h) * integral of the bubble over [0,h]

    static BubbleSpec quadratic(double h, double epsilon, double beta);
    static BubbleSpec quadratic_special(double h, double epsilon);
    static BubbleSpec exponential(double h, double epsilon);

    double eval(double x_local) const;
};

/// Closed-form (1/h) * integral of the generating bubble: 2 beta / 3 for the
/// quadratic family, 1/(2 t_e) - eps/h for the exponential one.
double bubble_average(const BubbleSpec& spec);

} // namespace upg
