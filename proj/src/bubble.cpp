#include "upg/bubble.hpp"

#include <cmath>
#include <stdexcept>

namespace upg {

namespace {

void require_positive(double h, double epsilon, const char* who) {
    if (!(h > 0.0) || !(epsilon > 0.0))
        throw std::domain_error(std::string(who) + ": h and epsilon must be positive");
}

} // namespace

double tanh_half_ratio(double h, double epsilon) {
    require_positive(h, epsilon, "tanh_half_ratio");
    return std::tanh(0.5 * h / epsilon);
}

double coth_clamped(double y) {
    if (!(y > 0.0))
        throw std::domain_error("coth_clamped: argument must be positive");
    if (y > 19.0) return 1.0;
    return 1.0 / std::tanh(y);
}

double special_quadratic_beta(double h, double epsilon) {
    require_positive(h, epsilon, "special_quadratic_beta");
    const double y = 0.5 * h / epsilon;
    if (y < 0.05) {
        // coth(y) - 1/y = y/3 - y^3/45 + 2 y^5/945 - y^7/4725 + ...; the direct
        // difference loses digits to cancellation for small y.
        const double y2 = y * y;
        return 0.75 * y * (1.0 / 3.0 + y2 * (-1.0 / 45.0 + y2 * (2.0 / 945.0 - y2 / 4725.0)));
    }
    return 0.75 * (coth_clamped(y) - 2.0 * epsilon / h);
}

double eval_quadratic_bubble(double x, double h, double beta) {
    if (!(h > 0.0))
        throw std::domain_error("eval_quadratic_bubble: h must be positive");
    if (x < 0.0 || x > h)
        throw std::domain_error("eval_quadratic_bubble: x outside [0,h]");
    return (4.0 * beta / (h * h)) * x * (h - x);
}

double eval_exponential_bubble(double x, double h, double epsilon) {
    require_positive(h, epsilon, "eval_exponential_bubble");
    if (x < 0.0 || x > h)
        throw std::domain_error("eval_exponential_bubble: x outside [0,h]");
    if (h / epsilon > kExpBubbleCollapseRatio)
        return 1.0 - x / h;
    const double num = -std::expm1(-x / epsilon);   // 1 - e^{-x/eps}
    const double den = -std::expm1(-h / epsilon);
    return num / den - x / h;
}

BubbleSpec BubbleSpec::quadratic(double h, double epsilon, double beta) {
    require_positive(h, epsilon, "BubbleSpec::quadratic");
    if (!(beta > 0.0))
        throw std::invalid_argument("BubbleSpec::quadratic: beta must be positive");
    return {BubbleFamily::quadratic, beta, epsilon, h, 2.0 * beta / 3.0};
}

BubbleSpec BubbleSpec::quadratic_special(double h, double epsilon) {
    return quadratic(h, epsilon, special_quadratic_beta(h, epsilon));
}

BubbleSpec BubbleSpec::exponential(double h, double epsilon) {
    require_positive(h, epsilon, "BubbleSpec::exponential");
    // Written as 2/3 * special beta so the quadratic-special and exponential
    // averages agree bitwise, which the matched-matrix identity relies on.
    const double avg = (2.0 / 3.0) * special_quadratic_beta(h, epsilon);
    if (!(avg > 0.0))
        throw std::invalid_argument("BubbleSpec::exponential: nonpositive bubble average");
    return {BubbleFamily::exponential, 0.0, epsilon, h, avg};
}

double BubbleSpec::eval(double x_local) const {
    return family == BubbleFamily::quadratic
               ? eval_quadratic_bubble(x_local, h, beta)
               : eval_exponential_bubble(x_local, h, epsilon);
}

double bubble_average(const BubbleSpec& spec) {
    return spec.average;
}

} // namespace upg
