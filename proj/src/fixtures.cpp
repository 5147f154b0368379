#include "upg/fixtures.hpp"

#include <cmath>
#include <stdexcept>

namespace upg {

ScalarField1D fixture_f1_exact(double epsilon) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("fixture_f1_exact: epsilon must be positive");
    const double denom = -std::expm1(-1.0 / epsilon);   // 1 - e^{-1/eps}
    return [epsilon, denom](double x) {
        const double layer = std::exp((x - 1.0) / epsilon) * (-std::expm1(-x / epsilon));
        return x - layer / denom;
    };
}

ScalarField1D fixture_f1_exact_prime(double epsilon) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("fixture_f1_exact_prime: epsilon must be positive");
    const double denom = -std::expm1(-1.0 / epsilon);
    return [epsilon, denom](double x) {
        return 1.0 - std::exp((x - 1.0) / epsilon) / (epsilon * denom);
    };
}

namespace {

void check_example1_epsilon(double epsilon) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("fixture_example1_v: epsilon must be positive");
    if (epsilon == 1.0)
        throw std::domain_error("fixture_example1_v: coefficient 1/(1-epsilon) is singular at epsilon = 1");
    if (epsilon > 1.0)
        throw std::domain_error("fixture_example1_v: requires epsilon < 1");
}

} // namespace

ScalarField1D fixture_example1_v(double epsilon) {
    check_example1_epsilon(epsilon);
    const double e1 = std::exp(1.0);
    const double scale = 1.0 / (1.0 - epsilon);
    // (e - 1) / (1 - e^{-1/eps}), the layer amplitude
    const double amp = (e1 - 1.0) / (-std::expm1(-1.0 / epsilon));
    return [epsilon, e1, scale, amp](double x) {
        const double layer = std::expm1((x - 1.0) / epsilon);   // e^{(x-1)/eps} - 1
        return scale * (std::exp(x) - e1 - amp * layer);
    };
}

ScalarField1D fixture_example1_v_prime(double epsilon) {
    check_example1_epsilon(epsilon);
    const double e1 = std::exp(1.0);
    const double scale = 1.0 / (1.0 - epsilon);
    const double amp = (e1 - 1.0) / (-std::expm1(-1.0 / epsilon));
    return [epsilon, scale, amp](double x) {
        return scale * (std::exp(x) - amp * std::exp((x - 1.0) / epsilon) / epsilon);
    };
}

Problem1D problem_f1(double epsilon) {
    return make_poly_exp_problem(epsilon, {{1.0, 0, 0.0}});
}

Problem1D problem_ex(double epsilon) {
    return make_poly_exp_problem(epsilon, {{1.0, 0, 1.0}});
}

} // namespace upg
