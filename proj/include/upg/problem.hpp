#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace upg {

using ScalarField1D = std::function<double(double)>;
using ScalarField2D = std::function<double(double, double)>;

/// One term c * x^k * e^{a x} of a polynomial-exponential forcing.
struct PolyExpTerm {
    double coeff;
    int power;
    double rate;
};

enum class ForcingClass { general, poly_exp };

/// -eps u'' + u' = f on (0,1), u(0) = u(1) = 0.
struct Problem1D {
    double epsilon;
    ScalarField1D f;
    ScalarField1D f_prime;                 // empty when the derivative is unknown
    ForcingClass f_class = ForcingClass::general;
    std::vector<PolyExpTerm> f_terms;      // populated iff f_class == poly_exp

    bool has_f_prime() const { return static_cast<bool>(f_prime); }
};

inline double eval_poly_exp(const std::vector<PolyExpTerm>& terms, double x) {
    double s = 0.0;
    for (const auto& t : terms)
        s += t.coeff * std::pow(x, t.power) * std::exp(t.rate * x);
    return s;
}

inline double eval_poly_exp_prime(const std::vector<PolyExpTerm>& terms, double x) {
    double s = 0.0;
    for (const auto& t : terms) {
        double e = std::exp(t.rate * x);
        double p = t.rate * std::pow(x, t.power);
        if (t.power > 0) p += t.power * std::pow(x, t.power - 1);
        s += t.coeff * p * e;
    }
    return s;
}

/// Builds a Problem1D whose forcing is a sum of c*x^k*e^{ax} terms, with the
/// derivative supplied in closed form.
inline Problem1D make_poly_exp_problem(double epsilon, std::vector<PolyExpTerm> terms) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("Problem1D: epsilon must be positive");
    for (const auto& t : terms)
        if (t.power < 0)
            throw std::invalid_argument("Problem1D: negative power in forcing term");
    Problem1D p;
    p.epsilon = epsilon;
    p.f_class = ForcingClass::poly_exp;
    p.f_terms = terms;
    p.f = [terms](double x) { return eval_poly_exp(terms, x); };
    p.f_prime = [terms](double x) { return eval_poly_exp_prime(terms, x); };
    return p;
}

inline Problem1D make_general_problem(double epsilon, ScalarField1D f,
                                      ScalarField1D f_prime = {}) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("Problem1D: epsilon must be positive");
    Problem1D p;
    p.epsilon = epsilon;
    p.f = std::move(f);
    p.f_prime = std::move(f_prime);
    p.f_class = ForcingClass::general;
    return p;
}

/// -eps (u_xx + u_yy) + u_x = f on (0,1)^2, u = 0 on the boundary.
struct Problem2D {
    double epsilon;
    ScalarField2D f;
    ScalarField2D exact_u;                 // empty when no manufactured solution
    ScalarField2D exact_u_x;
    ScalarField2D exact_u_y;
    // Largest |exact_u| on the boundary; nonzero when the manufactured
    // solution does not satisfy the homogeneous Dirichlet data.
    double boundary_mismatch = 0.0;

    bool has_exact() const { return static_cast<bool>(exact_u); }
    bool has_exact_gradient() const {
        return static_cast<bool>(exact_u_x) && static_cast<bool>(exact_u_y);
    }
};

} // namespace upg
