#include "upg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace upg {

namespace {

// Gauss-Legendre nodes/weights on [-1,1], 5 points.
constexpr double kG5X[5] = {
    -0.9061798459386639928, -0.5384693101056830910, 0.0,
    0.5384693101056830910, 0.9061798459386639928};
constexpr double kG5W[5] = {
    0.2369268850561890875, 0.4786286704993664680, 0.5688888888888888889,
    0.4786286704993664680, 0.2369268850561890875};

struct Piece {
    double a, b, value, error;
};

// One bisection step: compare gauss5 on [a,b] against the two halves.
Piece evaluate_piece(const Integrand& f, double a, double b) {
    const double whole = gauss5(f, a, b);
    const double mid = 0.5 * (a + b);
    const double halves = gauss5(f, a, mid) + gauss5(f, mid, b);
    return {a, b, halves, std::abs(whole - halves)};
}

} // namespace

double gauss5(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 5; ++i)
        s += kG5W[i] * f(c + r * kG5X[i]);
    return r * s;
}

double gauss5_composite(const Integrand& f, const std::vector<double>& breakpoints) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        s += gauss5(f, breakpoints[i], breakpoints[i + 1]);
    return s;
}

double integrate_adaptive(const Integrand& f, const std::vector<double>& breakpoints,
                          double rel_target, double rel_fail) {
    if (breakpoints.size() < 2)
        throw std::invalid_argument("integrate_adaptive: need at least two breakpoints");

    constexpr int kMaxDepth = 42;
    constexpr std::size_t kMaxPieces = 20000;

    std::vector<Piece> pieces;
    pieces.reserve(64);
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        pieces.push_back(evaluate_piece(f, breakpoints[i], breakpoints[i + 1]));

    for (int depth = 0; depth < kMaxDepth; ++depth) {
        double total = 0.0, err = 0.0, abssum = 0.0;
        for (const auto& p : pieces) {
            total += p.value;
            err += p.error;
            abssum += std::abs(p.value);
        }
        const double scale = std::max(abssum, 1e-300);
        if (err <= rel_target * scale || pieces.size() >= kMaxPieces)
            return total;

        // Split every piece whose error exceeds its share of the budget.
        const double budget = rel_target * scale / static_cast<double>(pieces.size());
        std::vector<Piece> next;
        next.reserve(pieces.size() * 2);
        for (const auto& p : pieces) {
            if (p.error > budget && p.b - p.a > 1e-15 * std::max(std::abs(p.a), 1.0)) {
                const double mid = 0.5 * (p.a + p.b);
                next.push_back(evaluate_piece(f, p.a, mid));
                next.push_back(evaluate_piece(f, mid, p.b));
            } else {
                next.push_back(p);
            }
        }
        pieces.swap(next);
    }

    double total = 0.0, err = 0.0, abssum = 0.0;
    for (const auto& p : pieces) {
        total += p.value;
        err += p.error;
        abssum += std::abs(p.value);
    }
    const double rel = err / std::max(abssum, 1e-300);
    if (rel > rel_fail)
        throw QuadratureError("integrate_adaptive: error estimate above target after max refinement", rel);
    return total;
}

std::vector<double> layer_breakpoints_left(double a, double b, double extent,
                                           double smallest_piece) {
    std::vector<double> bp{a};
    const double len = b - a;
    if (extent > 0.0 && smallest_piece > 0.0 && smallest_piece < len) {
        double cover = std::min(extent, len);
        double step = smallest_piece;
        double pos = 0.0;
        while (pos + step < cover && bp.size() < 80) {
            pos += step;
            bp.push_back(a + pos);
            step *= 2.0;
        }
    }
    bp.push_back(b);
    return bp;
}

std::vector<double> layer_breakpoints_right(double a, double b, double extent,
                                            double smallest_piece) {
    std::vector<double> rev = layer_breakpoints_left(0.0, b - a, extent, smallest_piece);
    std::vector<double> bp;
    bp.reserve(rev.size());
    for (auto it = rev.rbegin(); it != rev.rend(); ++it)
        bp.push_back(b - *it);
    return bp;
}

} // namespace upg
