#pragma once

#include <stdexcept>
#include <string>

namespace upg {

/// Composite quadrature failed to reach its error target; carries the
/// best error estimate achieved so the caller can report it.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved_estimate)
        : std::runtime_error(what), estimate_(achieved_estimate) {}

    double achieved_estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace upg
