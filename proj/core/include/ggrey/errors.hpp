#pragma once

#include <stdexcept>
#include <string>

namespace ggrey {

// Thrown when a series or quadrature cannot reach the requested tolerance.
// Carries the best value computed before giving up.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double partial)
        : std::runtime_error(what), partial_(partial) {}

    double partial() const noexcept { return partial_; }

private:
    double partial_;
};

// Linear-algebra style failures: indefinite covariance beyond the jitter
// budget, ill-conditioned moment matrices, non-embeddable circulants.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ggrey
