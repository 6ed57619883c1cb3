// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "alphaineq/errors.hpp"

namespace alphaineq {

/// Fractal dimension alpha in (0, 1]. alpha = 1 recovers ordinary real
/// arithmetic. Two values are combinable only when their dimensions compare
/// bit-equal; there is no fuzzy matching.
class Dimension {
public:
    explicit Dimension(double alpha) : alpha_(alpha) {
        if (!(alpha > 0.0) || !(alpha <= 1.0) || !std::isfinite(alpha))
            throw DomainError("dimension alpha must lie in (0, 1]");
    }

    double alpha() const noexcept { return alpha_; }

    friend bool operator==(const Dimension&, const Dimension&) = default;

private:
    double alpha_;
};

inline Dimension classical_dimension() { return Dimension(1.0); }

} // namespace alphaineq
