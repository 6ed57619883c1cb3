// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "alphaineq/tolerance.hpp"

namespace alphaineq {

enum class Direction { le, ge };

enum class Status { holds, equality, violation };

/// Outcome of one inequality evaluation. The gap is signed as
/// claimed-larger-side minus claimed-smaller-side, so "holds" is always
/// gap >= -tol regardless of direction. scale = max(|lhs|, |rhs|, 1)
/// normalizes the tolerances.
struct Verdict {
    double lhs;
    double rhs;
    double gap;
    double scale;
    Direction direction;
    Status status;
};

const char* to_string(Direction d) noexcept;
const char* to_string(Status s) noexcept;

Verdict make_verdict(double lhs, double rhs, Direction dir,
                     const TolerancePolicy& tol);

} // namespace alphaineq
