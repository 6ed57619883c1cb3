// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "alphaineq/errors.hpp"

namespace alphaineq {

/// Relative tolerances applied against a verdict's scale, plus an absolute
/// floor for gaps near zero. Must satisfy 0 < abs_floor <= tol_rel <=
/// tol_eq < 1.
struct TolerancePolicy {
    double tol_rel = 1e-9;
    double tol_eq = 1e-8;
    double abs_floor = 1e-12;

    void validate() const {
        if (!(abs_floor > 0.0 && abs_floor <= tol_rel && tol_rel <= tol_eq &&
              tol_eq < 1.0))
            throw DomainError(
                "tolerance policy must satisfy 0 < abs_floor <= tol_rel <= tol_eq < 1");
    }
};

} // namespace alphaineq
