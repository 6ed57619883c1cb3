// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "alphaineq/harness.hpp"

namespace alphaineq {

/// Vector length / matrix shape used when a certification routine has to
/// build instances itself. Tuple-parametrized ids take their column count
/// from the tuple instead of `cols`.
struct ShapeHint {
    std::size_t rows = 2;
    std::size_t cols = 2;
};

/// Coordinate box for gap minimization. lo/hi apply to every instance
/// coordinate unless the per-coordinate vectors are filled. The search
/// itself runs in log coordinates so positivity is free.
struct SearchRegion {
    double lo = 0.1;
    double hi = 10.0;
    std::vector<double> los;  // optional, one entry per coordinate
    std::vector<double> his;
};

struct EqualityCertificate {
    InequalityId id = InequalityId::young;
    EvalParams params;
    double alpha = 1.0;
    std::vector<double> argmin;  // flattened instance coordinates
    double gap_at_argmin = 0.0;
    double scale_at_argmin = 1.0;
    double condition_residual = 0.0;
    std::size_t evaluations = 0;
    std::size_t restarts = 0;
    bool converged = false;
};

/// Deterministic point on the stated equality manifold (Young: b = a^(p/q);
/// n-ary: a_i = t^(1/p_i); paired/multi/Radon: proportional sequences;
/// Holder uses the classical proportionality of |x_i|^p and |y_i|^q).
/// Bernoulli has no stated equality condition: UsageError.
InstanceSpec manifold_point(InequalityId id, const EvalParams& params, Dimension dim,
                            ShapeHint shape, TrialRng& rng);

/// Max |gap|/scale over `samples` manifold points.
double check_equality_manifold(InequalityId id, const EvalParams& params,
                               Dimension dim, std::size_t samples,
                               ShapeHint shape = {}, std::uint64_t seed = 2026,
                               const TolerancePolicy& tol = {});

/// Residual of the paper's equality condition at an instance, relative and
/// dimensionless (least-squares proportionality fit for the paired forms).
double equality_condition_residual(InequalityId id, const EvalParams& params,
                                   const InstanceSpec& inst);

/// Derivative-free simplex descent (reflection 1, expansion 2, contraction
/// 0.5, shrink 0.5) on gap/scale over the region, restarted from
/// quasi-random points. converged means gap_at_argmin <= tol_eq * scale.
EqualityCertificate minimize_gap(InequalityId id, const EvalParams& params,
                                 Dimension dim, ShapeHint shape, SearchRegion region,
                                 std::size_t restarts, std::size_t budget,
                                 const TolerancePolicy& tol = {});

/// True iff multiplying the first instance coordinate by (1 + delta) opens a
/// gap beyond tol_eq * scale.
bool perturb_check(InequalityId id, const EvalParams& params,
                   const InstanceSpec& manifold_pt, double delta,
                   const TolerancePolicy& tol = {});

} // namespace alphaineq
