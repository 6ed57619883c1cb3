// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "alphaineq/catalog.hpp"

namespace alphaineq {

/// Counter-based randomness: the master seed and trial index are mixed into
/// a per-trial key, so trials are independent streams and concurrent
/// execution cannot reorder results.
class TrialRng {
public:
    explicit TrialRng(std::uint64_t key) noexcept : state_(key) {}
    std::uint64_t next() noexcept;
    /// Uniform draw strictly inside (0, 1).
    double u01() noexcept;

private:
    std::uint64_t state_;
};

std::uint64_t trial_key(std::uint64_t master_seed, std::uint64_t trial_index) noexcept;

/// alpha = 0.001 + u * 0.999; the floor keeps 1/alpha bounded. u in (0,1).
Dimension sample_dimension(double u);

/// holder: p = 1 + u (p_max - 1), clamped to p >= 1 + 1e-3.
/// reverse: p = u clamped into [1e-3, 1 - 1e-3]. q = p/(p-1) in both.
ConjugatePair sample_conjugate_pair(Regime regime, double u, double p_max);

/// holder: reciprocals are normalized positive weights, so all p_i > 1.
/// reverse: 1/p_1 in (1, 1000]; the negative deficit is split by weights.
ExponentTuple sample_exponent_tuple(std::size_t n, Regime regime,
                                    std::span<const double> draws);

/// Log-uniform magnitudes in [lo, hi].
std::vector<double> sample_magnitudes(std::size_t n, std::span<const double> draws,
                                      double lo = 1e-3, double hi = 1e3);

struct AlphaPolicy {
    enum class Kind { fixed, sampled };
    Kind kind = Kind::sampled;
    double value = 1.0;

    static AlphaPolicy fixed(double alpha) { return {Kind::fixed, alpha}; }
    static AlphaPolicy sampled() { return {Kind::sampled, 1.0}; }
};

/// Bernoulli y sampling window: upper = [1, hi] (the provable domain),
/// unit = [lo, 1), full = [lo, hi].
enum class BernoulliYRange { upper, unit, full };

struct SuiteConfig {
    InequalityId id = InequalityId::young;
    FormVariant variant = FormVariant::normalized;
    Regime regime = Regime::holder;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    AlphaPolicy alpha;
    TolerancePolicy tol;
    double p_max = 8.0;
    std::optional<double> fixed_p;
    std::optional<double> fixed_r;
    double mag_lo = 1e-3;
    double mag_hi = 1e3;
    // Fraction of entries zeroed in holder-regime suites of the ids that
    // tolerate zeros; never applied in reverse regimes or to ratio forms.
    double zero_fraction = 0.05;
    std::size_t max_rows = 16;  // paired vector length / multi rows
    std::size_t max_cols = 8;   // nary size / multi columns
    BernoulliYRange y_range = BernoulliYRange::upper;
};

struct TrialInstance {
    InstanceSpec spec;
    EvalParams params;
};

struct WorstCase {
    TrialInstance instance;
    Verdict verdict;
    std::size_t trial_index = 0;
};

struct SuiteReport {
    InequalityId id = InequalityId::young;
    FormVariant variant = FormVariant::normalized;
    Regime regime = Regime::holder;
    std::size_t trials = 0;
    std::size_t holds = 0;
    std::size_t equality = 0;
    std::size_t violations = 0;
    double min_gap = 0.0;
    std::optional<WorstCase> worst;
    std::uint64_t seed = 0;
    AlphaPolicy alpha;
    TolerancePolicy tol;
    double runtime_ms = 0.0;
};

void validate_config(const SuiteConfig& cfg);

/// Draw one regime-valid instance. Fixed draw order (sizes, exponents,
/// magnitudes, r, then alpha last) so a fixed-alpha sweep sees identical
/// magnitudes across grid points.
TrialInstance sample_instance(const SuiteConfig& cfg, TrialRng& rng);

SuiteReport run_suite(const SuiteConfig& cfg);

/// Evaluate pre-built instances (file ingestion path) under one config.
SuiteReport run_instances(const SuiteConfig& cfg,
                          std::span<const TrialInstance> instances);

/// Shrink-size metric: vector lengths + sum |ln magnitude| over positive
/// magnitudes + sum |ln exponent|.
double instance_size(const TrialInstance& ti);

/// Greedy counterexample shrinking: halve vectors, drop single rows/columns,
/// move magnitudes toward 1, alpha toward 1 and exponents toward the regime
/// center, accepting only violation-preserving steps. Terminates within
/// max_steps. Throws UsageError if the input does not violate.
TrialInstance shrink(InequalityId id, FormVariant variant, const TrialInstance& start,
                     const TolerancePolicy& tol = {}, std::size_t max_steps = 1000);

} // namespace alphaineq
