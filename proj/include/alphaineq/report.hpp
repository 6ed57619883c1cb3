// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "alphaineq/certifier.hpp"
#include "alphaineq/harness.hpp"

namespace alphaineq {

enum class Command { verify, sweep, certify, counterexample };

enum class OutputFormat { json, csv };

struct AlphaSetting {
    enum class Kind { sampled, fixed, grid };
    Kind kind = Kind::sampled;
    double value = 1.0;
    std::vector<double> grid;
};

struct RunConfig {
    Command cmd = Command::verify;
    InequalityId id = InequalityId::young;
    FormVariant variant = FormVariant::normalized;
    Regime regime = Regime::holder;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    AlphaSetting alpha;
    std::optional<double> p;
    std::optional<double> q;
    std::optional<double> r;
    std::optional<std::string> input_path;
    OutputFormat format = OutputFormat::json;
    std::optional<std::string> out_path;
    TolerancePolicy tol;
    // certify / counterexample knobs
    std::size_t restarts = 8;
    std::size_t budget = 2000;
    std::size_t size_hint = 2;
    double delta = 0.01;
    SearchRegion region;
    BernoulliYRange y_range = BernoulliYRange::upper;
};

/// Thrown by parse_args when --help is requested; carries the help text.
struct HelpRequested {
    std::string text;
};

/// Parse a full argv (argv[0] is the program name). Throws UsageError on
/// unknown ids, conflicting or malformed flags. Honors ALPHA_INEQ_SEED as a
/// default-seed fallback; an explicit --seed wins.
RunConfig parse_args(int argc, const char* const* argv);

/// CSV instance ingestion. Scalar ids use named columns (y,m / a,b), paired
/// ids use x1..xn,y1..yn (radon accepts a trailing r column), nary uses
/// a1..an with optional p1..pn, and the multi ids read the whole file as one
/// n x m matrix under an x1..xm header. Validation failures carry the line
/// number. `fallback_r` fills radon's r when the file has no r column.
std::vector<TrialInstance> load_instances(const std::string& path, InequalityId id,
                                          Dimension dim,
                                          std::optional<double> fallback_r);

void write_instances_csv(std::ostream& os, InequalityId id,
                         std::span<const TrialInstance> instances);

struct CertifyReport {
    InequalityId id = InequalityId::young;
    FormVariant variant = FormVariant::normalized;
    Regime regime = Regime::holder;
    EvalParams params;
    AlphaSetting alpha;
    TolerancePolicy tol;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    SearchRegion region;
    std::size_t budget = 0;
    double manifold_max_gap = 0.0;
    EqualityCertificate certificate;
    bool perturb_strict = false;
    double delta = 0.0;
    double runtime_ms = 0.0;

    bool passed() const {
        return manifold_max_gap <= tol.tol_eq && certificate.converged &&
               certificate.condition_residual <= 1e-3 && perturb_strict;
    }
};

struct CounterexampleReport {
    InequalityId id = InequalityId::young;
    FormVariant variant = FormVariant::normalized;
    Regime regime = Regime::holder;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    AlphaSetting alpha;
    TolerancePolicy tol;
    bool found = false;
    std::size_t trials_searched = 0;
    std::optional<WorstCase> violation;
    std::optional<TrialInstance> shrunk;
    std::optional<Verdict> shrunk_verdict;
    double runtime_ms = 0.0;
};

// Report serialization. Output is canonical: fixed key order, reals with 17
// significant digits, byte-identical for identical inputs except runtime_ms.
void write_report_json(std::ostream& os, const SuiteReport& report);
void write_reports_json(std::ostream& os, std::span<const SuiteReport> reports);
void write_reports_csv(std::ostream& os, std::span<const SuiteReport> reports);
void write_certify_json(std::ostream& os, const CertifyReport& report);
void write_certify_csv(std::ostream& os, const CertifyReport& report);
void write_counterexample_json(std::ostream& os, const CounterexampleReport& report);
void write_counterexample_csv(std::ostream& os, const CounterexampleReport& report);

/// Full CLI pipeline. Exit codes: 0 = verified / converged, 1 = violation or
/// non-convergence, 2 = usage, ingestion or I/O error.
int run_cli(int argc, const char* const* argv);

} // namespace alphaineq
