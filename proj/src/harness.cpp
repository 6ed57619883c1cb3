// SPDX-License-Identifier: Apache-2.0
#include "alphaineq/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>

namespace alphaineq {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

} // namespace

std::uint64_t TrialRng::next() noexcept {
    state_ += kGolden;
    return mix64(state_);
}

double TrialRng::u01() noexcept {
    // (0, 1) strictly: 52-bit mantissa shifted into the open unit interval
    return (static_cast<double>(next() >> 12) + 0.5) * 0x1p-52;
}

std::uint64_t trial_key(std::uint64_t master_seed, std::uint64_t trial_index) noexcept {
    return mix64(master_seed ^ mix64(trial_index + kGolden));
}

Dimension sample_dimension(double u) {
    if (!(u > 0.0) || !(u < 1.0))
        throw DomainError("sample_dimension: u must lie in the open interval (0, 1)");
    return Dimension(0.001 + u * 0.999);
}

ConjugatePair sample_conjugate_pair(Regime regime, double u, double p_max) {
    if (!(u > 0.0) || !(u < 1.0))
        throw DomainError("sample_conjugate_pair: u must lie in (0, 1)");
    if (!(p_max > 1.0))
        throw DomainError("sample_conjugate_pair: p_max must exceed 1");
    if (regime == Regime::holder) {
        const double p = std::max(1.0 + u * (p_max - 1.0), 1.0 + 1e-3);
        return ConjugatePair::from_p(p);
    }
    const double p = std::min(std::max(u, 1e-3), 1.0 - 1e-3);
    return ConjugatePair::from_p(p);
}

ExponentTuple sample_exponent_tuple(std::size_t n, Regime regime,
                                    std::span<const double> draws) {
    if (n < 2) throw ShapeError("sample_exponent_tuple: n must be at least 2");
    if (draws.size() != n)
        throw ShapeError("sample_exponent_tuple: need one draw per exponent");
    std::vector<double> exps(n);
    if (regime == Regime::holder) {
        double total = 0.0;
        for (double d : draws) total += d + 1e-3;
        for (std::size_t i = 0; i < n; ++i) exps[i] = total / (draws[i] + 1e-3);
    } else {
        const double recip1 = 1.0 + draws[0] * 999.0;  // 1/p_1 in (1, 1000)
        exps[0] = 1.0 / recip1;
        const double deficit = 1.0 - recip1;  // negative
        double total = 0.0;
        for (std::size_t i = 1; i < n; ++i) total += draws[i] + 1e-3;
        for (std::size_t i = 1; i < n; ++i)
            exps[i] = total / (deficit * (draws[i] + 1e-3));
    }
    return ExponentTuple::from_exponents(std::move(exps));
}

std::vector<double> sample_magnitudes(std::size_t n, std::span<const double> draws,
                                      double lo, double hi) {
    if (n == 0) throw ShapeError("sample_magnitudes: n must be positive");
    if (!(lo > 0.0) || !(hi >= lo))
        throw DomainError("sample_magnitudes: need 0 < lo <= hi");
    if (draws.size() != n)
        throw ShapeError("sample_magnitudes: need one draw per entry");
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(llo + draws[i] * (lhi - llo));
    return out;
}

namespace {

std::size_t sample_count(TrialRng& rng, std::size_t lo, std::size_t hi) {
    const double u = rng.u01();
    const std::size_t span = hi - lo + 1;
    std::size_t k = lo + static_cast<std::size_t>(u * static_cast<double>(span));
    return std::min(k, hi);
}

std::vector<double> draw_vec(TrialRng& rng, std::size_t n) {
    std::vector<double> d(n);
    for (double& v : d) v = rng.u01();
    return d;
}

double sample_p_above_one(TrialRng& rng, double p_max) {
    return std::max(1.0 + rng.u01() * (p_max - 1.0), 1.0 + 1e-3);
}

double sample_unit_open(TrialRng& rng) {
    return std::min(std::max(rng.u01(), 1e-3), 1.0 - 1e-3);
}

bool zeroing_applies(InequalityId id, Regime regime) {
    if (regime != Regime::holder) return false;
    switch (id) {
        case InequalityId::young:
        case InequalityId::nary_young:
        case InequalityId::holder:
        case InequalityId::minkowski:
        case InequalityId::holder_multi:
        case InequalityId::minkowski_multi:
            return true;
        default:
            return false;  // ratio forms and bernoulli keep strictly positive entries
    }
}

void apply_zeroing(const SuiteConfig& cfg, TrialRng& rng, std::span<double> mags) {
    if (!zeroing_applies(cfg.id, cfg.regime) || cfg.zero_fraction <= 0.0) return;
    for (double& v : mags)
        if (rng.u01() < cfg.zero_fraction) v = 0.0;
}

std::vector<double> sample_mags(const SuiteConfig& cfg, TrialRng& rng, std::size_t n) {
    return sample_magnitudes(n, draw_vec(rng, n), cfg.mag_lo, cfg.mag_hi);
}

Dimension sample_alpha(const SuiteConfig& cfg, TrialRng& rng) {
    if (cfg.alpha.kind == AlphaPolicy::Kind::fixed) return Dimension(cfg.alpha.value);
    return sample_dimension(rng.u01());
}

} // namespace

void validate_config(const SuiteConfig& cfg) {
    if (cfg.trials < 1) throw UsageError("trials must be at least 1");
    cfg.tol.validate();
    if (!(cfg.p_max > 1.0)) throw UsageError("p_max must exceed 1");
    if (!(cfg.mag_lo > 0.0) || !(cfg.mag_hi >= cfg.mag_lo) || cfg.mag_hi > 1e6)
        throw UsageError("magnitude range must satisfy 0 < lo <= hi <= 1e6");
    if (cfg.zero_fraction < 0.0 || cfg.zero_fraction >= 1.0)
        throw UsageError("zero fraction must lie in [0, 1)");
    if (cfg.max_rows < 1 || cfg.max_cols < 2)
        throw UsageError("size bounds must allow at least 1 row and 2 columns");
    if (cfg.alpha.kind == AlphaPolicy::Kind::fixed)
        Dimension(cfg.alpha.value);  // validates (0, 1]

    const bool ratio_form =
        cfg.id == InequalityId::radon || cfg.id == InequalityId::radon_multi;
    if (ratio_form && cfg.regime == Regime::reverse)
        throw UsageError("radon forms have a single regime (0 < r < 1 < p)");
    if (cfg.fixed_r) {
        if (!ratio_form) throw UsageError("--r only applies to the radon forms");
        if (!(*cfg.fixed_r > 0.0) || !(*cfg.fixed_r < 1.0))
            throw UsageError("r must lie in (0, 1)");
    }
    if (cfg.fixed_p) {
        const double p = *cfg.fixed_p;
        switch (cfg.id) {
            case InequalityId::young:
            case InequalityId::holder:
                if (ConjugatePair::from_p(p).regime != cfg.regime)
                    throw UsageError("fixed p contradicts the requested regime");
                break;
            case InequalityId::minkowski:
            case InequalityId::minkowski_multi: {
                if (!(p > 0.0) || p == 1.0)
                    throw UsageError("p must lie in (0,1) or (1,inf)");
                const Regime reg = p > 1.0 ? Regime::holder : Regime::reverse;
                if (reg != cfg.regime)
                    throw UsageError("fixed p contradicts the requested regime");
                break;
            }
            case InequalityId::radon:
            case InequalityId::radon_multi:
                if (!(p > 1.0)) throw UsageError("radon requires p > 1");
                break;
            case InequalityId::bernoulli:
                throw UsageError("--p does not apply to bernoulli");
            case InequalityId::nary_young:
            case InequalityId::holder_multi:
                throw UsageError("exponent tuples are sampled; --p does not apply");
        }
    }
}

TrialInstance sample_instance(const SuiteConfig& cfg, TrialRng& rng) {
    EvalParams params;
    InstancePayload payload{BernoulliInstance{1.0, 0.5}};

    switch (cfg.id) {
        case InequalityId::bernoulli: {
            double lo = cfg.mag_lo, hi = cfg.mag_hi;
            if (cfg.y_range == BernoulliYRange::upper) lo = 1.0;
            if (cfg.y_range == BernoulliYRange::unit) hi = std::min(hi, 1.0 - 1e-9);
            const double y = sample_magnitudes(1, draw_vec(rng, 1), lo, hi)[0];
            const double m = cfg.regime == Regime::holder
                                 ? sample_unit_open(rng)
                                 : sample_p_above_one(rng, cfg.p_max);
            payload = BernoulliInstance{y, m};
            break;
        }
        case InequalityId::young: {
            params.pair = cfg.fixed_p ? ConjugatePair::from_p(*cfg.fixed_p)
                                      : sample_conjugate_pair(cfg.regime, rng.u01(),
                                                              cfg.p_max);
            auto mags = sample_mags(cfg, rng, 2);
            apply_zeroing(cfg, rng, mags);
            if (cfg.regime == Regime::reverse && mags[1] == 0.0) mags[1] = cfg.mag_lo;
            payload = YoungInstance{mags[0], mags[1]};
            break;
        }
        case InequalityId::nary_young: {
            const std::size_t n = sample_count(rng, 2, cfg.max_cols);
            params.tuple = sample_exponent_tuple(n, cfg.regime, draw_vec(rng, n));
            auto mags = sample_mags(cfg, rng, n);
            apply_zeroing(cfg, rng, mags);
            if (cfg.regime == Regime::reverse)
                for (double& v : mags)
                    if (v == 0.0) v = cfg.mag_lo;
            payload = NaryYoungInstance{std::move(mags)};
            break;
        }
        case InequalityId::holder: {
            const std::size_t n = sample_count(rng, 1, cfg.max_rows);
            params.pair = cfg.fixed_p ? ConjugatePair::from_p(*cfg.fixed_p)
                                      : sample_conjugate_pair(cfg.regime, rng.u01(),
                                                              cfg.p_max);
            auto x = sample_mags(cfg, rng, n);
            auto y = sample_mags(cfg, rng, n);
            apply_zeroing(cfg, rng, x);
            apply_zeroing(cfg, rng, y);
            payload = PairedInstance{std::move(x), std::move(y)};
            break;
        }
        case InequalityId::minkowski: {
            const std::size_t n = sample_count(rng, 1, cfg.max_rows);
            params.p = cfg.fixed_p ? *cfg.fixed_p
                                   : (cfg.regime == Regime::holder
                                          ? sample_p_above_one(rng, cfg.p_max)
                                          : sample_unit_open(rng));
            auto x = sample_mags(cfg, rng, n);
            auto y = sample_mags(cfg, rng, n);
            apply_zeroing(cfg, rng, x);
            apply_zeroing(cfg, rng, y);
            payload = PairedInstance{std::move(x), std::move(y)};
            break;
        }
        case InequalityId::holder_multi: {
            const std::size_t rows = sample_count(rng, 1, cfg.max_rows);
            const std::size_t cols = sample_count(rng, 2, cfg.max_cols);
            params.tuple = sample_exponent_tuple(cols, cfg.regime, draw_vec(rng, cols));
            MultiInstance m{rows, cols, sample_mags(cfg, rng, rows * cols)};
            apply_zeroing(cfg, rng, m.data);
            if (cfg.regime == Regime::reverse)
                for (double& v : m.data)
                    if (v == 0.0) v = cfg.mag_lo;
            payload = std::move(m);
            break;
        }
        case InequalityId::minkowski_multi: {
            const std::size_t rows = sample_count(rng, 1, cfg.max_rows);
            const std::size_t cols = sample_count(rng, 1, cfg.max_cols);
            params.p = cfg.fixed_p ? *cfg.fixed_p
                                   : (cfg.regime == Regime::holder
                                          ? sample_p_above_one(rng, cfg.p_max)
                                          : sample_unit_open(rng));
            MultiInstance m{rows, cols, sample_mags(cfg, rng, rows * cols)};
            apply_zeroing(cfg, rng, m.data);
            payload = std::move(m);
            break;
        }
        case InequalityId::radon: {
            const std::size_t n = sample_count(rng, 1, cfg.max_rows);
            params.p = cfg.fixed_p ? *cfg.fixed_p : sample_p_above_one(rng, cfg.p_max);
            const double r = cfg.fixed_r ? *cfg.fixed_r : sample_unit_open(rng);
            auto x = sample_mags(cfg, rng, n);
            auto y = sample_mags(cfg, rng, n);
            payload = RadonInstance{std::move(x), std::move(y), r};
            break;
        }
        case InequalityId::radon_multi: {
            const std::size_t rows = sample_count(rng, 1, cfg.max_rows);
            const std::size_t cols = sample_count(rng, 1, cfg.max_cols);
            params.p = cfg.fixed_p ? *cfg.fixed_p : sample_p_above_one(rng, cfg.p_max);
            params.r = cfg.fixed_r ? *cfg.fixed_r : sample_unit_open(rng);
            payload = MultiInstance{rows, cols, sample_mags(cfg, rng, rows * cols)};
            break;
        }
    }

    return TrialInstance{InstanceSpec{std::move(payload), sample_alpha(cfg, rng)},
                         std::move(params)};
}

namespace {

void tally(SuiteReport& report, const TrialInstance& ti, const Verdict& v,
           std::size_t index) {
    switch (v.status) {
        case Status::holds: ++report.holds; break;
        case Status::equality: ++report.equality; break;
        case Status::violation: ++report.violations; break;
    }
    if (!report.worst || v.gap < report.worst->verdict.gap) {
        report.min_gap = v.gap;
        report.worst = WorstCase{ti, v, index};
    }
}

SuiteReport report_shell(const SuiteConfig& cfg) {
    SuiteReport report;
    report.id = cfg.id;
    report.variant = cfg.variant;
    report.regime = cfg.regime;
    report.seed = cfg.seed;
    report.alpha = cfg.alpha;
    report.tol = cfg.tol;
    return report;
}

} // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
    validate_config(cfg);
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report = report_shell(cfg);
    report.trials = cfg.trials;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        TrialRng rng(trial_key(cfg.seed, t));
        TrialInstance ti = sample_instance(cfg, rng);
        const Verdict v = evaluate(cfg.id, ti.spec, ti.params, cfg.variant, cfg.tol);
        tally(report, ti, v, t);
    }
    report.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

SuiteReport run_instances(const SuiteConfig& cfg,
                          std::span<const TrialInstance> instances) {
    cfg.tol.validate();
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report = report_shell(cfg);
    report.trials = instances.size();
    for (std::size_t t = 0; t < instances.size(); ++t) {
        const Verdict v =
            evaluate(cfg.id, instances[t].spec, instances[t].params, cfg.variant, cfg.tol);
        tally(report, instances[t], v, t);
    }
    report.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

namespace {

double abs_log_sum(std::span<const double> v) {
    double s = 0.0;
    for (double t : v)
        if (t > 0.0) s += std::abs(std::log(t));
    return s;
}

double exponent_size(const EvalParams& params) {
    double s = 0.0;
    if (params.pair) s += std::abs(std::log(params.pair->p));
    if (params.p) s += std::abs(std::log(*params.p));
    if (params.tuple)
        for (double p : params.tuple->exponents) s += std::abs(std::log(std::abs(p)));
    return s;
}

} // namespace

double instance_size(const TrialInstance& ti) {
    double s = exponent_size(ti.params);
    std::visit(
        [&](const auto& payload) {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, BernoulliInstance>) {
                s += 1.0 + (payload.y > 0 ? std::abs(std::log(payload.y)) : 0.0) +
                     (payload.m > 0 ? std::abs(std::log(payload.m)) : 0.0);
            } else if constexpr (std::is_same_v<T, YoungInstance>) {
                s += 2.0 + abs_log_sum(std::array{payload.a, payload.b});
            } else if constexpr (std::is_same_v<T, NaryYoungInstance>) {
                s += static_cast<double>(payload.a.size()) + abs_log_sum(payload.a);
            } else if constexpr (std::is_same_v<T, PairedInstance>) {
                s += static_cast<double>(payload.x.size() + payload.y.size()) +
                     abs_log_sum(payload.x) + abs_log_sum(payload.y);
            } else if constexpr (std::is_same_v<T, MultiInstance>) {
                s += static_cast<double>(payload.data.size()) + abs_log_sum(payload.data);
            } else {
                static_assert(std::is_same_v<T, RadonInstance>);
                s += static_cast<double>(payload.x.size() + payload.y.size()) +
                     abs_log_sum(payload.x) + abs_log_sum(payload.y);
            }
        },
        ti.spec.payload);
    return s;
}

namespace {

// internal ordering key: the reported size plus terms for alpha and r so
// that those moves also count as progress
double internal_size(const TrialInstance& ti) {
    double s = instance_size(ti);
    s += std::abs(std::log(ti.spec.dim.alpha()));
    if (ti.params.r) s += std::abs(std::log(*ti.params.r));
    const RadonInstance* rad = std::get_if<RadonInstance>(&ti.spec.payload);
    if (rad) s += std::abs(std::log(rad->r));
    return s;
}

struct ShrinkContext {
    InequalityId id;
    FormVariant variant;
    TolerancePolicy tol;
};

bool still_violates(const ShrinkContext& ctx, const TrialInstance& ti) {
    try {
        return evaluate(ctx.id, ti.spec, ti.params, ctx.variant, ctx.tol).status ==
               Status::violation;
    } catch (const Error&) {
        return false;  // a move that breaks preconditions is simply not taken
    }
}

std::vector<std::size_t> front_half(std::size_t n) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) keep.push_back(i);
    return keep;
}

std::vector<std::size_t> back_half(std::size_t n) {
    std::vector<std::size_t> keep;
    for (std::size_t i = n / 2; i < n; ++i) keep.push_back(i);
    return keep;
}

std::vector<std::size_t> drop_one(std::size_t n, std::size_t k) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (i != k) keep.push_back(i);
    return keep;
}

template <typename T>
std::vector<T> select(const std::vector<T>& v, const std::vector<std::size_t>& keep) {
    std::vector<T> out;
    out.reserve(keep.size());
    for (std::size_t i : keep) out.push_back(v[i]);
    return out;
}

// Drop tuple entries and renormalize the reciprocals so they sum to 1 again.
// In the reverse regime index 0 must be kept.
std::optional<ExponentTuple> tuple_select(const ExponentTuple& t,
                                          const std::vector<std::size_t>& keep) {
    if (keep.size() < 2) return std::nullopt;
    if (t.regime == Regime::reverse && keep[0] != 0) return std::nullopt;
    std::vector<double> exps = select(t.exponents, keep);
    try {
        if (t.regime == Regime::holder) {
            double recip = 0.0;
            for (double p : exps) recip += 1.0 / p;
            for (double& p : exps) p *= recip;
        } else {
            const double r1 = 1.0 / exps[0];
            double rest = 0.0;
            for (std::size_t i = 1; i < exps.size(); ++i) rest += 1.0 / exps[i];
            const double scale = rest / (1.0 - r1);  // both negative-side sums
            for (std::size_t i = 1; i < exps.size(); ++i) exps[i] *= scale;
        }
        return ExponentTuple::from_exponents(std::move(exps));
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::vector<double*> magnitude_slots(TrialInstance& ti) {
    std::vector<double*> slots;
    std::visit(
        [&](auto& payload) {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, BernoulliInstance>) {
                slots = {&payload.y};
            } else if constexpr (std::is_same_v<T, YoungInstance>) {
                slots = {&payload.a, &payload.b};
            } else if constexpr (std::is_same_v<T, NaryYoungInstance>) {
                for (double& v : payload.a) slots.push_back(&v);
            } else if constexpr (std::is_same_v<T, PairedInstance>) {
                for (double& v : payload.x) slots.push_back(&v);
                for (double& v : payload.y) slots.push_back(&v);
            } else if constexpr (std::is_same_v<T, MultiInstance>) {
                for (double& v : payload.data) slots.push_back(&v);
            } else {
                for (double& v : payload.x) slots.push_back(&v);
                for (double& v : payload.y) slots.push_back(&v);
            }
        },
        ti.spec.payload);
    return slots;
}

MultiInstance multi_select(const MultiInstance& m, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
    MultiInstance out{rows.size(), cols.size(), {}};
    out.data.reserve(rows.size() * cols.size());
    for (std::size_t i : rows)
        for (std::size_t j : cols) out.data.push_back(m.at(i, j));
    return out;
}

void structural_candidates(const TrialInstance& cur, std::vector<TrialInstance>& out) {
    const InstancePayload& payload = cur.spec.payload;

    auto index_sets = [](std::size_t n) {
        std::vector<std::vector<std::size_t>> sets;
        if (n > 1) {
            sets.push_back(front_half(n));
            sets.push_back(back_half(n));
            if (n <= 8)
                for (std::size_t k = 0; k < n; ++k) sets.push_back(drop_one(n, k));
        }
        return sets;
    };

    if (const auto* nary = std::get_if<NaryYoungInstance>(&payload)) {
        for (const auto& keep : index_sets(nary->a.size())) {
            auto tuple = cur.params.tuple ? tuple_select(*cur.params.tuple, keep)
                                          : std::nullopt;
            if (!tuple) continue;
            TrialInstance cand = cur;
            cand.spec.payload = NaryYoungInstance{select(nary->a, keep)};
            cand.params.tuple = std::move(*tuple);
            out.push_back(std::move(cand));
        }
    } else if (const auto* paired = std::get_if<PairedInstance>(&payload)) {
        for (const auto& keep : index_sets(paired->x.size())) {
            TrialInstance cand = cur;
            cand.spec.payload =
                PairedInstance{select(paired->x, keep), select(paired->y, keep)};
            out.push_back(std::move(cand));
        }
    } else if (const auto* rad = std::get_if<RadonInstance>(&payload)) {
        for (const auto& keep : index_sets(rad->x.size())) {
            TrialInstance cand = cur;
            cand.spec.payload =
                RadonInstance{select(rad->x, keep), select(rad->y, keep), rad->r};
            out.push_back(std::move(cand));
        }
    } else if (const auto* multi = std::get_if<MultiInstance>(&payload)) {
        std::vector<std::size_t> all_rows(multi->rows), all_cols(multi->cols);
        for (std::size_t i = 0; i < multi->rows; ++i) all_rows[i] = i;
        for (std::size_t j = 0; j < multi->cols; ++j) all_cols[j] = j;
        for (const auto& keep : index_sets(multi->rows)) {
            TrialInstance cand = cur;
            cand.spec.payload = multi_select(*multi, keep, all_cols);
            out.push_back(std::move(cand));
        }
        for (const auto& keep : index_sets(multi->cols)) {
            TrialInstance cand = cur;
            cand.spec.payload = multi_select(*multi, all_rows, keep);
            if (cand.params.tuple) {
                auto tuple = tuple_select(*cand.params.tuple, keep);
                if (!tuple) continue;
                cand.params.tuple = std::move(*tuple);
            }
            out.push_back(std::move(cand));
        }
    }
}

void magnitude_candidates(const TrialInstance& cur, std::vector<TrialInstance>& out) {
    {
        TrialInstance cand = cur;
        bool moved = false;
        for (double* v : magnitude_slots(cand))
            if (*v > 0.0 && *v != 1.0) {
                *v = std::sqrt(*v);
                moved = true;
            }
        if (moved) out.push_back(std::move(cand));
    }
    // single entry furthest from 1
    TrialInstance cand = cur;
    auto slots = magnitude_slots(cand);
    double* worst = nullptr;
    double worst_dist = 0.0;
    for (double* v : slots)
        if (*v > 0.0) {
            const double d = std::abs(std::log(*v));
            if (d > worst_dist + 1e-15) {
                worst_dist = d;
                worst = v;
            }
        }
    if (worst && worst_dist > 1e-9) {
        *worst = std::sqrt(*worst);
        out.push_back(std::move(cand));
    }
}

double toward(double v, double target) { return 0.5 * (v + target); }

void parameter_candidates(const TrialInstance& cur, std::vector<TrialInstance>& out) {
    if (cur.spec.dim.alpha() < 1.0 - 1e-12) {
        TrialInstance cand = cur;
        cand.spec.dim = Dimension(toward(cur.spec.dim.alpha(), 1.0));
        out.push_back(std::move(cand));
    }
    if (cur.params.pair) {
        const double p = cur.params.pair->p;
        const double target = cur.params.pair->regime == Regime::holder ? 2.0 : 0.5;
        if (std::abs(p - target) > 1e-9) {
            TrialInstance cand = cur;
            cand.params.pair = ConjugatePair::from_p(toward(p, target));
            out.push_back(std::move(cand));
        }
    }
    if (cur.params.p) {
        const double p = *cur.params.p;
        const double target = p > 1.0 ? 2.0 : 0.5;
        if (std::abs(p - target) > 1e-9) {
            TrialInstance cand = cur;
            cand.params.p = toward(p, target);
            out.push_back(std::move(cand));
        }
    }
    if (cur.params.tuple) {
        const ExponentTuple& t = *cur.params.tuple;
        try {
            std::vector<double> exps = t.exponents;
            const std::size_t n = exps.size();
            if (t.regime == Regime::holder) {
                for (double& p : exps)
                    p = 1.0 / toward(1.0 / p, 1.0 / static_cast<double>(n));
            } else {
                const double r1 = toward(1.0 / exps[0], 2.0);
                double rest = 0.0;
                for (std::size_t i = 1; i < n; ++i) rest += 1.0 / exps[i];
                const double scale = rest / (1.0 - r1);
                exps[0] = 1.0 / r1;
                for (std::size_t i = 1; i < n; ++i) exps[i] *= scale;
            }
            TrialInstance cand = cur;
            cand.params.tuple = ExponentTuple::from_exponents(std::move(exps));
            out.push_back(std::move(cand));
        } catch (const Error&) {
        }
    }
    if (const auto* bern = std::get_if<BernoulliInstance>(&cur.spec.payload)) {
        const double target = bern->m < 1.0 ? 0.5 : 2.0;
        if (std::abs(bern->m - target) > 1e-9) {
            TrialInstance cand = cur;
            cand.spec.payload = BernoulliInstance{bern->y, toward(bern->m, target)};
            out.push_back(std::move(cand));
        }
    }
}

} // namespace

TrialInstance shrink(InequalityId id, FormVariant variant, const TrialInstance& start,
                     const TolerancePolicy& tol, std::size_t max_steps) {
    const ShrinkContext ctx{id, variant, tol};
    if (!still_violates(ctx, start))
        throw UsageError("shrink requires an instance whose status is violation");

    TrialInstance current = start;
    double current_size = internal_size(current);
    for (std::size_t step = 0; step < max_steps; ++step) {
        std::vector<TrialInstance> candidates;
        structural_candidates(current, candidates);
        magnitude_candidates(current, candidates);
        parameter_candidates(current, candidates);

        bool accepted = false;
        for (TrialInstance& cand : candidates) {
            const double cand_size = internal_size(cand);
            if (cand_size >= current_size - 1e-12) continue;
            if (!still_violates(ctx, cand)) continue;
            current = std::move(cand);
            current_size = cand_size;
            accepted = true;
            break;
        }
        if (!accepted) break;
    }
    return current;
}

} // namespace alphaineq
