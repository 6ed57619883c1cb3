// SPDX-License-Identifier: Apache-2.0
#include "alphaineq/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "alphaineq/kernels.hpp"

namespace alphaineq {

namespace {

constexpr double kMaxMagnitude = 1e6;
constexpr double kReciprocalSumTol = 1e-12;

void validate_magnitude(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0)
        throw DomainError(std::string(what) + ": magnitudes must be finite and nonnegative");
    if (v > kMaxMagnitude)
        throw RangeError(std::string(what) + ": magnitude exceeds the supported range [0, 1e6]");
}

void validate_magnitudes(std::span<const double> v, const char* what) {
    for (double t : v) validate_magnitude(t, what);
}

bool has_positive(std::span<const double> v) {
    return std::any_of(v.begin(), v.end(), [](double t) { return t > 0.0; });
}

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// log of sum_i v_i^e over the positive entries; requires at least one
double log_pow_sum(std::span<const double> v, double e) {
    double peak = -std::numeric_limits<double>::infinity();
    for (double t : v)
        if (t > 0.0) peak = std::max(peak, e * std::log(t));
    double acc = 0.0;
    for (double t : v)
        if (t > 0.0) acc += std::exp(e * std::log(t) - peak);
    return peak + std::log(acc);
}

// (sum_i v_i^e)^c. Sampled reverse-regime exponents reach magnitudes around
// 1e3..1e4 where the direct power sum under- or overflows and the outer
// power then turns an underflow artifact into inf; those cases reroute
// through log-sum-exp.
double power_norm(std::span<const double> v, double e, double c) {
    const double s = kernels::pow_sum(v, e);
    if (s > 1e-300 && s < 1e300) return std::pow(s, c);
    if (!has_positive(v)) return std::pow(0.0, c);
    return std::exp(c * log_pow_sum(v, e));
}

// ((sum v^e_num)/(sum v^e_den))^c with the same guarded fallback
double power_ratio(std::span<const double> v, double e_num, double e_den, double c) {
    const double num = kernels::pow_sum(v, e_num);
    const double den = kernels::pow_sum(v, e_den);
    if (num > 1e-300 && num < 1e300 && den > 1e-300 && den < 1e300)
        return std::pow(num / den, c);
    return std::exp(c * (log_pow_sum(v, e_num) - log_pow_sum(v, e_den)));
}

// s_i = x_i^al + y_i^al
std::vector<double> alpha_pair_sums(std::span<const double> x,
                                    std::span<const double> y, double al) {
    std::vector<double> s(x.size()), t(x.size());
    kernels::pow_array(x, al, s);
    kernels::pow_array(y, al, t);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += t[i];
    return s;
}

// (sum_i (x_i^al + y_i^al)^p)^c via the fused kernel, rerouting as above
double pair_norm(std::span<const double> x, std::span<const double> y, double al,
                 double p, double c) {
    const double s = kernels::pow_sum_pair(x, y, al, p);
    if (s > 1e-300 && s < 1e300) return std::pow(s, c);
    return power_norm(alpha_pair_sums(x, y, al), p, c);
}

double pair_ratio(std::span<const double> x, std::span<const double> y, double al,
                  double p, double r, double c) {
    const double num = kernels::pow_sum_pair(x, y, al, p);
    const double den = kernels::pow_sum_pair(x, y, al, r);
    if (num > 1e-300 && num < 1e300 && den > 1e-300 && den < 1e300)
        return std::pow(num / den, c);
    return power_ratio(alpha_pair_sums(x, y, al), p, r, c);
}

} // namespace

const char* to_string(Regime r) noexcept {
    return r == Regime::holder ? "holder" : "reverse";
}

const char* to_string(FormVariant v) noexcept {
    return v == FormVariant::normalized ? "normalized" : "as_written";
}

const char* to_string(InequalityId id) noexcept {
    switch (id) {
        case InequalityId::bernoulli: return "bernoulli";
        case InequalityId::young: return "young";
        case InequalityId::nary_young: return "nary_young";
        case InequalityId::holder: return "holder";
        case InequalityId::minkowski: return "minkowski";
        case InequalityId::holder_multi: return "holder_multi";
        case InequalityId::minkowski_multi: return "minkowski_multi";
        case InequalityId::radon: return "radon";
        case InequalityId::radon_multi: return "radon_multi";
    }
    return "?";
}

const char* to_string(Direction d) noexcept { return d == Direction::le ? "<=" : ">="; }

const char* to_string(Status s) noexcept {
    switch (s) {
        case Status::holds: return "holds";
        case Status::equality: return "equality";
        case Status::violation: return "violation";
    }
    return "?";
}

namespace {

std::string normalize_token(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c == '-') c = '_';
    return out;
}

} // namespace

Regime parse_regime(const std::string& s) {
    const std::string t = normalize_token(s);
    if (t == "holder") return Regime::holder;
    if (t == "reverse") return Regime::reverse;
    throw UsageError("unknown regime: " + s + " (expected holder|reverse)");
}

FormVariant parse_form_variant(const std::string& s) {
    const std::string t = normalize_token(s);
    if (t == "normalized") return FormVariant::normalized;
    if (t == "as_written") return FormVariant::as_written;
    throw UsageError("unknown variant: " + s + " (expected normalized|as-written)");
}

InequalityId parse_inequality_id(const std::string& s) {
    const std::string t = normalize_token(s);
    for (InequalityId id :
         {InequalityId::bernoulli, InequalityId::young, InequalityId::nary_young,
          InequalityId::holder, InequalityId::minkowski, InequalityId::holder_multi,
          InequalityId::minkowski_multi, InequalityId::radon, InequalityId::radon_multi})
        if (t == to_string(id)) return id;
    throw UsageError("unknown inequality id: " + s);
}

ConjugatePair ConjugatePair::from_p(double p) {
    if (!std::isfinite(p) || p <= 0.0 || p == 1.0)
        throw RegimeError("conjugate exponent p must lie in (0,1) or (1,inf)");
    const double q = p / (p - 1.0);
    return ConjugatePair{p, q, p > 1.0 ? Regime::holder : Regime::reverse};
}

ConjugatePair ConjugatePair::from_pq(double p, double q) {
    ConjugatePair pair = from_p(p);
    if (!std::isfinite(q) || std::abs(1.0 / p + 1.0 / q - 1.0) > kReciprocalSumTol)
        throw RegimeError("conjugate exponents must satisfy 1/p + 1/q = 1");
    pair.q = q;
    return pair;
}

ExponentTuple ExponentTuple::from_exponents(std::vector<double> exponents) {
    if (exponents.size() < 2)
        throw ShapeError("exponent tuple needs at least two entries");
    double recip = 0.0;
    for (double p : exponents) {
        if (!std::isfinite(p) || p == 0.0)
            throw RegimeError("exponent tuple entries must be finite and nonzero");
        recip += 1.0 / p;
    }
    if (std::abs(recip - 1.0) > kReciprocalSumTol)
        throw RegimeError("exponent tuple reciprocals must sum to 1");
    const bool holder = std::all_of(exponents.begin(), exponents.end(),
                                    [](double p) { return p > 1.0; });
    bool reverse = exponents[0] > 0.0 && exponents[0] < 1.0;
    for (std::size_t i = 1; reverse && i < exponents.size(); ++i)
        reverse = exponents[i] < 0.0;
    if (!holder && !reverse)
        throw RegimeError("exponent tuple fits neither the holder nor the reverse regime");
    return ExponentTuple{std::move(exponents), holder ? Regime::holder : Regime::reverse};
}

Verdict make_verdict(double lhs, double rhs, Direction dir, const TolerancePolicy& tol) {
    tol.validate();
    const double gap = dir == Direction::le ? rhs - lhs : lhs - rhs;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    Status status;
    if (std::isnan(gap)) {
        status = Status::violation;
    } else if (!std::isfinite(gap) || !std::isfinite(scale)) {
        status = gap > 0.0 ? Status::holds : Status::violation;
    } else if (std::abs(gap) <= std::max(tol.tol_eq * scale, tol.abs_floor)) {
        status = Status::equality;
    } else if (gap >= -std::max(tol.tol_rel * scale, tol.abs_floor)) {
        status = Status::holds;
    } else {
        status = Status::violation;
    }
    return Verdict{lhs, rhs, gap, scale, dir, status};
}

Verdict eval_bernoulli(const BernoulliInstance& in, Dimension dim,
                       const TolerancePolicy& tol) {
    if (!std::isfinite(in.y) || in.y <= 0.0)
        throw DomainError("bernoulli requires y > 0");
    if (in.y > kMaxMagnitude)
        throw RangeError("bernoulli: y exceeds the supported range");
    if (!std::isfinite(in.m))
        throw DomainError("bernoulli exponent m must be finite");
    if (in.m < 0.0)
        throw RegimeError("bernoulli regimes are 0 < m < 1 and m > 1");

    const double al = dim.alpha();
    const double lhs = std::pow(in.y, al * in.m) - 1.0;
    const double d = in.y - 1.0;
    const double rhs = in.m * sgn(d) * std::pow(std::abs(d), al);

    const bool degenerate = in.m == 0.0 || in.m == 1.0;
    const Direction dir = (in.m > 1.0) ? Direction::ge : Direction::le;
    Verdict v = make_verdict(lhs, rhs, dir, tol);
    if (degenerate && v.status != Status::equality) v.status = Status::violation;
    return v;
}

Verdict eval_young(const YoungInstance& in, const ConjugatePair& pair,
                   Dimension dim, const TolerancePolicy& tol) {
    validate_magnitude(in.a, "young");
    validate_magnitude(in.b, "young");
    if (pair.regime == Regime::reverse && in.b == 0.0)
        throw PoleError("young (reverse): b = 0 under a negative exponent q");

    const double al = dim.alpha();
    const double lhs = std::pow(in.a, al) * std::pow(in.b, al);
    const double rhs = std::pow(in.a, pair.p * al) / pair.p +
                       std::pow(in.b, pair.q * al) / pair.q;
    const Direction dir =
        pair.regime == Regime::holder ? Direction::le : Direction::ge;
    return make_verdict(lhs, rhs, dir, tol);
}

Verdict eval_nary_young(const NaryYoungInstance& in, const ExponentTuple& tuple,
                        Dimension dim, const TolerancePolicy& tol) {
    if (in.a.size() != tuple.size())
        throw ShapeError("nary_young: |a| must match the exponent tuple size");
    validate_magnitudes(in.a, "nary_young");
    for (std::size_t i = 0; i < in.a.size(); ++i)
        if (tuple.exponents[i] < 0.0 && in.a[i] == 0.0)
            throw PoleError("nary_young: zero entry under a negative exponent");

    const double al = dim.alpha();
    double lhs = 1.0;
    double rhs = 0.0;
    for (std::size_t i = 0; i < in.a.size(); ++i) {
        lhs *= std::pow(in.a[i], al);
        rhs += std::pow(in.a[i], tuple.exponents[i] * al) / tuple.exponents[i];
    }
    const Direction dir =
        tuple.regime == Regime::holder ? Direction::le : Direction::ge;
    return make_verdict(lhs, rhs, dir, tol);
}

Verdict eval_holder(const PairedInstance& in, const ConjugatePair& pair,
                    Dimension dim, const TolerancePolicy& tol) {
    if (in.x.size() != in.y.size() || in.x.empty())
        throw ShapeError("holder: x and y must be nonempty and equally long");
    validate_magnitudes(in.x, "holder");
    validate_magnitudes(in.y, "holder");
    if (pair.regime == Regime::reverse)
        for (double v : in.y)
            if (v == 0.0)
                throw PoleError("holder (reverse): zero y entry under a negative exponent");

    const double al = dim.alpha();
    const double lhs = kernels::dot_pow(in.x, in.y, al);
    const double rhs = power_norm(in.x, al * pair.p, 1.0 / pair.p) *
                       power_norm(in.y, al * pair.q, 1.0 / pair.q);
    const Direction dir =
        pair.regime == Regime::holder ? Direction::le : Direction::ge;
    return make_verdict(lhs, rhs, dir, tol);
}

Verdict eval_minkowski(const PairedInstance& in, double p, Dimension dim,
                       FormVariant variant, const TolerancePolicy& tol) {
    if (!std::isfinite(p) || p <= 0.0 || p == 1.0)
        throw RegimeError("minkowski: p must lie in (0,1) or (1,inf)");
    if (in.x.size() != in.y.size() || in.x.empty())
        throw ShapeError("minkowski: x and y must be nonempty and equally long");
    validate_magnitudes(in.x, "minkowski");
    validate_magnitudes(in.y, "minkowski");

    const double al = dim.alpha();
    const double lhs = pair_norm(in.x, in.y, al, p, 1.0 / p);
    const double nx = power_norm(in.x, al * p, 1.0 / p);
    double ny;
    if (variant == FormVariant::as_written && p > 1.0) {
        // Eq. (3.2) prints the second norm with q = p/(p-1)
        const double q = p / (p - 1.0);
        ny = power_norm(in.y, al * q, 1.0 / q);
    } else {
        ny = power_norm(in.y, al * p, 1.0 / p);
    }
    const double rhs = nx + ny;
    return make_verdict(lhs, rhs, p > 1.0 ? Direction::le : Direction::ge, tol);
}

namespace {

std::vector<double> column_of(const MultiInstance& in, std::size_t j) {
    std::vector<double> col(in.rows);
    for (std::size_t i = 0; i < in.rows; ++i) col[i] = in.at(i, j);
    return col;
}

void validate_multi(const MultiInstance& in, const char* what) {
    if (in.rows == 0 || in.cols == 0 || in.data.size() != in.rows * in.cols)
        throw ShapeError(std::string(what) + ": matrix shape is inconsistent or empty");
    validate_magnitudes(in.data, what);
}

// row sums of entry^alpha
std::vector<double> alpha_row_sums(const MultiInstance& in, double al) {
    std::vector<double> powed(in.data.size());
    kernels::pow_array(in.data, al, powed);
    std::vector<double> s(in.rows, 0.0);
    for (std::size_t i = 0; i < in.rows; ++i)
        s[i] = kernels::sum(std::span<const double>(powed).subspan(i * in.cols, in.cols));
    return s;
}

} // namespace

Verdict eval_holder_multi(const MultiInstance& in, const ExponentTuple& tuple,
                          Dimension dim, const TolerancePolicy& tol) {
    validate_multi(in, "holder_multi");
    if (in.cols != tuple.size())
        throw ShapeError("holder_multi: column count must match the exponent tuple size");
    for (std::size_t j = 0; j < in.cols; ++j)
        if (tuple.exponents[j] < 0.0)
            for (std::size_t i = 0; i < in.rows; ++i)
                if (in.at(i, j) == 0.0)
                    throw PoleError("holder_multi: zero entry under a negative exponent");

    const double al = dim.alpha();
    std::vector<double> powed(in.data.size());
    kernels::pow_array(in.data, al, powed);
    double lhs = 0.0;
    for (std::size_t i = 0; i < in.rows; ++i) {
        double prod = 1.0;
        for (std::size_t j = 0; j < in.cols; ++j) prod *= powed[i * in.cols + j];
        lhs += prod;
    }
    double rhs = 1.0;
    for (std::size_t j = 0; j < in.cols; ++j) {
        const double pj = tuple.exponents[j];
        rhs *= power_norm(column_of(in, j), al * pj, 1.0 / pj);
    }
    const Direction dir =
        tuple.regime == Regime::holder ? Direction::le : Direction::ge;
    return make_verdict(lhs, rhs, dir, tol);
}

Verdict eval_minkowski_multi(const MultiInstance& in, double p, Dimension dim,
                             FormVariant variant, const TolerancePolicy& tol) {
    if (!std::isfinite(p) || p <= 0.0 || p == 1.0)
        throw RegimeError("minkowski_multi: p must lie in (0,1) or (1,inf)");
    validate_multi(in, "minkowski_multi");

    const double al = dim.alpha();
    const std::vector<double> s = alpha_row_sums(in, al);
    const double lhs = power_norm(s, p, 1.0 / p);

    double rhs = 0.0;
    if (variant == FormVariant::normalized) {
        for (std::size_t j = 0; j < in.cols; ++j)
            rhs += power_norm(column_of(in, j), al * p, 1.0 / p);
    } else {
        // printed (3.10)/(3.11): outer sum over i
        for (std::size_t i = 0; i < in.rows; ++i)
            rhs += power_norm(
                std::span<const double>(in.data).subspan(i * in.cols, in.cols), al * p,
                1.0 / p);
    }
    return make_verdict(lhs, rhs, p > 1.0 ? Direction::le : Direction::ge, tol);
}

namespace {

void require_radon_regime(double p, double r, const char* what) {
    if (!std::isfinite(p) || !std::isfinite(r) || !(r > 0.0) || !(r < 1.0) || !(p > 1.0))
        throw RegimeError(std::string(what) + ": exponents must satisfy 0 < r < 1 < p");
}

} // namespace

Verdict eval_radon(const RadonInstance& in, double p, Dimension dim,
                   const TolerancePolicy& tol) {
    require_radon_regime(p, in.r, "radon");
    if (in.x.size() != in.y.size() || in.x.empty())
        throw ShapeError("radon: x and y must be nonempty and equally long");
    validate_magnitudes(in.x, "radon");
    validate_magnitudes(in.y, "radon");
    if (!has_positive(in.x) || !has_positive(in.y))
        throw PoleError("radon: each vector needs a positive entry (zero denominator)");

    const double al = dim.alpha();
    const double exponent = 1.0 / (p - in.r);
    const double lhs = pair_ratio(in.x, in.y, al, p, in.r, exponent);
    const double rx = power_ratio(in.x, al * p, al * in.r, exponent);
    const double ry = power_ratio(in.y, al * p, al * in.r, exponent);
    return make_verdict(lhs, rx + ry, Direction::le, tol);
}

Verdict eval_radon_multi(const MultiInstance& in, double p, double r,
                         Dimension dim, FormVariant variant,
                         const TolerancePolicy& tol) {
    require_radon_regime(p, r, "radon_multi");
    validate_multi(in, "radon_multi");

    const double al = dim.alpha();
    const std::vector<double> s = alpha_row_sums(in, al);
    if (!has_positive(s))
        throw PoleError("radon_multi: all entries are zero (zero denominator)");
    const double exponent = 1.0 / (p - r);
    const double lhs = power_ratio(s, p, r, exponent);

    double rhs = 0.0;
    if (variant == FormVariant::normalized) {
        for (std::size_t j = 0; j < in.cols; ++j) {
            const std::vector<double> col = column_of(in, j);
            if (!has_positive(col))
                throw PoleError("radon_multi: column without a positive entry");
            rhs += power_ratio(col, al * p, al * r, exponent);
        }
    } else {
        // printed (3.15): right side summed over i with inner sums over j
        for (std::size_t i = 0; i < in.rows; ++i) {
            const auto row = std::span<const double>(in.data).subspan(i * in.cols, in.cols);
            if (!has_positive(row))
                throw PoleError("radon_multi: row without a positive entry");
            rhs += power_ratio(row, al * p, al * r, exponent);
        }
    }
    return make_verdict(lhs, rhs, Direction::le, tol);
}

namespace {

std::vector<double> reduce_vec(const std::vector<double>& v, double al) {
    std::vector<double> out(v.size());
    kernels::pow_array(v, al, out);
    return out;
}

} // namespace

InstanceSpec classical_reduce(const InstanceSpec& inst) {
    const double al = inst.dim.alpha();
    InstancePayload reduced = std::visit(
        [&](const auto& payload) -> InstancePayload {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, BernoulliInstance>) {
                return BernoulliInstance{std::pow(payload.y, al), payload.m};
            } else if constexpr (std::is_same_v<T, YoungInstance>) {
                return YoungInstance{std::pow(payload.a, al), std::pow(payload.b, al)};
            } else if constexpr (std::is_same_v<T, NaryYoungInstance>) {
                return NaryYoungInstance{reduce_vec(payload.a, al)};
            } else if constexpr (std::is_same_v<T, PairedInstance>) {
                return PairedInstance{reduce_vec(payload.x, al), reduce_vec(payload.y, al)};
            } else if constexpr (std::is_same_v<T, MultiInstance>) {
                MultiInstance out{payload.rows, payload.cols,
                                  std::vector<double>(payload.data.size())};
                kernels::pow_array(payload.data, al, out.data);
                return out;
            } else {
                static_assert(std::is_same_v<T, RadonInstance>);
                return RadonInstance{reduce_vec(payload.x, al), reduce_vec(payload.y, al),
                                     payload.r};
            }
        },
        inst.payload);
    return InstanceSpec{std::move(reduced), classical_dimension()};
}

namespace {

template <typename T>
const T& payload_as(const InstanceSpec& inst, InequalityId id) {
    const T* p = std::get_if<T>(&inst.payload);
    if (!p)
        throw UsageError(std::string("instance payload does not match inequality id ") +
                         to_string(id));
    return *p;
}

template <typename T>
const T& require_param(const std::optional<T>& opt, const char* what) {
    if (!opt) throw UsageError(std::string("missing parameter: ") + what);
    return *opt;
}

} // namespace

Verdict evaluate(InequalityId id, const InstanceSpec& inst, const EvalParams& params,
                 FormVariant variant, const TolerancePolicy& tol) {
    switch (id) {
        case InequalityId::bernoulli:
            return eval_bernoulli(payload_as<BernoulliInstance>(inst, id), inst.dim, tol);
        case InequalityId::young:
            return eval_young(payload_as<YoungInstance>(inst, id),
                              require_param(params.pair, "conjugate pair"), inst.dim, tol);
        case InequalityId::nary_young:
            return eval_nary_young(payload_as<NaryYoungInstance>(inst, id),
                                   require_param(params.tuple, "exponent tuple"),
                                   inst.dim, tol);
        case InequalityId::holder:
            return eval_holder(payload_as<PairedInstance>(inst, id),
                               require_param(params.pair, "conjugate pair"), inst.dim, tol);
        case InequalityId::minkowski:
            return eval_minkowski(payload_as<PairedInstance>(inst, id),
                                  require_param(params.p, "p"), inst.dim, variant, tol);
        case InequalityId::holder_multi:
            return eval_holder_multi(payload_as<MultiInstance>(inst, id),
                                     require_param(params.tuple, "exponent tuple"),
                                     inst.dim, tol);
        case InequalityId::minkowski_multi:
            return eval_minkowski_multi(payload_as<MultiInstance>(inst, id),
                                        require_param(params.p, "p"), inst.dim, variant,
                                        tol);
        case InequalityId::radon:
            return eval_radon(payload_as<RadonInstance>(inst, id),
                              require_param(params.p, "p"), inst.dim, tol);
        case InequalityId::radon_multi:
            return eval_radon_multi(payload_as<MultiInstance>(inst, id),
                                    require_param(params.p, "p"),
                                    require_param(params.r, "r"), inst.dim, variant, tol);
    }
    throw UsageError("unknown inequality id");
}

} // namespace alphaineq
