// SPDX-License-Identifier: Apache-2.0
#include "alphaineq/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace alphaineq {

namespace {

double log_uniform(TrialRng& rng, double lo, double hi) {
    return std::exp(std::log(lo) + rng.u01() * (std::log(hi) - std::log(lo)));
}

const ConjugatePair& need_pair(const EvalParams& params) {
    if (!params.pair) throw UsageError("certifier: conjugate pair required");
    return *params.pair;
}

const ExponentTuple& need_tuple(const EvalParams& params) {
    if (!params.tuple) throw UsageError("certifier: exponent tuple required");
    return *params.tuple;
}

double need_r(const EvalParams& params) {
    if (!params.r) throw UsageError("certifier: r required");
    return *params.r;
}

} // namespace

InstanceSpec manifold_point(InequalityId id, const EvalParams& params, Dimension dim,
                            ShapeHint shape, TrialRng& rng) {
    switch (id) {
        case InequalityId::bernoulli:
            throw UsageError("bernoulli states no equality condition to certify");
        case InequalityId::young: {
            const ConjugatePair& pair = need_pair(params);
            const double a = log_uniform(rng, 0.25, 4.0);
            const double b = std::pow(a, pair.p / pair.q);  // forces a^p = b^q
            return InstanceSpec{YoungInstance{a, b}, dim};
        }
        case InequalityId::nary_young: {
            const ExponentTuple& tuple = need_tuple(params);
            const double t = log_uniform(rng, 0.25, 4.0);
            std::vector<double> a(tuple.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                a[i] = std::pow(t, 1.0 / tuple.exponents[i]);  // all a_i^{p_i} = t
            return InstanceSpec{NaryYoungInstance{std::move(a)}, dim};
        }
        case InequalityId::holder: {
            const ConjugatePair& pair = need_pair(params);
            const double lambda = log_uniform(rng, 0.5, 2.0);
            std::vector<double> x(shape.rows), y(shape.rows);
            for (std::size_t i = 0; i < shape.rows; ++i) {
                x[i] = log_uniform(rng, 0.5, 2.0);
                y[i] = std::pow(std::pow(x[i], pair.p) / lambda, 1.0 / pair.q);
            }
            return InstanceSpec{PairedInstance{std::move(x), std::move(y)}, dim};
        }
        case InequalityId::minkowski: {
            const double lambda = log_uniform(rng, 0.25, 4.0);
            std::vector<double> x(shape.rows), y(shape.rows);
            for (std::size_t i = 0; i < shape.rows; ++i) {
                x[i] = log_uniform(rng, 0.25, 4.0);
                y[i] = lambda * x[i];
            }
            return InstanceSpec{PairedInstance{std::move(x), std::move(y)}, dim};
        }
        case InequalityId::holder_multi: {
            const ExponentTuple& tuple = need_tuple(params);
            MultiInstance m{shape.rows, tuple.size(), {}};
            m.data.resize(m.rows * m.cols);
            std::vector<double> c(m.rows), d(m.cols);
            for (double& v : c) v = log_uniform(rng, 0.5, 2.0);
            for (double& v : d) v = log_uniform(rng, 0.5, 2.0);
            for (std::size_t i = 0; i < m.rows; ++i)
                for (std::size_t j = 0; j < m.cols; ++j)
                    m.at(i, j) = d[j] * std::pow(c[i], 1.0 / tuple.exponents[j]);
            return InstanceSpec{std::move(m), dim};
        }
        case InequalityId::minkowski_multi:
        case InequalityId::radon_multi: {
            MultiInstance m{shape.rows, shape.cols, {}};
            m.data.resize(m.rows * m.cols);
            std::vector<double> c(m.rows), d(m.cols);
            for (double& v : c) v = log_uniform(rng, 0.25, 4.0);
            for (double& v : d) v = log_uniform(rng, 0.25, 4.0);
            for (std::size_t i = 0; i < m.rows; ++i)
                for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = c[i] * d[j];
            return InstanceSpec{std::move(m), dim};
        }
        case InequalityId::radon: {
            const double lambda = log_uniform(rng, 0.25, 4.0);
            std::vector<double> x(shape.rows), y(shape.rows);
            for (std::size_t i = 0; i < shape.rows; ++i) {
                x[i] = log_uniform(rng, 0.25, 4.0);
                y[i] = lambda * x[i];
            }
            return InstanceSpec{RadonInstance{std::move(x), std::move(y), need_r(params)},
                                dim};
        }
    }
    throw UsageError("unknown inequality id");
}

double check_equality_manifold(InequalityId id, const EvalParams& params,
                               Dimension dim, std::size_t samples, ShapeHint shape,
                               std::uint64_t seed, const TolerancePolicy& tol) {
    if (samples == 0) throw UsageError("check_equality_manifold: samples must be positive");
    double worst = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        TrialRng rng(trial_key(seed, k));
        const InstanceSpec point = manifold_point(id, params, dim, shape, rng);
        const Verdict v = evaluate(id, point, params, FormVariant::normalized, tol);
        worst = std::max(worst, std::abs(v.gap) / v.scale);
    }
    return worst;
}

namespace {

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double t : v) s += t * t;
    return std::sqrt(s);
}

// relative least-squares residual of u ~ lambda * v (fitted the smaller onto
// the larger); 0 when either side is the zero vector
double proportionality_residual(std::vector<double> u, std::vector<double> v) {
    const double nu = norm2(u);
    const double nv = norm2(v);
    if (nu == 0.0 || nv == 0.0) return 0.0;
    if (nu < nv) std::swap(u, v);
    double uv = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        uv += u[i] * v[i];
        vv += v[i] * v[i];
    }
    const double lambda = uv / vv;
    double res2 = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double d = u[i] - lambda * v[i];
        res2 += d * d;
    }
    return std::sqrt(res2) / std::max(nu, nv);
}

std::vector<double> powed(const std::vector<double>& v, double e) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::pow(v[i], e);
    return out;
}

double max_column_residual(const MultiInstance& m,
                           const std::vector<double>* col_exponents) {
    std::vector<std::vector<double>> cols(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
        cols[j].resize(m.rows);
        for (std::size_t i = 0; i < m.rows; ++i)
            cols[j][i] = col_exponents ? std::pow(m.at(i, j), (*col_exponents)[j])
                                       : m.at(i, j);
    }
    std::size_t ref = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < m.cols; ++j) {
        const double n = norm2(cols[j]);
        if (n > best) {
            best = n;
            ref = j;
        }
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < m.cols; ++j)
        if (j != ref)
            worst = std::max(worst, proportionality_residual(cols[j], cols[ref]));
    return worst;
}

} // namespace

double equality_condition_residual(InequalityId id, const EvalParams& params,
                                   const InstanceSpec& inst) {
    switch (id) {
        case InequalityId::bernoulli:
            throw UsageError("bernoulli states no equality condition to certify");
        case InequalityId::young: {
            const auto& in = std::get<YoungInstance>(inst.payload);
            const ConjugatePair& pair = need_pair(params);
            const double ap = std::pow(in.a, pair.p);
            const double bq = std::pow(in.b, pair.q);
            return std::abs(ap - bq) / std::max({std::abs(ap), std::abs(bq), 1.0});
        }
        case InequalityId::nary_young: {
            const auto& in = std::get<NaryYoungInstance>(inst.payload);
            const ExponentTuple& tuple = need_tuple(params);
            double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
            for (std::size_t i = 0; i < in.a.size(); ++i) {
                const double v = std::pow(in.a[i], tuple.exponents[i]);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            return (hi - lo) / std::max(hi, 1.0);
        }
        case InequalityId::holder: {
            // classical condition: |x_i|^p proportional to |y_i|^q
            const auto& in = std::get<PairedInstance>(inst.payload);
            const ConjugatePair& pair = need_pair(params);
            return proportionality_residual(powed(in.x, pair.p), powed(in.y, pair.q));
        }
        case InequalityId::minkowski: {
            const auto& in = std::get<PairedInstance>(inst.payload);
            return proportionality_residual(in.x, in.y);
        }
        case InequalityId::radon: {
            const auto& in = std::get<RadonInstance>(inst.payload);
            return proportionality_residual(in.x, in.y);
        }
        case InequalityId::holder_multi: {
            const auto& in = std::get<MultiInstance>(inst.payload);
            const ExponentTuple& tuple = need_tuple(params);
            return max_column_residual(in, &tuple.exponents);
        }
        case InequalityId::minkowski_multi:
        case InequalityId::radon_multi: {
            const auto& in = std::get<MultiInstance>(inst.payload);
            return max_column_residual(in, nullptr);
        }
    }
    throw UsageError("unknown inequality id");
}

namespace {

std::size_t coord_count(InequalityId id, const EvalParams& params, ShapeHint shape) {
    switch (id) {
        case InequalityId::young: return 2;
        case InequalityId::nary_young: return need_tuple(params).size();
        case InequalityId::holder:
        case InequalityId::minkowski:
        case InequalityId::radon: return 2 * shape.rows;
        case InequalityId::holder_multi: return shape.rows * need_tuple(params).size();
        case InequalityId::minkowski_multi:
        case InequalityId::radon_multi: return shape.rows * shape.cols;
        case InequalityId::bernoulli:
            throw UsageError("bernoulli states no equality condition to certify");
    }
    throw UsageError("unknown inequality id");
}

InstanceSpec coords_to_instance(InequalityId id, const EvalParams& params,
                                Dimension dim, ShapeHint shape,
                                std::span<const double> c) {
    switch (id) {
        case InequalityId::young:
            return InstanceSpec{YoungInstance{c[0], c[1]}, dim};
        case InequalityId::nary_young:
            return InstanceSpec{NaryYoungInstance{{c.begin(), c.end()}}, dim};
        case InequalityId::holder:
        case InequalityId::minkowski: {
            const std::size_t n = shape.rows;
            return InstanceSpec{PairedInstance{{c.begin(), c.begin() + n},
                                               {c.begin() + n, c.end()}},
                                dim};
        }
        case InequalityId::radon: {
            const std::size_t n = shape.rows;
            return InstanceSpec{RadonInstance{{c.begin(), c.begin() + n},
                                              {c.begin() + n, c.end()},
                                              need_r(params)},
                                dim};
        }
        case InequalityId::holder_multi: {
            MultiInstance m{shape.rows, need_tuple(params).size(), {c.begin(), c.end()}};
            return InstanceSpec{std::move(m), dim};
        }
        case InequalityId::minkowski_multi:
        case InequalityId::radon_multi: {
            MultiInstance m{shape.rows, shape.cols, {c.begin(), c.end()}};
            return InstanceSpec{std::move(m), dim};
        }
        case InequalityId::bernoulli: break;
    }
    throw UsageError("unknown inequality id");
}

double halton(std::size_t index, std::size_t base) {
    double f = 1.0, r = 0.0;
    for (std::size_t i = index; i > 0; i /= base) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(i % base);
    }
    return r;
}

constexpr std::size_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                   41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

struct NmOutcome {
    std::vector<double> z;
    double f = std::numeric_limits<double>::infinity();
    std::size_t evals = 0;
};

template <typename F>
NmOutcome nelder_mead(F&& objective, std::vector<double> z0, double step,
                      const std::vector<double>& zlo, const std::vector<double>& zhi,
                      std::size_t budget) {
    const std::size_t k = z0.size();
    auto clamp_point = [&](std::vector<double>& z) {
        for (std::size_t d = 0; d < k; ++d)
            z[d] = std::min(std::max(z[d], zlo[d]), zhi[d]);
    };

    NmOutcome out;
    std::vector<std::vector<double>> simplex(k + 1, z0);
    std::vector<double> f(k + 1);
    for (std::size_t i = 1; i <= k; ++i) {
        simplex[i][i - 1] += step;
        clamp_point(simplex[i]);
    }
    clamp_point(simplex[0]);
    for (std::size_t i = 0; i <= k && out.evals < budget; ++i) {
        f[i] = objective(simplex[i]);
        ++out.evals;
    }

    std::vector<std::size_t> order(k + 1);
    while (out.evals < budget) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
        const std::size_t best = order[0], worst = order[k],
                          second_worst = order[k - 1];

        // termination: flat simplex
        double diam = 0.0;
        for (std::size_t i = 0; i < k; ++i)
            diam = std::max(diam, std::abs(simplex[worst][i] - simplex[best][i]));
        if (std::abs(f[worst] - f[best]) <= 1e-15 && diam <= 1e-9) break;

        std::vector<double> centroid(k, 0.0);
        for (std::size_t i = 0; i <= k; ++i)
            if (i != worst)
                for (std::size_t d = 0; d < k; ++d) centroid[d] += simplex[i][d];
        for (double& v : centroid) v /= static_cast<double>(k);

        auto blend = [&](double coeff) {
            std::vector<double> z(k);
            for (std::size_t d = 0; d < k; ++d)
                z[d] = centroid[d] + coeff * (centroid[d] - simplex[worst][d]);
            clamp_point(z);
            return z;
        };

        std::vector<double> zr = blend(1.0);  // reflection
        const double fr = objective(zr);
        ++out.evals;
        if (fr < f[best]) {
            std::vector<double> ze = blend(2.0);  // expansion
            const double fe = objective(ze);
            ++out.evals;
            if (fe < fr) {
                simplex[worst] = std::move(ze);
                f[worst] = fe;
            } else {
                simplex[worst] = std::move(zr);
                f[worst] = fr;
            }
        } else if (fr < f[second_worst]) {
            simplex[worst] = std::move(zr);
            f[worst] = fr;
        } else {
            const bool outside = fr < f[worst];
            std::vector<double> zc = blend(outside ? 0.5 : -0.5);  // contraction
            const double fc = objective(zc);
            ++out.evals;
            if (fc < std::min(fr, f[worst])) {
                simplex[worst] = std::move(zc);
                f[worst] = fc;
            } else {
                // shrink toward the best vertex
                for (std::size_t i = 0; i <= k; ++i) {
                    if (i == best) continue;
                    for (std::size_t d = 0; d < k; ++d)
                        simplex[i][d] =
                            simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
                    if (out.evals >= budget) break;
                    f[i] = objective(simplex[i]);
                    ++out.evals;
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= k; ++i)
        if (f[i] < f[best]) best = i;
    out.z = simplex[best];
    out.f = f[best];
    return out;
}

} // namespace

EqualityCertificate minimize_gap(InequalityId id, const EvalParams& params,
                                 Dimension dim, ShapeHint shape, SearchRegion region,
                                 std::size_t restarts, std::size_t budget,
                                 const TolerancePolicy& tol) {
    if (restarts < 1) throw UsageError("minimize_gap: restarts must be at least 1");
    if (budget < 8) throw UsageError("minimize_gap: budget is too small");
    tol.validate();

    const std::size_t k = coord_count(id, params, shape);
    std::vector<double> zlo(k), zhi(k);
    if (!region.los.empty() || !region.his.empty()) {
        if (region.los.size() != k || region.his.size() != k)
            throw UsageError("minimize_gap: per-coordinate region needs one bound pair "
                             "per coordinate");
        for (std::size_t d = 0; d < k; ++d) {
            if (!(region.los[d] > 0.0) || !(region.his[d] > region.los[d]))
                throw UsageError("minimize_gap: region must satisfy 0 < lo < hi");
            zlo[d] = std::log(region.los[d]);
            zhi[d] = std::log(region.his[d]);
        }
    } else {
        if (!(region.lo > 0.0) || !(region.hi > region.lo))
            throw UsageError("minimize_gap: region must satisfy 0 < lo < hi");
        for (std::size_t d = 0; d < k; ++d) {
            zlo[d] = std::log(region.lo);
            zhi[d] = std::log(region.hi);
        }
    }

    double best_scale = 1.0;
    std::vector<double> coords(k);
    auto objective = [&](const std::vector<double>& z) {
        for (std::size_t i = 0; i < k; ++i) coords[i] = std::exp(z[i]);
        const InstanceSpec inst = coords_to_instance(id, params, dim, shape, coords);
        const Verdict v = evaluate(id, inst, params, FormVariant::normalized, tol);
        return v.gap / v.scale;
    };

    EqualityCertificate cert;
    cert.id = id;
    cert.params = params;
    cert.alpha = dim.alpha();
    cert.restarts = restarts;

    double best_f = std::numeric_limits<double>::infinity();
    std::vector<double> best_z;
    double span = 0.0;
    for (std::size_t d = 0; d < k; ++d) span = std::max(span, zhi[d] - zlo[d]);
    for (std::size_t rs = 0; rs < restarts; ++rs) {
        std::vector<double> z0(k);
        for (std::size_t d = 0; d < k; ++d) {
            const double u = halton(rs + 1, kPrimes[d % std::size(kPrimes)]);
            z0[d] = zlo[d] + (0.08 + 0.84 * u) * (zhi[d] - zlo[d]);
        }
        NmOutcome nm =
            nelder_mead(objective, std::move(z0), 0.08 * span, zlo, zhi, budget);
        cert.evaluations += nm.evals;
        if (nm.f < best_f) {
            best_f = nm.f;
            best_z = std::move(nm.z);
        }
    }

    cert.argmin.resize(k);
    for (std::size_t i = 0; i < k; ++i) cert.argmin[i] = std::exp(best_z[i]);
    const InstanceSpec inst = coords_to_instance(id, params, dim, shape, cert.argmin);
    const Verdict v = evaluate(id, inst, params, FormVariant::normalized, tol);
    cert.gap_at_argmin = v.gap;
    cert.scale_at_argmin = v.scale;
    best_scale = v.scale;
    cert.converged = v.gap <= tol.tol_eq * best_scale;
    cert.condition_residual = equality_condition_residual(id, params, inst);
    return cert;
}

bool perturb_check(InequalityId id, const EvalParams& params,
                   const InstanceSpec& manifold_pt, double delta,
                   const TolerancePolicy& tol) {
    if (delta < 0.0) throw DomainError("perturb_check: delta must be nonnegative");
    InstanceSpec perturbed = manifold_pt;
    std::visit(
        [&](auto& payload) {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, BernoulliInstance>) {
                payload.y *= 1.0 + delta;
            } else if constexpr (std::is_same_v<T, YoungInstance>) {
                payload.a *= 1.0 + delta;
            } else if constexpr (std::is_same_v<T, NaryYoungInstance>) {
                payload.a.front() *= 1.0 + delta;
            } else if constexpr (std::is_same_v<T, PairedInstance>) {
                payload.x.front() *= 1.0 + delta;
            } else if constexpr (std::is_same_v<T, MultiInstance>) {
                payload.data.front() *= 1.0 + delta;
            } else {
                payload.x.front() *= 1.0 + delta;
            }
        },
        perturbed.payload);
    const Verdict v = evaluate(id, perturbed, params, FormVariant::normalized, tol);
    return v.gap > tol.tol_eq * v.scale;
}

} // namespace alphaineq
