// SPDX-License-Identifier: Apache-2.0
//
// Scalar reference kernels. These are the semantics the SIMD variants are
// equivalence-tested against.

#include <cmath>

#include "kernels_internal.hpp"

namespace alphaineq::kernels::scalar {

namespace {

void pow_array_impl(std::span<const double> x, double e, std::span<double> out) {
    if (e == 0.0) {
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = 1.0;
        return;
    }
    if (e == 1.0) {
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
        return;
    }
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::pow(x[i], e);
}

double pow_sum_impl(std::span<const double> x, double e) {
    double acc = 0.0;
    if (e == 0.0) return static_cast<double>(x.size());
    if (e == 1.0) {
        for (double v : x) acc += v;
        return acc;
    }
    for (double v : x) acc += std::pow(v, e);
    return acc;
}

double dot_pow_impl(std::span<const double> x, std::span<const double> y, double e) {
    double acc = 0.0;
    if (e == 0.0) return static_cast<double>(x.size());
    if (e == 1.0) {
        for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
        return acc;
    }
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += std::pow(x[i], e) * std::pow(y[i], e);
    return acc;
}

double pow_sum_pair_impl(std::span<const double> x, std::span<const double> y,
                         double a, double p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double s = (a == 1.0 ? x[i] : std::pow(x[i], a)) +
                         (a == 1.0 ? y[i] : std::pow(y[i], a));
        acc += p == 1.0 ? s : std::pow(s, p);
    }
    return acc;
}

double sum_impl(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += v;
    return acc;
}

} // namespace

const KernelTable& table() noexcept {
    static const KernelTable t{pow_array_impl, pow_sum_impl, dot_pow_impl,
                               pow_sum_pair_impl, sum_impl};
    return t;
}

} // namespace alphaineq::kernels::scalar
