// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "alphaineq/errors.hpp"
#include "alphaineq/kernels.hpp"

using namespace alphaineq;

namespace {

struct BackendGuard {
    kernels::Backend prev;
    explicit BackendGuard(kernels::Backend b) : prev(kernels::set_backend(b)) {}
    ~BackendGuard() { kernels::set_backend(prev); }
};

bool close(double a, double b, double rel) {
    if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
    if (std::isinf(a) || std::isinf(b)) return a == b;
    if (a < 1e-290 && b < 1e-290 && a > -1e-290 && b > -1e-290) return true;
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

std::vector<double> random_magnitudes(std::mt19937_64& rng, std::size_t n,
                                      double zero_frac = 0.1) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(n);
    for (double& t : v)
        t = u(rng) < zero_frac ? 0.0 : std::exp(-13.8 + 27.6 * u(rng));
    return v;
}

} // namespace

TEST_CASE("backend dispatch") {
    CHECK(kernels::backend_available(kernels::Backend::scalar));
    const kernels::Backend active = kernels::active_backend();
    CHECK((active == kernels::Backend::scalar || active == kernels::Backend::avx2));

    const kernels::Backend prev = kernels::set_backend(kernels::Backend::scalar);
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
    kernels::set_backend(prev);
    CHECK(kernels::active_backend() == prev);
}

TEST_CASE("scalar kernels match std::pow exactly") {
    BackendGuard guard(kernels::Backend::scalar);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ue(-30.0, 30.0);
    for (int iter = 0; iter < 200; ++iter) {
        const auto x = random_magnitudes(rng, 9);
        const double e = ue(rng);
        std::vector<double> out(x.size());
        kernels::pow_array(x, e, out);
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            CHECK(out[i] == std::pow(x[i], e));
            s += std::pow(x[i], e);
        }
        CHECK(kernels::pow_sum(x, e) == s);
    }
}

TEST_CASE("kernel special exponents") {
    for (kernels::Backend b : {kernels::Backend::scalar, kernels::Backend::avx2}) {
        if (!kernels::backend_available(b)) continue;
        BackendGuard guard(b);
        const std::vector<double> x = {0.0, 1.0, 0.5, 2.0, 1e-3, 1e3, 7.25, 0.0, 3.0};
        std::vector<double> out(x.size());

        kernels::pow_array(x, 0.0, out);
        for (double v : out) CHECK(v == 1.0);
        CHECK(kernels::pow_sum(x, 0.0) == static_cast<double>(x.size()));

        kernels::pow_array(x, 1.0, out);
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(out[i] == x[i]);

        kernels::pow_array(x, -2.0, out);
        CHECK(out[0] == std::numeric_limits<double>::infinity());
        CHECK(out[1] == 1.0);

        const std::vector<double> neg = {-1.0, 2.0, -3.5, 4.0};
        std::vector<double> nout(neg.size());
        kernels::pow_array(neg, 0.5, nout);
        CHECK(std::isnan(nout[0]));
        CHECK(std::isnan(nout[2]));
        CHECK(close(nout[1], std::sqrt(2.0), 1e-14));
    }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    if (!kernels::backend_available(kernels::Backend::avx2)) {
        MESSAGE("avx2 unavailable on this host; equivalence suite skipped");
        return;
    }
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    for (int iter = 0; iter < 3000; ++iter) {
        const std::size_t n = 1 + static_cast<std::size_t>(u(rng) * 18.0);
        const auto x = random_magnitudes(rng, n);
        const auto y = random_magnitudes(rng, n, 0.0);
        double e = -999.0 + 1998.0 * u(rng);
        if (iter % 2 == 0) e = -12.0 + 24.0 * u(rng);
        const double a = 0.001 + 0.999 * u(rng);
        const double p = 1.001 + 7.0 * u(rng);

        std::vector<double> out_scalar(n), out_avx2(n);
        double sum_s, sum_v, dot_s, dot_v, pair_s, pair_v, plain_s, plain_v;
        {
            BackendGuard guard(kernels::Backend::scalar);
            kernels::pow_array(x, e, out_scalar);
            sum_s = kernels::pow_sum(x, e);
            dot_s = kernels::dot_pow(x, y, a);
            pair_s = kernels::pow_sum_pair(x, y, a, p);
            plain_s = kernels::sum(x);
        }
        {
            BackendGuard guard(kernels::Backend::avx2);
            kernels::pow_array(x, e, out_avx2);
            sum_v = kernels::pow_sum(x, e);
            dot_v = kernels::dot_pow(x, y, a);
            pair_v = kernels::pow_sum_pair(x, y, a, p);
            plain_v = kernels::sum(x);
        }
        for (std::size_t i = 0; i < n; ++i)
            REQUIRE(close(out_scalar[i], out_avx2[i], 1e-13));
        REQUIRE(close(sum_s, sum_v, 1e-13));
        REQUIRE(close(dot_s, dot_v, 1e-13));
        REQUIRE(close(pair_s, pair_v, 1e-13));
        REQUIRE(close(plain_s, plain_v, 1e-13));
    }
}

TEST_CASE("avx2 pow handles extremes") {
    if (!kernels::backend_available(kernels::Backend::avx2)) return;
    BackendGuard guard(kernels::Backend::avx2);

    const std::vector<double> x = {5e-324, 1e-310, 1e-300, 1e-6, 1.0 - 1e-12,
                                   1.0 + 1e-12, 1e6, 123.456};
    std::vector<double> out(x.size());
    for (double e : {0.5, -0.5, 3.0, -999.0, 999.0, 17.0, 1e-3}) {
        kernels::pow_array(x, e, out);
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double ref = std::pow(x[i], e);
            REQUIRE(close(out[i], ref, 1e-13));
        }
    }

    // shape mismatch guards
    std::vector<double> small(2);
    CHECK_THROWS_AS(kernels::pow_array(x, 2.0, small), ShapeError);
    CHECK_THROWS_AS(kernels::dot_pow(x, small, 2.0), ShapeError);
}
