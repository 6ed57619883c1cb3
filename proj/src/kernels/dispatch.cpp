// SPDX-License-Identifier: Apache-2.0
#include "alphaineq/kernels.hpp"

#include "alphaineq/errors.hpp"
#include "kernels_internal.hpp"

namespace alphaineq::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(ALPHAINEQ_HAVE_AVX2_TU)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

struct Dispatch {
    const KernelTable* table;
    Backend backend;
};

Dispatch& state() noexcept {
    static Dispatch d = [] {
#if defined(ALPHAINEQ_HAVE_AVX2_TU)
        if (cpu_has_avx2()) return Dispatch{&avx2::table(), Backend::avx2};
#endif
        return Dispatch{&scalar::table(), Backend::scalar};
    }();
    return d;
}

void require_equal_sizes(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw ShapeError(std::string(what) + ": size mismatch");
}

} // namespace

Backend active_backend() noexcept { return state().backend; }

bool backend_available(Backend b) noexcept {
    return b == Backend::scalar || cpu_has_avx2();
}

const char* backend_name(Backend b) noexcept {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

Backend set_backend(Backend b) {
    if (!backend_available(b))
        throw UsageError(std::string("kernel backend not available on this host: ") +
                         backend_name(b));
    Backend prev = state().backend;
    if (b == Backend::scalar) {
        state() = {&scalar::table(), Backend::scalar};
    } else {
#if defined(ALPHAINEQ_HAVE_AVX2_TU)
        state() = {&avx2::table(), Backend::avx2};
#endif
    }
    return prev;
}

void pow_array(std::span<const double> x, double e, std::span<double> out) {
    require_equal_sizes(x.size(), out.size(), "pow_array");
    state().table->pow_array(x, e, out);
}

double pow_sum(std::span<const double> x, double e) {
    return state().table->pow_sum(x, e);
}

double dot_pow(std::span<const double> x, std::span<const double> y, double e) {
    require_equal_sizes(x.size(), y.size(), "dot_pow");
    return state().table->dot_pow(x, y, e);
}

double pow_sum_pair(std::span<const double> x, std::span<const double> y,
                    double a, double p) {
    require_equal_sizes(x.size(), y.size(), "pow_sum_pair");
    return state().table->pow_sum_pair(x, y, a, p);
}

double sum(std::span<const double> x) { return state().table->sum(x); }

} // namespace alphaineq::kernels
