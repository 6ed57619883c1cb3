// SPDX-License-Identifier: Apache-2.0
//
// AVX2 kernels. The vector pow takes the usual exp(e * log x) route but
// carries log(x) and the product e * log(x) in double-double, which keeps
// the result within a few ulp of std::pow over the whole finite range,
// including exponents up to the overflow boundary. Zeros and negative
// inputs are resolved by blends: 0^e follows the scalar convention
// (0 for e > 0, +inf for e < 0) and a negative input yields NaN so a
// contract breach cannot pass silently.
//
// This translation unit is compiled with -mavx2 -mfma and only ever entered
// through the runtime dispatch table after a cpuid check.

#include <immintrin.h>

#include <cmath>
#include <cstdint>
#include <limits>

#include "kernels_internal.hpp"

namespace alphaineq::kernels::avx2 {

namespace {

struct DD {
    __m256d hi, lo;
};

const __m256d kSignMask = _mm256_set1_pd(-0.0);

inline __m256d vneg(__m256d a) { return _mm256_xor_pd(a, kSignMask); }

inline DD two_sum(__m256d a, __m256d b) {
    __m256d s = _mm256_add_pd(a, b);
    __m256d v = _mm256_sub_pd(s, a);
    __m256d e = _mm256_add_pd(_mm256_sub_pd(a, _mm256_sub_pd(s, v)),
                              _mm256_sub_pd(b, v));
    return {s, e};
}

// requires |a| >= |b| (or a == 0)
inline DD quick_two_sum(__m256d a, __m256d b) {
    __m256d s = _mm256_add_pd(a, b);
    __m256d e = _mm256_sub_pd(b, _mm256_sub_pd(s, a));
    return {s, e};
}

inline DD two_prod(__m256d a, __m256d b) {
    __m256d p = _mm256_mul_pd(a, b);
    __m256d e = _mm256_fmsub_pd(a, b, p);
    return {p, e};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo = _mm256_add_pd(s.lo, _mm256_add_pd(a.lo, b.lo));
    return quick_two_sum(s.hi, s.lo);
}

inline DD dd_add_d(DD a, __m256d b) {
    DD s = two_sum(a.hi, b);
    s.lo = _mm256_add_pd(s.lo, a.lo);
    return quick_two_sum(s.hi, s.lo);
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo = _mm256_add_pd(
        p.lo, _mm256_add_pd(_mm256_mul_pd(a.hi, b.lo), _mm256_mul_pd(a.lo, b.hi)));
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul_d(DD a, __m256d b) {
    DD p = two_prod(a.hi, b);
    p.lo = _mm256_add_pd(p.lo, _mm256_mul_pd(a.lo, b));
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div(DD a, DD b) {
    __m256d q1 = _mm256_div_pd(a.hi, b.hi);
    DD p = dd_mul_d(b, q1);
    DD r = dd_add(a, DD{vneg(p.hi), vneg(p.lo)});
    __m256d q2 = _mm256_div_pd(_mm256_add_pd(r.hi, r.lo), b.hi);
    return quick_two_sum(q1, q2);
}

// integral v with |v| < 2^51
inline __m256i pd_to_epi64(__m256d v) {
    const __m256d magic = _mm256_set1_pd(0x1.8p52);
    return _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(v, magic)),
                            _mm256_castpd_si256(magic));
}

inline __m256d epi64_to_pd(__m256i v) {
    const __m256d magic = _mm256_set1_pd(0x1.8p52);
    return _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_add_epi64(v, _mm256_castpd_si256(magic))), magic);
}

// 2^k for integral k in [-1022, 1023], as a double
inline __m256d pow2d(__m256d k) {
    __m256i bits =
        _mm256_slli_epi64(_mm256_add_epi64(pd_to_epi64(k), _mm256_set1_epi64x(1023)), 52);
    return _mm256_castsi256_pd(bits);
}

const __m256d kLn2Hi = _mm256_set1_pd(0.6931471805599453);
const __m256d kLn2Lo = _mm256_set1_pd(2.3190468138462996e-17);

// ln x in double-double; x must be positive and finite (subnormals ok).
inline DD log_dd(__m256d x) {
    const __m256d min_normal = _mm256_set1_pd(0x1p-1022);
    const __m256d two64 = _mm256_set1_pd(0x1p64);

    __m256d sub_mask = _mm256_cmp_pd(x, min_normal, _CMP_LT_OQ);
    __m256d xs = _mm256_blendv_pd(x, _mm256_mul_pd(x, two64), sub_mask);

    __m256i bits = _mm256_castpd_si256(xs);
    __m256i rawexp =
        _mm256_and_si256(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(0x7FF));
    __m256i mbits =
        _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0xFFFFFFFFFFFFFll)),
                        _mm256_set1_epi64x(0x3FF0000000000000ll));
    __m256d m = _mm256_castsi256_pd(mbits);
    __m256d k = epi64_to_pd(_mm256_sub_epi64(rawexp, _mm256_set1_epi64x(1023)));
    k = _mm256_sub_pd(k, _mm256_and_pd(sub_mask, _mm256_set1_pd(64.0)));

    // fold m into [sqrt(2)/2, sqrt(2)) so that t = (m-1)/(m+1) stays small
    __m256d fold = _mm256_cmp_pd(m, _mm256_set1_pd(1.4142135623730951), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), fold);
    k = _mm256_add_pd(k, _mm256_and_pd(fold, _mm256_set1_pd(1.0)));

    // t = (m - 1)/(m + 1); m - 1 is exact (Sterbenz), m + 1 carried as dd
    __m256d um1 = _mm256_sub_pd(m, _mm256_set1_pd(1.0));
    DD t = dd_div(DD{um1, _mm256_setzero_pd()}, two_sum(m, _mm256_set1_pd(1.0)));

    // ln m = 2t + t^3 * (2/3 + s*P(s)), s = t^2 <= 0.0295
    __m256d s = _mm256_mul_pd(t.hi, t.hi);
    __m256d p = _mm256_set1_pd(0.08695652173913043);            // 2/23
    p = _mm256_fmadd_pd(p, s, _mm256_set1_pd(0.09523809523809523));
    p = _mm256_fmadd_pd(p, s, _mm256_set1_pd(0.10526315789473684));
    p = _mm256_fmadd_pd(p, s, _mm256_set1_pd(0.11764705882352941));
    p = _mm256_fmadd_pd(p, s, _mm256_set1_pd(0.13333333333333333));
    p = _mm256_fmadd_pd(p, s, _mm256_set1_pd(0.15384615384615385));
    p = _mm256_fmadd_pd(p, s, _mm256_set1_pd(0.18181818181818182));
    p = _mm256_fmadd_pd(p, s, _mm256_set1_pd(0.2222222222222222));
    p = _mm256_fmadd_pd(p, s, _mm256_set1_pd(0.2857142857142857));
    p = _mm256_fmadd_pd(p, s, _mm256_set1_pd(0.4));               // 2/5

    DD inner = dd_add_d(DD{_mm256_set1_pd(0.6666666666666666),
                           _mm256_set1_pd(3.700743415417188e-17)},
                        _mm256_mul_pd(s, p));
    DD t3 = dd_mul(dd_mul(t, t), t);
    DD corr = dd_mul(t3, inner);

    DD two_t{_mm256_add_pd(t.hi, t.hi), _mm256_add_pd(t.lo, t.lo)};
    DD kl = dd_mul_d(DD{kLn2Hi, kLn2Lo}, k);
    return dd_add(kl, dd_add(two_t, corr));
}

// exp(d.hi + d.lo) with saturation to +inf / 0 outside the finite range.
inline __m256d exp_dd(DD d) {
    const __m256d inv_ln2 = _mm256_set1_pd(1.4426950408889634);
    __m256d n = _mm256_round_pd(_mm256_mul_pd(d.hi, inv_ln2),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    // clamp so the scaling below stays in representable territory; the
    // overflow/underflow blends at the end own these lanes anyway
    n = _mm256_max_pd(_mm256_min_pd(n, _mm256_set1_pd(2000.0)), _mm256_set1_pd(-2000.0));

    DD r = dd_add(d, dd_mul_d(DD{kLn2Hi, kLn2Lo}, vneg(n)));  // |r| <= ln2/2

    // exp(r) = 1 + r + r^2/2 + r^3 * Q(r), truncation below 1e-17
    __m256d rh = r.hi;
    __m256d q = _mm256_set1_pd(1.6059043836821613e-10);          // 1/13!
    q = _mm256_fmadd_pd(q, rh, _mm256_set1_pd(2.08767569878681e-09));
    q = _mm256_fmadd_pd(q, rh, _mm256_set1_pd(2.505210838544172e-08));
    q = _mm256_fmadd_pd(q, rh, _mm256_set1_pd(2.755731922398589e-07));
    q = _mm256_fmadd_pd(q, rh, _mm256_set1_pd(2.7557319223985893e-06));
    q = _mm256_fmadd_pd(q, rh, _mm256_set1_pd(2.48015873015873e-05));
    q = _mm256_fmadd_pd(q, rh, _mm256_set1_pd(0.0001984126984126984));
    q = _mm256_fmadd_pd(q, rh, _mm256_set1_pd(0.001388888888888889));
    q = _mm256_fmadd_pd(q, rh, _mm256_set1_pd(0.008333333333333333));
    q = _mm256_fmadd_pd(q, rh, _mm256_set1_pd(0.041666666666666664));
    q = _mm256_fmadd_pd(q, rh, _mm256_set1_pd(0.16666666666666666));
    __m256d w = _mm256_mul_pd(_mm256_mul_pd(rh, rh), _mm256_mul_pd(rh, q));

    DD r2 = dd_mul(r, r);
    DD u = dd_add(r, DD{_mm256_mul_pd(r2.hi, _mm256_set1_pd(0.5)),
                        _mm256_mul_pd(r2.lo, _mm256_set1_pd(0.5))});
    u = dd_add_d(u, w);
    u = dd_add_d(u, _mm256_set1_pd(1.0));
    __m256d res = _mm256_add_pd(u.hi, u.lo);

    // scale by 2^n in two steps so subnormal results stay reachable
    __m256d n1 = _mm256_round_pd(_mm256_mul_pd(n, _mm256_set1_pd(0.5)),
                                 _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d n2 = _mm256_sub_pd(n, n1);
    res = _mm256_mul_pd(res, pow2d(n1));
    res = _mm256_mul_pd(res, pow2d(n2));

    __m256d of = _mm256_cmp_pd(d.hi, _mm256_set1_pd(709.782712893384), _CMP_GT_OQ);
    __m256d uf = _mm256_cmp_pd(d.hi, _mm256_set1_pd(-745.2), _CMP_LT_OQ);
    res = _mm256_blendv_pd(res, _mm256_set1_pd(std::numeric_limits<double>::infinity()), of);
    res = _mm256_andnot_pd(uf, res);
    return res;
}

// x^e for nonnegative x; e != 0 broadcast, zero_result = 0^e precomputed
inline __m256d pow_vec(__m256d x, __m256d e, __m256d zero_result) {
    __m256d res = exp_dd(dd_mul_d(log_dd(x), e));
    __m256d z = _mm256_setzero_pd();
    res = _mm256_blendv_pd(res, zero_result, _mm256_cmp_pd(x, z, _CMP_EQ_OQ));
    res = _mm256_blendv_pd(res, _mm256_set1_pd(std::numeric_limits<double>::quiet_NaN()),
                           _mm256_cmp_pd(x, z, _CMP_LT_OQ));
    return res;
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

inline __m256d zero_result_for(double e) {
    return _mm256_set1_pd(e > 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
}

void pow_array_impl(std::span<const double> x, double e, std::span<double> out) {
    const std::size_t n = x.size();
    if (e == 0.0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = 1.0;
        return;
    }
    if (e == 1.0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = x[i];
        return;
    }
    const __m256d ev = _mm256_set1_pd(e);
    const __m256d zr = zero_result_for(e);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(&out[i], pow_vec(_mm256_loadu_pd(&x[i]), ev, zr));
    for (; i < n; ++i) out[i] = std::pow(x[i], e);
}

double pow_sum_impl(std::span<const double> x, double e) {
    const std::size_t n = x.size();
    if (e == 0.0) return static_cast<double>(n);
    double acc = 0.0;
    std::size_t i = 0;
    if (e == 1.0) {
        __m256d vacc = _mm256_setzero_pd();
        for (; i + 4 <= n; i += 4) vacc = _mm256_add_pd(vacc, _mm256_loadu_pd(&x[i]));
        acc = hsum(vacc);
        for (; i < n; ++i) acc += x[i];
        return acc;
    }
    const __m256d ev = _mm256_set1_pd(e);
    const __m256d zr = zero_result_for(e);
    __m256d vacc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4)
        vacc = _mm256_add_pd(vacc, pow_vec(_mm256_loadu_pd(&x[i]), ev, zr));
    acc = hsum(vacc);
    for (; i < n; ++i) acc += std::pow(x[i], e);
    return acc;
}

double dot_pow_impl(std::span<const double> x, std::span<const double> y, double e) {
    const std::size_t n = x.size();
    if (e == 0.0) return static_cast<double>(n);
    double acc = 0.0;
    std::size_t i = 0;
    if (e == 1.0) {
        __m256d vacc = _mm256_setzero_pd();
        for (; i + 4 <= n; i += 4)
            vacc = _mm256_fmadd_pd(_mm256_loadu_pd(&x[i]), _mm256_loadu_pd(&y[i]), vacc);
        acc = hsum(vacc);
        for (; i < n; ++i) acc += x[i] * y[i];
        return acc;
    }
    const __m256d ev = _mm256_set1_pd(e);
    const __m256d zr = zero_result_for(e);
    __m256d vacc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4) {
        __m256d px = pow_vec(_mm256_loadu_pd(&x[i]), ev, zr);
        __m256d py = pow_vec(_mm256_loadu_pd(&y[i]), ev, zr);
        vacc = _mm256_fmadd_pd(px, py, vacc);
    }
    acc = hsum(vacc);
    for (; i < n; ++i) acc += std::pow(x[i], e) * std::pow(y[i], e);
    return acc;
}

double pow_sum_pair_impl(std::span<const double> x, std::span<const double> y,
                         double a, double p) {
    const std::size_t n = x.size();
    const __m256d av = _mm256_set1_pd(a);
    const __m256d pv = _mm256_set1_pd(p);
    const __m256d zra = zero_result_for(a);
    const __m256d zrp = zero_result_for(p);
    __m256d vacc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xa = a == 1.0 ? _mm256_loadu_pd(&x[i])
                              : pow_vec(_mm256_loadu_pd(&x[i]), av, zra);
        __m256d ya = a == 1.0 ? _mm256_loadu_pd(&y[i])
                              : pow_vec(_mm256_loadu_pd(&y[i]), av, zra);
        __m256d s = _mm256_add_pd(xa, ya);
        vacc = _mm256_add_pd(vacc, p == 1.0 ? s : pow_vec(s, pv, zrp));
    }
    double acc = hsum(vacc);
    for (; i < n; ++i) {
        const double s = (a == 1.0 ? x[i] : std::pow(x[i], a)) +
                         (a == 1.0 ? y[i] : std::pow(y[i], a));
        acc += p == 1.0 ? s : std::pow(s, p);
    }
    return acc;
}

double sum_impl(std::span<const double> x) {
    __m256d vacc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= x.size(); i += 4)
        vacc = _mm256_add_pd(vacc, _mm256_loadu_pd(&x[i]));
    double acc = hsum(vacc);
    for (; i < x.size(); ++i) acc += x[i];
    return acc;
}

} // namespace

const KernelTable& table() noexcept {
    static const KernelTable t{pow_array_impl, pow_sum_impl, dot_pow_impl,
                               pow_sum_pair_impl, sum_impl};
    return t;
}

} // namespace alphaineq::kernels::avx2
