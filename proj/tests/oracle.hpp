// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference evaluation: the displayed formulas computed directly
// in long double, with none of the library's kernel machinery. Used to
// freeze expected values and to cross-check gaps independently.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

inline long double pw(long double x, long double e) { return std::pow(x, e); }

struct Sides {
    long double lhs;
    long double rhs;
};

inline Sides bernoulli(double y, double m, double al) {
    const long double d = static_cast<long double>(y) - 1.0L;
    const long double sign = d > 0 ? 1.0L : (d < 0 ? -1.0L : 0.0L);
    return {pw(y, static_cast<long double>(al) * m) - 1.0L,
            static_cast<long double>(m) * sign * pw(std::abs(d), al)};
}

inline Sides young(double a, double b, double p, double q, double al) {
    return {pw(a, al) * pw(b, al), pw(a, p * al) / p + pw(b, q * al) / q};
}

inline Sides nary_young(const std::vector<double>& a, const std::vector<double>& p,
                        double al) {
    long double lhs = 1.0L, rhs = 0.0L;
    for (std::size_t i = 0; i < a.size(); ++i) {
        lhs *= pw(a[i], al);
        rhs += pw(a[i], p[i] * al) / p[i];
    }
    return {lhs, rhs};
}

inline Sides holder(const std::vector<double>& x, const std::vector<double>& y,
                    double p, double q, double al) {
    long double lhs = 0.0L, sx = 0.0L, sy = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        lhs += pw(x[i], al) * pw(y[i], al);
        sx += pw(x[i], al * p);
        sy += pw(y[i], al * q);
    }
    return {lhs, pw(sx, 1.0L / p) * pw(sy, 1.0L / q)};
}

inline Sides minkowski(const std::vector<double>& x, const std::vector<double>& y,
                       double p, double al, bool printed_q_form) {
    long double sp = 0.0L, sx = 0.0L, sy = 0.0L;
    const long double second = printed_q_form && p > 1.0 ? p / (p - 1.0L)
                                                         : static_cast<long double>(p);
    for (std::size_t i = 0; i < x.size(); ++i) {
        sp += pw(pw(x[i], al) + pw(y[i], al), p);
        sx += pw(x[i], al * p);
        sy += pw(y[i], al * static_cast<double>(second));
    }
    return {pw(sp, 1.0L / p), pw(sx, 1.0L / p) + pw(sy, 1.0L / second)};
}

inline Sides radon(const std::vector<double>& x, const std::vector<double>& y,
                   double p, double r, double al) {
    long double np = 0.0L, nr = 0.0L, xp = 0.0L, xr = 0.0L, yp = 0.0L, yr = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const long double s = pw(x[i], al) + pw(y[i], al);
        np += pw(s, p);
        nr += pw(s, r);
        xp += pw(x[i], al * p);
        xr += pw(x[i], al * r);
        yp += pw(y[i], al * p);
        yr += pw(y[i], al * r);
    }
    const long double e = 1.0L / (static_cast<long double>(p) - r);
    return {pw(np / nr, e), pw(xp / xr, e) + pw(yp / yr, e)};
}

} // namespace oracle
