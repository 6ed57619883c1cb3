// SPDX-License-Identifier: Apache-2.0
#include "alphaineq/alpha_real.hpp"

#include <cmath>
#include <string>

namespace alphaineq {

namespace {

// Above this the naive std::pow(base, alpha) is replaced by the log-domain
// route; base^alpha <= base for alpha <= 1, so this is belt and braces for
// bases produced by pow() chains close to the representable limit.
constexpr double kLogDomainThreshold = 1e300;

void require_same_dim(const AlphaReal& x, const AlphaReal& y) {
    if (!(x.dim() == y.dim()))
        throw DimensionError("alpha-type values with different dimensions are not combinable");
}

bool is_integer(double m) {
    return std::isfinite(m) && m == std::floor(m);
}

} // namespace

AlphaReal AlphaReal::make(double a, Dimension dim) {
    if (!std::isfinite(a))
        throw DomainError("alpha-type base must be finite");
    const int sign = (a > 0.0) - (a < 0.0);
    return AlphaReal(sign, std::abs(a), dim);
}

AlphaReal add(const AlphaReal& x, const AlphaReal& y) {
    require_same_dim(x, y);
    return AlphaReal::make(x.signed_base() + y.signed_base(), x.dim());
}

AlphaReal neg(const AlphaReal& x) {
    return AlphaReal::make(-x.signed_base(), x.dim());
}

AlphaReal sub(const AlphaReal& x, const AlphaReal& y) {
    require_same_dim(x, y);
    return add(x, neg(y));
}

AlphaReal mul(const AlphaReal& x, const AlphaReal& y) {
    require_same_dim(x, y);
    const double product = x.signed_base() * y.signed_base();
    if (!std::isfinite(product))
        throw OverflowError("alpha-type product overflows the base range");
    return AlphaReal::make(product, x.dim());
}

AlphaReal scalar_mul(double m, const AlphaReal& x) {
    if (!std::isfinite(m))
        throw DomainError("scalar multiplier must be finite");
    if (m == 0.0 || x.sign() == 0)
        return AlphaReal::make(0.0, x.dim());
    const double alpha = x.dim().alpha();
    const double factor = std::pow(std::abs(m), 1.0 / alpha);
    const double base = factor * x.base();
    if (!std::isfinite(base))
        throw OverflowError("scalar_mul: |m|^(1/alpha) overflows at alpha = " +
                            std::to_string(alpha));
    const int sign = ((m < 0.0) ? -1 : 1) * x.sign();
    return AlphaReal::make(sign < 0 ? -base : base, x.dim());
}

AlphaReal pow(const AlphaReal& x, double m) {
    if (!std::isfinite(m))
        throw DomainError("exponent must be finite");
    if (x.sign() == 0) {
        if (m < 0.0)
            throw PoleError("zero base raised to a negative exponent");
        return AlphaReal::make(m == 0.0 ? 1.0 : 0.0, x.dim());
    }
    int sign = 1;
    if (x.sign() < 0) {
        if (!is_integer(m))
            throw DomainError("negative base requires an integer exponent");
        sign = (std::fmod(m, 2.0) == 0.0) ? 1 : -1;
    }
    const double base = std::pow(x.base(), m);
    if (!std::isfinite(base))
        throw OverflowError("pow: base^m overflows the base range");
    return AlphaReal::make(sign < 0 ? -base : base, x.dim());
}

double value(const AlphaReal& x) {
    if (x.sign() == 0)
        return 0.0;
    const double alpha = x.dim().alpha();
    const double magnitude = x.base() > kLogDomainThreshold
                                 ? std::exp(alpha * std::log(x.base()))
                                 : std::pow(x.base(), alpha);
    if (!std::isfinite(magnitude))
        throw OverflowError("value: base^alpha is not representable");
    return x.sign() < 0 ? -magnitude : magnitude;
}

std::strong_ordering cmp(const AlphaReal& x, const AlphaReal& y) {
    require_same_dim(x, y);
    const double a = x.signed_base();
    const double b = y.signed_base();
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace alphaineq
