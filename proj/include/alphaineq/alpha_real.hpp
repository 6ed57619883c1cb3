// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>

#include "alphaineq/dimension.hpp"
#include "alphaineq/errors.hpp"

namespace alphaineq {

/// A signed alpha-type number a^alpha stored as (sign, |a|, alpha).
///
/// The arithmetic of the alpha-type reals is exact arithmetic on the signed
/// bases; evaluating sign * |a|^alpha is a separate, lossy view (value()).
/// Storing the base instead of the evaluated power keeps the operation
/// axioms tolerance-free. Negative elements evaluate with the
/// signed-magnitude convention value = -|a|^alpha.
class AlphaReal {
public:
    /// Build the alpha-type representative of the finite real a.
    static AlphaReal make(double a, Dimension dim);

    int sign() const noexcept { return sign_; }
    double base() const noexcept { return base_; }
    Dimension dim() const noexcept { return dim_; }

    /// The underlying real a, i.e. sign * base.
    double signed_base() const noexcept { return sign_ < 0 ? -base_ : base_; }

private:
    AlphaReal(int sign, double base, Dimension dim)
        : sign_(sign), base_(base), dim_(dim) {}

    int sign_;
    double base_;
    Dimension dim_;
};

AlphaReal add(const AlphaReal& x, const AlphaReal& y);
AlphaReal sub(const AlphaReal& x, const AlphaReal& y);
AlphaReal mul(const AlphaReal& x, const AlphaReal& y);
AlphaReal neg(const AlphaReal& x);

/// Multiply the *value* of x by the plain real m. Realized in base space as
/// base <- |m|^(1/alpha) * base, which overflows for tiny alpha.
AlphaReal scalar_mul(double m, const AlphaReal& x);

/// x^m in base space: base <- base^m. Requires a nonnegative x or an integer
/// m; a zero base with m < 0 is a pole.
AlphaReal pow(const AlphaReal& x, double m);

/// Evaluate sign * base^alpha. Switches to the log domain for huge bases.
double value(const AlphaReal& x);

/// Ordering of signed bases. Agrees with ordering of values, so
/// a^alpha > b^alpha iff a > b.
std::strong_ordering cmp(const AlphaReal& x, const AlphaReal& y);

} // namespace alphaineq
