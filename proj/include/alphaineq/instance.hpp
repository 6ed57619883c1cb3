// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "alphaineq/dimension.hpp"
#include "alphaineq/errors.hpp"

namespace alphaineq {

enum class Regime { holder, reverse };

enum class FormVariant { normalized, as_written };

enum class InequalityId {
    bernoulli,
    young,
    nary_young,
    holder,
    minkowski,
    holder_multi,
    minkowski_multi,
    radon,
    radon_multi,
};

const char* to_string(Regime r) noexcept;
const char* to_string(FormVariant v) noexcept;
const char* to_string(InequalityId id) noexcept;
Regime parse_regime(const std::string& s);
FormVariant parse_form_variant(const std::string& s);
InequalityId parse_inequality_id(const std::string& s);

/// Conjugate exponents with 1/p + 1/q = 1. Holder regime has p, q > 1;
/// the reverse regime has 0 < p < 1 and q < 0.
struct ConjugatePair {
    double p;
    double q;
    Regime regime;

    static ConjugatePair from_p(double p);
    static ConjugatePair from_pq(double p, double q);
};

/// Exponents p_1..p_n with sum of reciprocals 1. Holder regime: all p_i > 1.
/// Reverse regime: 0 < p_1 < 1 and p_i < 0 for i >= 2.
struct ExponentTuple {
    std::vector<double> exponents;
    Regime regime;

    static ExponentTuple from_exponents(std::vector<double> exponents);
    std::size_t size() const noexcept { return exponents.size(); }
};

struct BernoulliInstance {
    double y;
    double m;
};

struct YoungInstance {
    double a;
    double b;
};

struct NaryYoungInstance {
    std::vector<double> a;
};

struct PairedInstance {
    std::vector<double> x;
    std::vector<double> y;
};

/// n sample points (rows) of m sequences (columns), stored row-major.
struct MultiInstance {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
};

struct RadonInstance {
    std::vector<double> x;
    std::vector<double> y;
    double r;
};

using InstancePayload = std::variant<BernoulliInstance, YoungInstance,
                                     NaryYoungInstance, PairedInstance,
                                     MultiInstance, RadonInstance>;

struct InstanceSpec {
    InstancePayload payload;
    Dimension dim;
};

} // namespace alphaineq
