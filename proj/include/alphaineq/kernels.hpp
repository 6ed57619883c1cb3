// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

namespace alphaineq::kernels {

// The power-sum reductions behind the catalog evaluators come in two
// equivalence-tested flavours: portable scalar reference kernels built on
// std::pow, and AVX2 kernels with a double-double exp/log vector pow. The
// backend is picked once at startup from the host CPU; set_backend() exists
// so tests can pin either side.
enum class Backend { scalar, avx2 };

Backend active_backend() noexcept;
bool backend_available(Backend b) noexcept;
const char* backend_name(Backend b) noexcept;

/// Select a backend explicitly; returns the previous one.
/// Throws UsageError if the requested backend is unavailable on this host.
Backend set_backend(Backend b);

/// out[i] = x[i]^e for nonnegative x[i]. e == 0 yields 1 everywhere,
/// including at x[i] == 0; a zero with e < 0 yields +inf (callers guard
/// poles before reaching the kernels).
void pow_array(std::span<const double> x, double e, std::span<double> out);

/// sum_i x[i]^e
double pow_sum(std::span<const double> x, double e);

/// sum_i x[i]^e * y[i]^e
double dot_pow(std::span<const double> x, std::span<const double> y, double e);

/// sum_i (x[i]^a + y[i]^a)^p
double pow_sum_pair(std::span<const double> x, std::span<const double> y,
                    double a, double p);

double sum(std::span<const double> x);

} // namespace alphaineq::kernels
