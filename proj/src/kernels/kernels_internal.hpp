// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

namespace alphaineq::kernels {

struct KernelTable {
    void (*pow_array)(std::span<const double>, double, std::span<double>);
    double (*pow_sum)(std::span<const double>, double);
    double (*dot_pow)(std::span<const double>, std::span<const double>, double);
    double (*pow_sum_pair)(std::span<const double>, std::span<const double>,
                           double, double);
    double (*sum)(std::span<const double>);
};

namespace scalar {
const KernelTable& table() noexcept;
}

#if defined(ALPHAINEQ_HAVE_AVX2_TU)
namespace avx2 {
const KernelTable& table() noexcept;
}
#endif

} // namespace alphaineq::kernels
