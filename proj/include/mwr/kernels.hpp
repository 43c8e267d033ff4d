// SPDX-License-Identifier: Apache-2.0
//
// Data-parallel inner loops of the simulator. Each kernel has a scalar
// reference implementation (libm sin/cos) and SIMD variants built on a shared
// octant-reduced polynomial sincos; the active variant is picked once at
// startup from the host CPU and can be forced with MWR_KERNEL=scalar|avx2|neon
// or set_isa().
#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace mwr::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);
std::vector<Isa> available_isas();

Isa active_isa();
// Throws Errc::invalid_parameter if `isa` is not available.
void set_isa(Isa isa);

// out[j] = sum_n amp[n] * exp(-i 2 pi (base[n] + j * step[n])),  j = 0 .. out.size()-1.
// Phases are in cycles; each is reduced to [-1/2, 1/2] before evaluation.
// base, step and amp must have equal length.
using PhasorSumFn = void (*)(std::span<const double> base, std::span<const double> step,
                             std::span<const double> amp, std::span<std::complex<double>> out);

// sum_k |z_k|^2
using EnergyFn = double (*)(std::span<const std::complex<double>> z);

struct KernelTable {
    Isa isa;
    PhasorSumFn phasor_sum;
    EnergyFn energy;
};

// Table for a specific ISA (for equivalence tests); throws if unavailable.
const KernelTable& table(Isa isa);

// Dispatched entry points.
void phasor_sum(std::span<const double> base, std::span<const double> step,
                std::span<const double> amp, std::span<std::complex<double>> out);
double energy(std::span<const std::complex<double>> z);

namespace scalar {
void phasor_sum(std::span<const double> base, std::span<const double> step,
                std::span<const double> amp, std::span<std::complex<double>> out);
double energy(std::span<const std::complex<double>> z);
}  // namespace scalar

#if defined(MWR_HAVE_AVX2_KERNELS)
namespace avx2 {
void phasor_sum(std::span<const double> base, std::span<const double> step,
                std::span<const double> amp, std::span<std::complex<double>> out);
double energy(std::span<const std::complex<double>> z);
}  // namespace avx2
#endif

#if defined(MWR_HAVE_NEON_KERNELS)
namespace neon {
void phasor_sum(std::span<const double> base, std::span<const double> step,
                std::span<const double> amp, std::span<std::complex<double>> out);
double energy(std::span<const std::complex<double>> z);
}  // namespace neon
#endif

}  // namespace mwr::kernels
