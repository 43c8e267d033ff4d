// SPDX-License-Identifier: Apache-2.0
#include <atomic>
#include <cstdlib>
#include <string>

#include "mwr/error.hpp"
#include "mwr/kernels.hpp"

namespace mwr::kernels {

namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::phasor_sum, &scalar::energy};
#if defined(MWR_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{Isa::avx2, &avx2::phasor_sum, &avx2::energy};
#endif
#if defined(MWR_HAVE_NEON_KERNELS)
constexpr KernelTable kNeon{Isa::neon, &neon::phasor_sum, &neon::energy};
#endif

bool cpu_supports(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(MWR_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::neon:
#if defined(MWR_HAVE_NEON_KERNELS)
            return true;  // mandatory on AArch64
#else
            return false;
#endif
    }
    return false;
}

const KernelTable* lookup(Isa isa) {
    if (!cpu_supports(isa)) {
        return nullptr;
    }
    switch (isa) {
        case Isa::scalar: return &kScalar;
#if defined(MWR_HAVE_AVX2_KERNELS)
        case Isa::avx2: return &kAvx2;
#endif
#if defined(MWR_HAVE_NEON_KERNELS)
        case Isa::neon: return &kNeon;
#endif
        default: return nullptr;
    }
}

const KernelTable* initial_table() {
    if (const char* forced = std::getenv("MWR_KERNEL")) {
        const std::string name(forced);
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
            if (name == to_string(isa)) {
                if (const KernelTable* t = lookup(isa)) {
                    return t;
                }
            }
        }
    }
    for (Isa isa : {Isa::avx2, Isa::neon}) {
        if (const KernelTable* t = lookup(isa)) {
            return t;
        }
    }
    return &kScalar;
}

std::atomic<const KernelTable*>& active() {
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

}  // namespace

std::string_view to_string(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

bool isa_available(Isa isa) { return lookup(isa) != nullptr; }

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (isa_available(isa)) {
            out.push_back(isa);
        }
    }
    return out;
}

Isa active_isa() { return active().load()->isa; }

const KernelTable& table(Isa isa) {
    const KernelTable* t = lookup(isa);
    if (!t) {
        throw Error(Errc::invalid_parameter,
                    "kernel ISA " + std::string(to_string(isa)) + " is not available on this host");
    }
    return *t;
}

void set_isa(Isa isa) { active().store(&table(isa)); }

void phasor_sum(std::span<const double> base, std::span<const double> step,
                std::span<const double> amp, std::span<std::complex<double>> out) {
    active().load(std::memory_order_relaxed)->phasor_sum(base, step, amp, out);
}

double energy(std::span<const std::complex<double>> z) {
    return active().load(std::memory_order_relaxed)->energy(z);
}

}  // namespace mwr::kernels
