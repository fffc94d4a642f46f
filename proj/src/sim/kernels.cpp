#include "taco/sim/kernels.hpp"

#include <atomic>
#include <cstddef>
#include <stdexcept>

namespace taco::sim {

namespace {

bool avx2_available() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

KernelBackend detect() {
    return avx2_available() ? KernelBackend::Avx2 : KernelBackend::Scalar;
}

std::atomic<KernelBackend> g_forced{KernelBackend::Auto};

} // namespace

KernelBackend active_backend() {
    const KernelBackend f = g_forced.load(std::memory_order_relaxed);
    return f == KernelBackend::Auto ? detect() : f;
}

void force_backend(KernelBackend backend) {
    if (backend == KernelBackend::Avx2 && !avx2_available()) {
        throw std::invalid_argument("AVX2 backend not available on this CPU");
    }
    g_forced.store(backend, std::memory_order_relaxed);
}

std::string_view backend_name(KernelBackend backend) {
    switch (backend) {
    case KernelBackend::Auto:
        return "auto";
    case KernelBackend::Scalar:
        return "scalar";
    case KernelBackend::Avx2:
        return "avx2";
    }
    return "unknown";
}

void apply_single_qubit(std::span<Complex> amps, unsigned wire, const Mat2& m) {
#if defined(__x86_64__)
    if (active_backend() == KernelBackend::Avx2) {
        detail::apply_single_qubit_avx2(amps, wire, m);
        return;
    }
#endif
    detail::apply_single_qubit_scalar(amps, wire, m);
}

void apply_cnot(std::span<Complex> amps, unsigned control, unsigned target) {
    // Pure permutation; memory-bound, no SIMD variant.
    const std::size_t n = amps.size();
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t b = 0; b < n; ++b) {
        if ((b & cbit) != 0 && (b & tbit) == 0) {
            std::swap(amps[b], amps[b | tbit]);
        }
    }
}

double expval_z(std::span<const Complex> amps, unsigned wire) {
#if defined(__x86_64__)
    if (active_backend() == KernelBackend::Avx2) {
        return detail::expval_z_avx2(amps, wire);
    }
#endif
    return detail::expval_z_scalar(amps, wire);
}

} // namespace taco::sim
