#pragma once

#include <array>
#include <complex>
#include <span>
#include <string_view>

namespace taco::sim {

using Complex = std::complex<double>;

// Row-major 2x2 unitary: [m00 m01; m10 m11].
using Mat2 = std::array<Complex, 4>;

enum class KernelBackend { Auto, Scalar, Avx2 };

// Backend actually used for the next kernel call (Auto resolved).
KernelBackend active_backend();

// Pins the kernel backend; Auto restores runtime detection. Throws
// std::invalid_argument if the requested backend is unavailable on this CPU.
void force_backend(KernelBackend backend);

std::string_view backend_name(KernelBackend backend);

// Applies a 2x2 unitary to the amplitude pairs split on `wire`. Basis index
// bit 0 is wire 0 (wire 0 = least-significant bit), everywhere in this
// codebase.
void apply_single_qubit(std::span<Complex> amps, unsigned wire, const Mat2& m);

// Swaps the target bit of every basis state whose control bit is set.
void apply_cnot(std::span<Complex> amps, unsigned control, unsigned target);

// <Z_wire> = sum_b |amp_b|^2 * (+1 if bit(b, wire) == 0 else -1).
double expval_z(std::span<const Complex> amps, unsigned wire);

namespace detail {

void apply_single_qubit_scalar(std::span<Complex> amps, unsigned wire,
                               const Mat2& m);
double expval_z_scalar(std::span<const Complex> amps, unsigned wire);

#if defined(__x86_64__)
void apply_single_qubit_avx2(std::span<Complex> amps, unsigned wire,
                             const Mat2& m);
double expval_z_avx2(std::span<const Complex> amps, unsigned wire);
#endif

} // namespace detail

} // namespace taco::sim
