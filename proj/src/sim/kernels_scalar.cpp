#include "taco/sim/kernels.hpp"

#include <cstddef>

namespace taco::sim::detail {

// Complex arithmetic is written out over raw doubles so the scalar path and
// the SIMD paths execute the exact same sequence of multiplies and adds
// (bit-exact cross-backend results for gate application).
void apply_single_qubit_scalar(std::span<Complex> amps, unsigned wire,
                               const Mat2& m) {
    const std::size_t n = amps.size();
    const std::size_t bit = std::size_t{1} << wire;
    const double m00r = m[0].real(), m00i = m[0].imag();
    const double m01r = m[1].real(), m01i = m[1].imag();
    const double m10r = m[2].real(), m10i = m[2].imag();
    const double m11r = m[3].real(), m11i = m[3].imag();
    for (std::size_t base = 0; base < n; base += 2 * bit) {
        for (std::size_t i = base; i < base + bit; ++i) {
            const double a0r = amps[i].real(), a0i = amps[i].imag();
            const double a1r = amps[i + bit].real(), a1i = amps[i + bit].imag();
            amps[i] = Complex{(m00r * a0r - m00i * a0i) + (m01r * a1r - m01i * a1i),
                              (m00i * a0r + m00r * a0i) + (m01i * a1r + m01r * a1i)};
            amps[i + bit] =
                Complex{(m10r * a0r - m10i * a0i) + (m11r * a1r - m11i * a1i),
                        (m10i * a0r + m10r * a0i) + (m11i * a1r + m11r * a1i)};
        }
    }
}

double expval_z_scalar(std::span<const Complex> amps, unsigned wire) {
    const std::size_t n = amps.size();
    const std::size_t bit = std::size_t{1} << wire;
    double sum = 0.0;
    for (std::size_t base = 0; base < n; base += 2 * bit) {
        for (std::size_t i = base; i < base + bit; ++i) {
            const double r = amps[i].real(), im = amps[i].imag();
            sum += r * r + im * im;
        }
        for (std::size_t i = base + bit; i < base + 2 * bit; ++i) {
            const double r = amps[i].real(), im = amps[i].imag();
            sum -= r * r + im * im;
        }
    }
    return sum;
}

} // namespace taco::sim::detail
