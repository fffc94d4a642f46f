#if defined(__x86_64__)

#include "taco/sim/kernels.hpp"

#include <cstddef>
#include <immintrin.h>

namespace taco::sim::detail {

namespace {

// Multiplies two interleaved complex doubles [r0 i0 r1 i1] by the scalar
// complex (mr + mi*i). No FMA: keeps results bit-identical to the scalar
// kernel's multiply/add order.
inline __m256d cmul(__m256d v, __m256d mr, __m256d mi) {
    const __m256d vr = _mm256_mul_pd(v, mr);
    const __m256d vs = _mm256_mul_pd(_mm256_permute_pd(v, 0x5), mi);
    // even lanes: r*mr - i*mi, odd lanes: i*mr + r*mi
    return _mm256_addsub_pd(vr, vs);
}

} // namespace

void apply_single_qubit_avx2(std::span<Complex> amps, unsigned wire,
                             const Mat2& m) {
    const std::size_t n = amps.size();
    if (n < 4) {
        apply_single_qubit_scalar(amps, wire, m);
        return;
    }
    const __m256d m00r = _mm256_set1_pd(m[0].real());
    const __m256d m00i = _mm256_set1_pd(m[0].imag());
    const __m256d m01r = _mm256_set1_pd(m[1].real());
    const __m256d m01i = _mm256_set1_pd(m[1].imag());
    const __m256d m10r = _mm256_set1_pd(m[2].real());
    const __m256d m10i = _mm256_set1_pd(m[2].imag());
    const __m256d m11r = _mm256_set1_pd(m[3].real());
    const __m256d m11i = _mm256_set1_pd(m[3].imag());
    double* p = reinterpret_cast<double*>(amps.data());

    if (wire == 0) {
        // Pairs are adjacent: deinterleave [z0 z1][z2 z3] into the even
        // amplitudes [z0 z2] and odd amplitudes [z1 z3].
        for (std::size_t i = 0; i < n; i += 4) {
            double* q = p + 2 * i;
            const __m256d A = _mm256_loadu_pd(q);
            const __m256d B = _mm256_loadu_pd(q + 4);
            const __m256d a0 = _mm256_permute2f128_pd(A, B, 0x20);
            const __m256d a1 = _mm256_permute2f128_pd(A, B, 0x31);
            const __m256d n0 =
                _mm256_add_pd(cmul(a0, m00r, m00i), cmul(a1, m01r, m01i));
            const __m256d n1 =
                _mm256_add_pd(cmul(a0, m10r, m10i), cmul(a1, m11r, m11i));
            _mm256_storeu_pd(q, _mm256_permute2f128_pd(n0, n1, 0x20));
            _mm256_storeu_pd(q + 4, _mm256_permute2f128_pd(n0, n1, 0x31));
        }
        return;
    }

    // wire >= 1: each pair block is a contiguous run of >= 2 complex values.
    const std::size_t bit = std::size_t{1} << wire;
    for (std::size_t base = 0; base < n; base += 2 * bit) {
        for (std::size_t i = base; i < base + bit; i += 2) {
            double* q0 = p + 2 * i;
            double* q1 = p + 2 * (i + bit);
            const __m256d a0 = _mm256_loadu_pd(q0);
            const __m256d a1 = _mm256_loadu_pd(q1);
            _mm256_storeu_pd(
                q0, _mm256_add_pd(cmul(a0, m00r, m00i), cmul(a1, m01r, m01i)));
            _mm256_storeu_pd(
                q1, _mm256_add_pd(cmul(a0, m10r, m10i), cmul(a1, m11r, m11i)));
        }
    }
}

double expval_z_avx2(std::span<const Complex> amps, unsigned wire) {
    const std::size_t n = amps.size();
    if (n < 4) {
        return expval_z_scalar(amps, wire);
    }
    const double* p = reinterpret_cast<const double*>(amps.data());
    __m256d acc = _mm256_setzero_pd();

    if (wire == 0) {
        const __m256d signs = _mm256_setr_pd(1.0, 1.0, -1.0, -1.0);
        for (std::size_t i = 0; i < n; i += 2) {
            const __m256d v = _mm256_loadu_pd(p + 2 * i);
            acc = _mm256_add_pd(acc,
                                _mm256_mul_pd(signs, _mm256_mul_pd(v, v)));
        }
    } else {
        const std::size_t bit = std::size_t{1} << wire;
        for (std::size_t base = 0; base < n; base += 2 * bit) {
            for (std::size_t i = base; i < base + bit; i += 2) {
                const __m256d v = _mm256_loadu_pd(p + 2 * i);
                acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
            }
            for (std::size_t i = base + bit; i < base + 2 * bit; i += 2) {
                const __m256d v = _mm256_loadu_pd(p + 2 * i);
                acc = _mm256_sub_pd(acc, _mm256_mul_pd(v, v));
            }
        }
    }

    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

} // namespace taco::sim::detail

#endif // __x86_64__
