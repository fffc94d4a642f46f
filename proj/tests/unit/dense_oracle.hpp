#pragma once

// Test-only oracle: applies gates by explicit dense-matrix (Kronecker
// product) multiplication. Independent of the strided kernel path it checks.

#include <vector>

#include "taco/sim/state_vector.hpp"

namespace oracle {

using taco::sim::Complex;
using taco::sim::GateInstance;
using taco::sim::GateKind;
using taco::sim::StateVector;

using DenseMatrix = std::vector<std::vector<Complex>>;

// Full 2^n x 2^n unitary with wire 0 as the least-significant basis bit.
inline DenseMatrix dense_gate_matrix(unsigned n_qubits, const GateInstance& g) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    DenseMatrix u(dim, std::vector<Complex>(dim, Complex{0, 0}));
    if (g.kind == GateKind::CNOT) {
        const std::size_t cbit = std::size_t{1} << g.control;
        const std::size_t tbit = std::size_t{1} << g.wire;
        for (std::size_t j = 0; j < dim; ++j) {
            const std::size_t i = (j & cbit) ? (j ^ tbit) : j;
            u[i][j] = Complex{1, 0};
        }
        return u;
    }
    const taco::sim::Mat2 m = taco::sim::rotation_matrix(g.kind, g.angle);
    const std::size_t wbit = std::size_t{1} << g.wire;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if ((i & ~wbit) != (j & ~wbit)) {
                continue;
            }
            const std::size_t bi = (i & wbit) ? 1 : 0;
            const std::size_t bj = (j & wbit) ? 1 : 0;
            u[i][j] = m[bi * 2 + bj];
        }
    }
    return u;
}

inline void dense_apply_gate(StateVector& state, const GateInstance& g) {
    const DenseMatrix u = dense_gate_matrix(state.n_qubits, g);
    const std::size_t dim = state.amplitudes.size();
    std::vector<Complex> out(dim, Complex{0, 0});
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            out[i] += u[i][j] * state.amplitudes[j];
        }
    }
    state.amplitudes = std::move(out);
}

inline double dense_expectation_z(const StateVector& state, unsigned wire) {
    const std::size_t wbit = std::size_t{1} << wire;
    double sum = 0.0;
    for (std::size_t b = 0; b < state.amplitudes.size(); ++b) {
        const double p = std::norm(state.amplitudes[b]);
        sum += (b & wbit) ? -p : p;
    }
    return sum;
}

} // namespace oracle
