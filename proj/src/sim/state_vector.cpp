#include "taco/sim/state_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace taco::sim {

std::string_view to_string(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::CNOT:
        return "CNOT";
    }
    return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
    if (name == "RX") return GateKind::RX;
    if (name == "RY") return GateKind::RY;
    if (name == "RZ") return GateKind::RZ;
    if (name == "CNOT") return GateKind::CNOT;
    throw std::invalid_argument("unknown gate kind: " + std::string(name));
}

GateInstance GateInstance::rotation(GateKind kind, unsigned wire, double angle) {
    if (kind == GateKind::CNOT) {
        throw std::invalid_argument("rotation() called with CNOT");
    }
    return GateInstance{kind, wire, 0, angle};
}

GateInstance GateInstance::cnot(unsigned control, unsigned target) {
    return GateInstance{GateKind::CNOT, target, control, 0.0};
}

StateVector init_state(unsigned n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("n_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
    StateVector state;
    state.n_qubits = n_qubits;
    state.amplitudes.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    state.amplitudes[0] = Complex{1.0, 0.0};
    return state;
}

Mat2 rotation_matrix(GateKind kind, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    switch (kind) {
    case GateKind::RX:
        return Mat2{Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}};
    case GateKind::RY:
        return Mat2{Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
    case GateKind::RZ:
        return Mat2{Complex{c, -s}, Complex{0, 0}, Complex{0, 0}, Complex{c, s}};
    case GateKind::CNOT:
        break;
    }
    throw std::invalid_argument("rotation_matrix() called with CNOT");
}

void apply_gate(StateVector& state, const GateInstance& gate) {
    if (gate.wire >= state.n_qubits) {
        throw std::invalid_argument("gate wire out of range");
    }
    if (gate.kind == GateKind::CNOT) {
        if (gate.control >= state.n_qubits) {
            throw std::invalid_argument("gate control out of range");
        }
        if (gate.control == gate.wire) {
            throw std::invalid_argument("CNOT control equals target");
        }
        apply_cnot(state.amplitudes, gate.control, gate.wire);
        return;
    }
    if (!std::isfinite(gate.angle)) {
        throw std::invalid_argument("rotation angle must be finite");
    }
    apply_single_qubit(state.amplitudes, gate.wire,
                       rotation_matrix(gate.kind, gate.angle));
}

double expectation_z(const StateVector& state, unsigned wire) {
    if (wire >= state.n_qubits) {
        throw std::invalid_argument("expectation_z wire out of range");
    }
    return expval_z(state.amplitudes, wire);
}

double state_norm(const StateVector& state) {
    double sum = 0.0;
    for (const Complex& a : state.amplitudes) {
        sum += a.real() * a.real() + a.imag() * a.imag();
    }
    return std::sqrt(sum);
}

} // namespace taco::sim
