#include "taco/vqc/structure.hpp"

#include <cmath>
#include <stdexcept>

#include "taco/util/rng.hpp"

namespace taco::vqc {

namespace {

thread_local std::uint64_t g_forward_calls = 0;

constexpr sim::GateKind kRotationKinds[3] = {sim::GateKind::RX,
                                             sim::GateKind::RY,
                                             sim::GateKind::RZ};

} // namespace

std::size_t VqcStructure::parameter_count() const {
    return static_cast<std::size_t>(n_wires) * layers.size();
}

VqcStructure build_vqc(unsigned n_wires, unsigned n_layers, std::uint64_t seed) {
    if (n_wires == 0) {
        throw std::invalid_argument("build_vqc: n_wires must be >= 1");
    }
    if (n_layers == 0) {
        throw std::invalid_argument("build_vqc: n_layers must be >= 1");
    }
    VqcStructure vqc;
    vqc.n_wires = n_wires;
    vqc.seed = seed;
    vqc.layers.resize(n_layers);
    for (unsigned l = 0; l < n_layers; ++l) {
        Layer& layer = vqc.layers[l];
        layer.rotations.reserve(n_wires);
        for (unsigned w = 0; w < n_wires; ++w) {
            rng::SplitMix64 gen(rng::derive_key(seed, l, w));
            layer.rotations.push_back(kRotationKinds[gen.below(3)]);
        }
        if (n_wires >= 2) {
            layer.entanglers.reserve(n_wires);
            for (unsigned w = 0; w < n_wires; ++w) {
                layer.entanglers.emplace_back(w, (w + 1) % n_wires);
            }
        }
    }
    vqc.measured_wires.resize(n_wires);
    for (unsigned w = 0; w < n_wires; ++w) {
        vqc.measured_wires[w] = w;
    }
    return vqc;
}

std::vector<sim::GateInstance> encode(std::span<const double> features,
                                      unsigned n_wires) {
    if (features.size() != n_wires) {
        throw std::invalid_argument("encode: feature count != n_wires");
    }
    std::vector<sim::GateInstance> gates;
    gates.reserve(n_wires);
    for (unsigned w = 0; w < n_wires; ++w) {
        if (!std::isfinite(features[w])) {
            throw std::invalid_argument("encode: non-finite feature");
        }
        gates.push_back(
            sim::GateInstance::rotation(sim::GateKind::RY, w, features[w]));
    }
    return gates;
}

std::vector<double> forward(const VqcStructure& vqc,
                            std::span<const double> params,
                            std::span<const double> features) {
    if (params.size() != vqc.parameter_count()) {
        throw std::invalid_argument("forward: params length != parameter count");
    }
    ++g_forward_calls;
    sim::StateVector state = sim::init_state(vqc.n_wires);
    for (const sim::GateInstance& g : encode(features, vqc.n_wires)) {
        sim::apply_gate(state, g);
    }
    std::size_t p = 0;
    for (const Layer& layer : vqc.layers) {
        for (unsigned w = 0; w < vqc.n_wires; ++w) {
            sim::apply_gate(state, sim::GateInstance::rotation(
                                       layer.rotations[w], w, params[p++]));
        }
        for (const auto& [control, target] : layer.entanglers) {
            sim::apply_gate(state, sim::GateInstance::cnot(control, target));
        }
    }
    std::vector<double> out;
    out.reserve(vqc.measured_wires.size());
    for (unsigned w : vqc.measured_wires) {
        out.push_back(sim::expectation_z(state, w));
    }
    return out;
}

std::vector<ParameterDescriptor> named_parameters(const VqcStructure& vqc) {
    std::vector<ParameterDescriptor> descriptors;
    descriptors.reserve(vqc.parameter_count());
    std::size_t index = 0;
    for (unsigned l = 0; l < vqc.layers.size(); ++l) {
        for (unsigned w = 0; w < vqc.n_wires; ++w) {
            descriptors.push_back(
                ParameterDescriptor{index++, l, w, vqc.layers[l].rotations[w]});
        }
    }
    return descriptors;
}

std::uint64_t forward_call_count() { return g_forward_calls; }
void reset_forward_call_count() { g_forward_calls = 0; }

} // namespace taco::vqc
