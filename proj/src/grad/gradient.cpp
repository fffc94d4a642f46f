#include "taco/grad/gradient.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace taco::grad {

namespace {

constexpr double kShift = std::numbers::pi / 2.0;

std::size_t head_index(const vqc::VqcStructure& vqc) {
    const auto& mw = vqc.measured_wires;
    const auto it = std::find(mw.begin(), mw.end(), 0u);
    if (it == mw.end()) {
        throw std::invalid_argument("wire 0 is not measured");
    }
    return static_cast<std::size_t>(it - mw.begin());
}

void check_batch(std::span<const data::Sample> batch) {
    if (batch.empty()) {
        throw std::invalid_argument("batch must be non-empty");
    }
    for (const data::Sample& s : batch) {
        if (s.label != 1 && s.label != -1) {
            throw std::invalid_argument("labels must be +1 or -1");
        }
    }
}

} // namespace

double predict(const vqc::VqcStructure& vqc, std::span<const double> params,
               std::span<const double> features) {
    return forward(vqc, params, features)[head_index(vqc)];
}

double loss(const vqc::VqcStructure& vqc, std::span<const double> params,
            std::span<const data::Sample> batch) {
    check_batch(batch);
    double sum = 0.0;
    for (const data::Sample& s : batch) {
        const double r = predict(vqc, params, s.features) - s.label;
        sum += r * r;
    }
    return sum / static_cast<double>(batch.size());
}

std::vector<double> parameter_shift_gradient(const vqc::VqcStructure& vqc,
                                             std::span<const double> params,
                                             std::span<const data::Sample> batch) {
    const std::size_t p_count = vqc.parameter_count();
    if (params.size() != p_count) {
        throw std::invalid_argument("params length != parameter count");
    }
    check_batch(batch);
    std::vector<double> gradient(p_count, 0.0);
    std::vector<double> shifted(params.begin(), params.end());
    // Fixed reduction order: samples outer, parameters inner.
    for (const data::Sample& s : batch) {
        const double residual = predict(vqc, params, s.features) - s.label;
        for (std::size_t k = 0; k < p_count; ++k) {
            shifted[k] = params[k] + kShift;
            const double plus = predict(vqc, shifted, s.features);
            shifted[k] = params[k] - kShift;
            const double minus = predict(vqc, shifted, s.features);
            shifted[k] = params[k];
            gradient[k] += 2.0 * residual * (plus - minus) / 2.0;
        }
    }
    const double inv = 1.0 / static_cast<double>(batch.size());
    for (double& g : gradient) {
        g *= inv;
    }
    return gradient;
}

std::vector<double> finite_difference_gradient(
    const vqc::VqcStructure& vqc, std::span<const double> params,
    std::span<const data::Sample> batch, double h) {
    if (h <= 0.0) {
        throw std::invalid_argument("finite difference step must be > 0");
    }
    const std::size_t p_count = vqc.parameter_count();
    std::vector<double> gradient(p_count, 0.0);
    std::vector<double> shifted(params.begin(), params.end());
    for (std::size_t k = 0; k < p_count; ++k) {
        shifted[k] = params[k] + h;
        const double plus = loss(vqc, shifted, batch);
        shifted[k] = params[k] - h;
        const double minus = loss(vqc, shifted, batch);
        shifted[k] = params[k];
        gradient[k] = (plus - minus) / (2.0 * h);
    }
    return gradient;
}

double expectation_gradient(const vqc::VqcStructure& vqc,
                            std::span<const double> params,
                            std::span<const double> features,
                            std::size_t param_index) {
    if (param_index >= vqc.parameter_count()) {
        throw std::invalid_argument("param_index out of range");
    }
    std::vector<double> shifted(params.begin(), params.end());
    shifted[param_index] = params[param_index] + kShift;
    const double plus = predict(vqc, shifted, features);
    shifted[param_index] = params[param_index] - kShift;
    const double minus = predict(vqc, shifted, features);
    return (plus - minus) / 2.0;
}

} // namespace taco::grad
