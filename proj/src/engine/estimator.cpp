#include "taco/engine/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace taco::engine {

namespace {

// Population (divide-by-N) variance; the fixed convention in this codebase.
double population_variance(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) {
        return 0.0;
    }
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : values) {
        const double d = v - mean;
        ss += d * d;
    }
    return ss / static_cast<double>(n);
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) {
        return values[n / 2];
    }
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

} // namespace

StructureReport extract_structure(const vqc::VqcStructure& vqc) {
    StructureReport report;
    report.descriptors = vqc::named_parameters(vqc);
    report.parameter_count = report.descriptors.size();
    for (const auto& d : report.descriptors) {
        ++report.gate_kind_counts[d.gate_kind];
    }
    for (const auto& layer : vqc.layers) {
        report.entangler_count += layer.entanglers.size();
    }
    return report;
}

std::map<sim::GateKind, double> gate_type_variance(
    std::span<const double> gradient,
    std::span<const vqc::ParameterDescriptor> descriptors) {
    if (gradient.size() != descriptors.size()) {
        throw std::invalid_argument(
            "gate_type_variance: gradient/descriptor length mismatch");
    }
    std::map<sim::GateKind, std::vector<double>> grouped;
    for (std::size_t k = 0; k < gradient.size(); ++k) {
        grouped[descriptors[k].gate_kind].push_back(gradient[k]);
    }
    std::map<sim::GateKind, double> out;
    for (const auto& [kind, values] : grouped) {
        out[kind] = population_variance(values);
    }
    return out;
}

BarrenPlateauEstimator::BarrenPlateauEstimator(const EstimatorSettings& settings,
                                               std::size_t n_params)
    : settings_(settings), n_params_(n_params), windows_(n_params),
      baseline_(n_params, 0.0), recent_variances_(n_params) {
    if (settings.window == 0) {
        throw std::invalid_argument("estimator window must be >= 1");
    }
    if (settings.tau_abs <= 0 || settings.tau_rel <= 0 ||
        settings.drop_ratio <= 0) {
        throw std::invalid_argument("estimator thresholds must be positive");
    }
}

BarrenPlateauReport BarrenPlateauEstimator::update(
    const grad::GradientRecord& record,
    std::span<const vqc::ParameterDescriptor> descriptors) {
    if (record.gradients.size() != n_params_ ||
        descriptors.size() != n_params_) {
        throw std::invalid_argument("estimator: gradient length mismatch");
    }
    if (last_epoch_ && record.epoch <= *last_epoch_) {
        throw std::invalid_argument("estimator: epochs must be strictly increasing");
    }
    last_epoch_ = record.epoch;

    const unsigned w = settings_.window;
    for (std::size_t k = 0; k < n_params_; ++k) {
        auto& buf = windows_[k];
        buf.push_back(record.gradients[k]);
        if (buf.size() > w) {
            buf.pop_front();
        }
    }

    BarrenPlateauReport report;
    report.epoch = record.epoch;
    report.per_gate_type_variance =
        gate_type_variance(record.gradients, descriptors);
    report.flags.assign(n_params_, false);

    const bool full = windows_.empty() || windows_[0].size() == w;
    if (!full || n_params_ == 0) {
        report.warmed_up = full && n_params_ == 0;
        report.per_param_variance.assign(
            n_params_, std::numeric_limits<double>::quiet_NaN());
        report.all_flagged = false;
        return report;
    }

    report.warmed_up = true;
    report.per_param_variance.resize(n_params_);
    for (std::size_t k = 0; k < n_params_; ++k) {
        const std::vector<double> window(windows_[k].begin(), windows_[k].end());
        report.per_param_variance[k] = population_variance(window);
    }
    if (!baseline_set_) {
        baseline_ = report.per_param_variance;
        baseline_set_ = true;
    }

    bool all = true;
    for (std::size_t k = 0; k < n_params_; ++k) {
        const double v = report.per_param_variance[k];
        bool flagged = v < settings_.tau_abs;
        if (!flagged && baseline_[k] > 0.0 &&
            v / baseline_[k] < settings_.tau_rel) {
            flagged = true;
        }
        if (!flagged && !recent_variances_[k].empty()) {
            const double med = median({recent_variances_[k].begin(),
                                       recent_variances_[k].end()});
            flagged = v < settings_.drop_ratio * med;
        }
        report.flags[k] = flagged;
        all = all && flagged;
    }
    report.all_flagged = all;

    for (std::size_t k = 0; k < n_params_; ++k) {
        auto& recent = recent_variances_[k];
        recent.push_back(report.per_param_variance[k]);
        if (recent.size() > 5) {
            recent.pop_front();
        }
    }
    return report;
}

} // namespace taco::engine
