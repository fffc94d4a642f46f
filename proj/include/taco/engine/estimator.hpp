#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "taco/grad/gradient.hpp"
#include "taco/vqc/structure.hpp"

namespace taco::engine {

// "Sudden drop" detector settings. A parameter is flagged once its windowed
// gradient variance v satisfies any of:
//   v < tau_abs
//   baseline > 0 and v / baseline < tau_rel     (baseline = first full window)
//   v < drop_ratio * median of its previous min(5, available) window variances
struct EstimatorSettings {
    unsigned window = 10;      // epochs per variance window
    double tau_abs = 1e-9;     // absolute variance floor
    double tau_rel = 1e-4;     // relative-to-baseline ratio
    double drop_ratio = 1e-2;  // ratio against recent window-variance median

    bool operator==(const EstimatorSettings&) const = default;
};

// Per-epoch estimator output.
struct BarrenPlateauReport {
    unsigned epoch = 0;
    bool warmed_up = false;                       // window filled yet?
    std::vector<double> per_param_variance;       // NaN until warmed up
    std::vector<bool> flags;                      // all false until warmed up
    std::map<sim::GateKind, double> per_gate_type_variance;
    bool all_flagged = false;
};

// Structure extractor summary.
struct StructureReport {
    std::size_t parameter_count = 0;
    std::map<sim::GateKind, std::size_t> gate_kind_counts;
    std::vector<vqc::ParameterDescriptor> descriptors;
    std::size_t entangler_count = 0;
};

StructureReport extract_structure(const vqc::VqcStructure& vqc);

// Population variance of the current gradient values grouped by gate kind;
// one entry per kind present among the descriptors.
std::map<sim::GateKind, double> gate_type_variance(
    std::span<const double> gradient,
    std::span<const vqc::ParameterDescriptor> descriptors);

// Tracks a ring buffer of the last W gradient values per parameter and flags
// variance collapses. Single-writer; updates must arrive in epoch order.
class BarrenPlateauEstimator {
  public:
    BarrenPlateauEstimator(const EstimatorSettings& settings,
                           std::size_t n_params);

    BarrenPlateauReport update(
        const grad::GradientRecord& record,
        std::span<const vqc::ParameterDescriptor> descriptors);

    const EstimatorSettings& settings() const { return settings_; }

  private:
    EstimatorSettings settings_;
    std::size_t n_params_;
    std::vector<std::deque<double>> windows_;
    std::vector<double> baseline_;
    bool baseline_set_ = false;
    // Window variances from previous epochs (last 5 kept), per parameter.
    std::vector<std::deque<double>> recent_variances_;
    std::optional<unsigned> last_epoch_;
};

} // namespace taco::engine
