#pragma once

#include <string>
#include <vector>

#include "taco/engine/estimator.hpp"
#include "taco/engine/feedback.hpp"

namespace taco::io {

struct AnalyzeResult {
    std::vector<engine::BarrenPlateauReport> reports;
    std::vector<std::string> feedback_lines;
};

// Offline replay: feeds the gradient lines of an events file through a fresh
// estimator. With the settings and descriptors of the original run this
// reproduces the live flags and feedback exactly.
AnalyzeResult analyze_events(
    const std::string& events_path, const engine::EstimatorSettings& settings,
    std::span<const vqc::ParameterDescriptor> descriptors);

// Gradient streams reconstructed from an events file, one record per epoch.
std::vector<grad::GradientRecord> read_gradient_records(
    const std::string& events_path);

} // namespace taco::io
