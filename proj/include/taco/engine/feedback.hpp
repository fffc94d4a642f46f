#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taco/engine/estimator.hpp"

namespace taco::engine {

// One rendered feedback line. parameter_index / parameter_type are empty for
// the ALL message emitted when every parameter is flagged.
struct FeedbackMessage {
    unsigned epoch;
    std::optional<std::size_t> parameter_index;
    std::optional<sim::GateKind> parameter_type;
    double bp_value;
    std::string text;
};

// One message per flagged parameter, plus an ALL message carrying the
// restructuring hint when every parameter is flagged. Line format:
//   [BP] epoch=<int> param=<int|ALL> type=<RX|RY|RZ|ALL> value=<sci6>
// and the ALL line appends " hint=reduce_layers".
std::vector<FeedbackMessage> generate_feedback(
    const BarrenPlateauReport& report,
    std::span<const vqc::ParameterDescriptor> descriptors);

} // namespace taco::engine
