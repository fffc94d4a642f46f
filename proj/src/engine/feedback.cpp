#include "taco/engine/feedback.hpp"

#include <stdexcept>

#include "taco/util/format.hpp"

namespace taco::engine {

namespace {

std::string render(unsigned epoch, const std::string& param,
                   const std::string& type, double value) {
    return "[BP] epoch=" + std::to_string(epoch) + " param=" + param +
           " type=" + type + " value=" + fmt::sci6(value);
}

} // namespace

std::vector<FeedbackMessage> generate_feedback(
    const BarrenPlateauReport& report,
    std::span<const vqc::ParameterDescriptor> descriptors) {
    std::vector<FeedbackMessage> messages;
    if (!report.warmed_up) {
        return messages;
    }
    if (report.flags.size() != descriptors.size()) {
        throw std::invalid_argument("generate_feedback: descriptor mismatch");
    }
    for (std::size_t k = 0; k < report.flags.size(); ++k) {
        if (!report.flags[k]) {
            continue;
        }
        const double v = report.per_param_variance[k];
        const std::string type(sim::to_string(descriptors[k].gate_kind));
        messages.push_back(FeedbackMessage{
            report.epoch, k, descriptors[k].gate_kind, v,
            render(report.epoch, std::to_string(k), type, v)});
    }
    if (report.all_flagged && !report.flags.empty()) {
        // The ALL message reports the mean windowed variance across
        // parameters and carries the system-size hint.
        double mean = 0.0;
        for (double v : report.per_param_variance) {
            mean += v;
        }
        mean /= static_cast<double>(report.per_param_variance.size());
        messages.push_back(FeedbackMessage{
            report.epoch, std::nullopt, std::nullopt, mean,
            render(report.epoch, "ALL", "ALL", mean) + " hint=reduce_layers"});
    }
    return messages;
}

} // namespace taco::engine
