#include "taco/io/analyze.hpp"

#include <fstream>
#include <json.hpp>
#include <stdexcept>

namespace taco::io {

using nlohmann::json;

std::vector<grad::GradientRecord> read_gradient_records(
    const std::string& events_path) {
    std::ifstream in(events_path);
    if (!in) {
        throw std::runtime_error("cannot open events file: " + events_path);
    }
    std::vector<grad::GradientRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw std::runtime_error(events_path + ":" + std::to_string(lineno) +
                                     ": " + e.what());
        }
        if (j.value("kind", "") != "gradient") {
            continue;
        }
        const unsigned epoch = j.at("epoch").get<unsigned>();
        const std::size_t param = j.at("param").get<std::size_t>();
        const double grad = j.at("grad").get<double>();
        if (records.empty() || records.back().epoch != epoch) {
            if (!records.empty() && epoch < records.back().epoch) {
                throw std::runtime_error(events_path + ":" +
                                         std::to_string(lineno) +
                                         ": epochs must be non-decreasing");
            }
            records.push_back(grad::GradientRecord{epoch, {}});
        }
        auto& grads = records.back().gradients;
        if (param != grads.size()) {
            throw std::runtime_error(events_path + ":" + std::to_string(lineno) +
                                     ": parameter indices must be contiguous");
        }
        grads.push_back(grad);
    }
    for (const auto& r : records) {
        if (r.gradients.size() != records.front().gradients.size()) {
            throw std::runtime_error(events_path +
                                     ": inconsistent parameter count across epochs");
        }
    }
    return records;
}

AnalyzeResult analyze_events(
    const std::string& events_path, const engine::EstimatorSettings& settings,
    std::span<const vqc::ParameterDescriptor> descriptors) {
    const auto records = read_gradient_records(events_path);
    AnalyzeResult result;
    if (records.empty()) {
        return result;
    }
    engine::BarrenPlateauEstimator estimator(settings,
                                             records.front().gradients.size());
    for (const auto& record : records) {
        engine::BarrenPlateauReport report = estimator.update(record, descriptors);
        for (const auto& msg : engine::generate_feedback(report, descriptors)) {
            result.feedback_lines.push_back(msg.text);
        }
        result.reports.push_back(std::move(report));
    }
    return result;
}

} // namespace taco::io
