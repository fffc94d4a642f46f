#pragma once

#include <filesystem>
#include <vector>

#include "taco/train/trainer.hpp"

namespace taco::io {

inline constexpr const char* kToolVersion = "taco 0.1.0";

struct RunOutput {
    std::filesystem::path manifest_path;
    std::filesystem::path events_path;
    std::filesystem::path feedback_path;
    std::vector<train::EpochRecord> records;
};

// Runs training with the live TACO sink attached: writes manifest.json,
// events.jsonl (flushed per epoch) and feedback.txt into out_dir. On a
// failed run the manifest is rewritten with a partial-file notice before the
// error propagates.
RunOutput run_training(const train::TrainingConfig& config,
                       const std::filesystem::path& out_dir);

// Manifest accessors for offline analysis and reruns.
train::TrainingConfig config_from_manifest(const std::filesystem::path& path);
engine::EstimatorSettings settings_from_manifest(
    const std::filesystem::path& path);
std::vector<vqc::ParameterDescriptor> descriptors_from_manifest(
    const std::filesystem::path& path);

} // namespace taco::io
