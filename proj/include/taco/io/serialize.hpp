#pragma once

#include <json.hpp>

#include "taco/engine/estimator.hpp"
#include "taco/train/trainer.hpp"
#include "taco/vqc/structure.hpp"

namespace taco::io {

nlohmann::json to_json(const engine::EstimatorSettings& settings);
engine::EstimatorSettings estimator_settings_from_json(const nlohmann::json& j);

nlohmann::json to_json(const train::TrainingConfig& config);
train::TrainingConfig training_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const vqc::VqcStructure& vqc);
vqc::VqcStructure structure_from_json(const nlohmann::json& j);

train::TrainingConfig load_config(const std::string& path);

} // namespace taco::io
