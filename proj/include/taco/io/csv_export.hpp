#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "taco/vqc/structure.hpp"

namespace taco::io {

// Exports plot-ready CSVs from an events file into out_dir:
//   metrics.csv       epoch,train_loss,test_accuracy
//   gate_variance.csv epoch,RX,RY,RZ (absent kinds omitted)
//   flags.csv         epoch,param,type,value
// Reals are formatted as lowercase scientific with 6 significant digits.
// Descriptors supply the parameter -> gate kind mapping for flags.csv.
void export_csv(const std::string& events_path,
                const std::filesystem::path& out_dir,
                std::span<const vqc::ParameterDescriptor> descriptors);

} // namespace taco::io
