#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace taco::data {

// One labeled sample: feature angles plus a +/-1 class label.
struct Sample {
    std::vector<double> features;
    int label; // -1 or +1
};

struct Dataset {
    std::vector<Sample> samples;
};

// Features uniform in [0, pi]^n; label +1 iff the feature sum is below the
// n*pi/2 midpoint. Per-sample derived seeds keep rows independent.
Dataset make_synthetic_dataset(unsigned n_wires, std::size_t n_samples,
                               std::uint64_t seed);

// CSV rows: n feature columns then a +/-1 label column, no header. Any finite
// feature value is accepted as an angle. Throws std::runtime_error naming the
// offending line on malformed rows, non +/-1 labels, or ragged widths.
Dataset load_dataset_csv(const std::string& path);

// Features written with round-trip precision.
void save_dataset_csv(const Dataset& dataset, const std::string& path);

} // namespace taco::data
