#include "taco/train/dataset.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "taco/util/format.hpp"
#include "taco/util/rng.hpp"

namespace taco::data {

Dataset make_synthetic_dataset(unsigned n_wires, std::size_t n_samples,
                               std::uint64_t seed) {
    Dataset ds;
    ds.samples.reserve(n_samples);
    const double threshold = n_wires * std::numbers::pi / 2.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        rng::SplitMix64 gen(rng::derive_key(seed, i));
        Sample s;
        s.features.reserve(n_wires);
        double sum = 0.0;
        for (unsigned w = 0; w < n_wires; ++w) {
            const double f = gen.uniform(0.0, std::numbers::pi);
            s.features.push_back(f);
            sum += f;
        }
        s.label = sum < threshold ? +1 : -1;
        ds.samples.push_back(std::move(s));
    }
    return ds;
}

namespace {

[[noreturn]] void parse_fail(const std::string& path, std::size_t line,
                             const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

} // namespace

Dataset load_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open dataset file: " + path);
    }
    Dataset ds;
    std::string line;
    std::size_t lineno = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() < 2) {
            parse_fail(path, lineno, "expected at least one feature and a label");
        }
        if (width == 0) {
            width = fields.size();
        } else if (fields.size() != width) {
            parse_fail(path, lineno, "ragged row width");
        }
        Sample s;
        s.features.reserve(fields.size() - 1);
        for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
            std::size_t pos = 0;
            double v = 0.0;
            try {
                v = std::stod(fields[i], &pos);
            } catch (const std::exception&) {
                parse_fail(path, lineno, "malformed feature value");
            }
            if (pos != fields[i].size() || !std::isfinite(v)) {
                parse_fail(path, lineno, "malformed feature value");
            }
            s.features.push_back(v);
        }
        const std::string& lab = fields.back();
        if (lab == "1" || lab == "+1") {
            s.label = +1;
        } else if (lab == "-1") {
            s.label = -1;
        } else {
            parse_fail(path, lineno, "label must be +1 or -1");
        }
        ds.samples.push_back(std::move(s));
    }
    return ds;
}

void save_dataset_csv(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open dataset file for write: " + path);
    }
    for (const Sample& s : dataset.samples) {
        for (double f : s.features) {
            out << fmt::roundtrip(f) << ',';
        }
        out << (s.label > 0 ? "+1" : "-1") << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

} // namespace taco::data
