// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sirf/stat/ais31.hpp"
#include "sirf/stat/estimators.hpp"
#include "sirf/stat/iid.hpp"
#include "sirf/stat/pearson.hpp"
#include "sirf/trng/config.hpp"
#include "sirf/trng/experiments.hpp"
#include "sirf/trng/pipeline.hpp"

namespace sirf::cli {

using nlohmann::json;

json to_json(const trng::RunConfig& c);
json to_json(const trng::RunReport& r);
json to_json(const stat::TestVerdict& v);
json to_json(const stat::Ais31Result& r);
json to_json(const stat::EstimatorSuite& e);
json to_json(const stat::IidReport& r);
json to_json(const stat::PccReport& r);

/// Pretty-printed JSON to a file; throws IoError.
void write_json(const std::string& path, const json& j);

/// Text file writer that throws IoError on failure.
void write_text(const std::string& path, const std::string& text);

/// bin_left,bin_right,count over [-1, 1].
std::string pcc_histogram_csv(const stat::PccReport& r);
std::string rc_tcc_csv(const trng::RcTccExperiment& e);
std::string env_csv(const std::vector<trng::EnvPoint>& pts);

}  // namespace sirf::cli
