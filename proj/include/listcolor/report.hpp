#pragma once

#include <string>

#include <json.hpp>

#include "listcolor/discharge.hpp"
#include "listcolor/graph.hpp"
#include "listcolor/nullstellensatz.hpp"
#include "listcolor/oracle.hpp"

namespace lc {

inline constexpr std::size_t kWitnessPrintLimit = 10;

// Indices of the witnesses shown when the list is capped: ten evenly spaced
// picks starting at the first, or all of them when there are at most ten.
std::vector<std::size_t> witness_sample(std::size_t count, bool all);

std::string format_reduce_text(const Configuration& c, const ReducibilityVerdict& v, bool all);
nlohmann::json reduce_json(const Configuration& c, const ReducibilityVerdict& v, bool all);

std::string format_oracle_text(const Configuration& c, const SizeVector& sizes,
                               const std::string& mode, const ChoosabilityVerdict& v);
nlohmann::json oracle_json(const Configuration& c, const SizeVector& sizes,
                           const std::string& mode, const ChoosabilityVerdict& v);

std::string format_hypothesis_text(const HypothesisVerdict& v);
nlohmann::json hypothesis_json(const HypothesisVerdict& v);

// Tables for stages 0..`through`; negative elements are those of that stage.
std::string format_discharge_text(const DischargeReport& r, int through = 2);
nlohmann::json discharge_json(const DischargeReport& r, int through = 2);

}  // namespace lc
