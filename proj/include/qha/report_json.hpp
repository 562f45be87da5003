#pragma once

#include <json.hpp>

#include "qha/verify.hpp"

namespace qha {

/// JSON spelling of an exponent: a number, or the string "inf" (JSON has
/// no infinity literal).
nlohmann::json exponent_to_json(double p);
double exponent_from_string(const std::string& s);

nlohmann::json to_json(const Region& region);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const WernerYoungReport& report);
nlohmann::json to_json(const BoundChain& chain);
nlohmann::json to_json(const ConstantEstimate& estimate);

}  // namespace qha
