#pragma once

#include <string>

#include <json.hpp>

#include "tropsi/divisors.hpp"
#include "tropsi/fan.hpp"
#include "tropsi/trees.hpp"

namespace tropsi {

nlohmann::json type_to_json(const CombinatorialType& t);
CombinatorialType type_from_json(const nlohmann::json& j);

nlohmann::json cycle_to_json(const Cycle& z);
Cycle cycle_from_json(const nlohmann::json& j);

nlohmann::json function_to_json(const RationalFunctionOnFan& f);

nlohmann::json vector_to_json(const Vector& v);

std::string split_key(Split s);

}  // namespace tropsi
