#include "tropsi/json_io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace tropsi {

using nlohmann::json;

std::string split_key(Split s) {
  std::ostringstream os;
  bool first = true;
  for (int mark : marks_of(s.side())) {
    if (!first) os << ',';
    os << mark;
    first = false;
  }
  return os.str();
}

json type_to_json(const CombinatorialType& t) {
  json splits = json::array();
  for (const Split& s : t.splits()) splits.push_back(marks_of(s.side()));
  return json{{"n", t.n()}, {"splits", std::move(splits)}};
}

CombinatorialType type_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Split> splits;
  for (const json& side : j.at("splits")) {
    MarkSet mask = 0;
    for (const json& mark : side) mask |= mark_bit(mark.get<int>());
    splits.push_back(Split::from_side(mask, n));
  }
  return CombinatorialType(n, std::move(splits));
}

json cycle_to_json(const Cycle& z) {
  json cones = json::array();
  for (const auto& [t, weight] : z.entries) {
    json splits = json::array();
    for (const Split& s : t.splits()) splits.push_back(marks_of(s.side()));
    if (weight > std::numeric_limits<std::int64_t>::max() ||
        weight < std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("cycle weight exceeds the JSON integer range");
    }
    cones.push_back(json{{"splits", std::move(splits)},
                         {"weight", static_cast<std::int64_t>(weight)}});
  }
  return json{{"n", z.w.n()},
              {"w", json{{"heavy", z.w.heavy_count()}, {"light", z.w.m()}}},
              {"dim", z.dim},
              {"cones", std::move(cones)}};
}

Cycle cycle_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const WeightVector w(n, j.at("w").at("light").get<int>());
  Cycle z(w, j.at("dim").get<int>());
  for (const json& cone : j.at("cones")) {
    std::vector<Split> splits;
    for (const json& side : cone.at("splits")) {
      MarkSet mask = 0;
      for (const json& mark : side) mask |= mark_bit(mark.get<int>());
      splits.push_back(Split::from_side(mask, n));
    }
    z.add(CombinatorialType(n, std::move(splits)), BigInt(cone.at("weight").get<std::int64_t>()));
  }
  return z;
}

json function_to_json(const RationalFunctionOnFan& f) {
  json rays = json::object();
  for (const auto& [s, value] : f.ray_values) {
    std::ostringstream os;
    os << value;
    rays[split_key(s)] = os.str();
  }
  return json{{"rays", std::move(rays)}};
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const Rat& c : v.coords()) {
    std::ostringstream os;
    os << c;
    out.push_back(os.str());
  }
  return out;
}

}  // namespace tropsi
