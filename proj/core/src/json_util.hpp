#pragma once

#include <json.hpp>

#include "udt/interval.hpp"
#include "udt/rational.hpp"

namespace udt::detail {

inline nlohmann::json rat_json(const Rational& r) { return to_string(r); }

inline Rational rat_from(const nlohmann::json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

inline nlohmann::json interval_json(const Interval& iv) {
  return nlohmann::json{{"lo", rat_json(iv.lo)},
                        {"hi", rat_json(iv.hi)},
                        {"lo_open", iv.lo_open},
                        {"hi_open", iv.hi_open}};
}

inline Interval interval_from(const nlohmann::json& j) {
  return Interval(rat_from(j.at("lo")), rat_from(j.at("hi")),
                  j.value("lo_open", false), j.value("hi_open", false));
}

inline nlohmann::json interval_set_json(const IntervalSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : s.parts()) arr.push_back(interval_json(p));
  return arr;
}

inline IntervalSet interval_set_from(const nlohmann::json& j) {
  std::vector<Interval> raw;
  for (const auto& e : j) raw.push_back(interval_from(e));
  return IntervalSet::normalize(std::move(raw));
}

}  // namespace udt::detail
