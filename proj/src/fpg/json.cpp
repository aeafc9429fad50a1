#include "smithlat/fpg/json.hpp"

#include <string>

namespace smithlat::fpg {

Json to_json(const JordanType& type) {
  Json counts = Json::object();
  for (const auto& [q, n] : type.counts()) counts[std::to_string(q)] = n;
  return Json{{"p", type.p()}, {"counts", std::move(counts)}};
}

JordanType jordan_type_from_json(const Json& j) {
  JordanType type(j.at("p").get<Prime>());
  for (const auto& [key, value] : j.at("counts").items()) type.set(std::stoi(key), value.get<Count>());
  return type;
}

}  // namespace smithlat::fpg
