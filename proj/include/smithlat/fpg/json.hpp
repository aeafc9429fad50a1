#pragma once

#include "smithlat/exactla/json.hpp"
#include "smithlat/fpg/jordan.hpp"

namespace smithlat::fpg {

/// {"p":p,"counts":{"1":l1,"4":l4,...}}; zero multiplicities are omitted.
Json to_json(const JordanType& type);
JordanType jordan_type_from_json(const Json& j);

}  // namespace smithlat::fpg
