#pragma once

#include <json.hpp>

#include "smithlat/exactla/fp_matrix.hpp"
#include "smithlat/exactla/int_matrix.hpp"
#include "smithlat/exactla/smith.hpp"

namespace smithlat {

using Json = nlohmann::ordered_json;

/// {"rows":r,"cols":c,"entries":[["1","-2"],...]}; entries are decimal strings.
/// Parsing also accepts plain JSON integers and a bare nested array.
Json to_json(const IntMatrix& a);
IntMatrix int_matrix_from_json(const Json& j);

/// {"p":p,"rows":r,"cols":c,"entries":[[0,1],...]}
Json to_json(const FpMatrix& a);
FpMatrix fp_matrix_from_json(const Json& j);

Json to_json(const SmithForm& s);

Json integer_list(const std::vector<Integer>& values);
Integer integer_from_json(const Json& j);

}  // namespace smithlat
