#include "smithlat/exactla/json.hpp"

#include <stdexcept>
#include <string>

namespace smithlat {

Integer integer_from_json(const Json& j) {
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw std::invalid_argument("not a decimal integer: " + j.get<std::string>());
    return v;
  }
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  throw std::invalid_argument("expected an integer or decimal string, got " + j.dump());
}

Json integer_list(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

Json to_json(const IntMatrix& a) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) entries.push_back(integer_list(a.row(i)));
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

IntMatrix int_matrix_from_json(const Json& j) {
  // a bare nested array is accepted as the entries
  const auto& entries = j.is_array() ? j : j.at("entries");
  const bool sized = j.is_object();
  const std::size_t rows = sized && j.contains("rows") ? j.at("rows").get<std::size_t>() : entries.size();
  const std::size_t cols = sized && j.contains("cols") ? j.at("cols").get<std::size_t>()
                                              : (entries.empty() ? 0 : entries.at(0).size());
  if (entries.size() != rows) throw std::invalid_argument("IntMatrix JSON: row count mismatch");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) throw std::invalid_argument("IntMatrix JSON: column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from_json(entries[i][c]);
  }
  return m;
}

Json to_json(const FpMatrix& a) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(i, c));
    entries.push_back(std::move(row));
  }
  return Json{{"p", a.p()}, {"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

FpMatrix fp_matrix_from_json(const Json& j) {
  const auto p = j.at("p").get<FpMatrix::Residue>();
  const IntMatrix lifted = int_matrix_from_json(j);
  return FpMatrix::reduce(p, lifted);
}

Json to_json(const SmithForm& s) {
  return Json{{"invariant_factors", integer_list(s.invariant_factors)},
              {"left_transform", to_json(s.left)},
              {"right_transform", to_json(s.right)}};
}

}  // namespace smithlat
