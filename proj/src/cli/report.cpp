#include "smithlat/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace smithlat::cli {

void Report::expect(const std::string& name, const std::string& anchor, const Json& expected, const Json& computed) {
  targets_.push_back({name, anchor, expected, computed, expected == computed});
}

void Report::check(const std::string& name, const std::string& anchor, bool ok, const Json& expected,
                   const Json& computed) {
  targets_.push_back({name, anchor, expected, computed, ok});
}

bool Report::pass() const {
  return std::all_of(targets_.begin(), targets_.end(), [](const Target& t) { return t.pass; });
}

Json Report::to_json() const {
  Json targets = Json::array();
  for (const auto& t : targets_)
    targets.push_back(
        {{"name", t.name}, {"anchor", t.anchor}, {"expected", t.expected}, {"computed", t.computed}, {"pass", t.pass}});
  Json j;
  j["command"] = command_;
  j["inputs"] = inputs_;
  j["values"] = values_;
  j["targets"] = targets;
  j["pass"] = pass();
  j["wall_time"] = wall_time_;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command_ << ": " << (pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& [key, value] : values_.items()) {
    std::string shown = value.is_string() ? value.get<std::string>() : value.dump();
    if (shown.size() > 100) shown = shown.substr(0, 97) + "...";
    os << "  " << key << " = " << shown << "\n";
  }
  for (const auto& t : targets_) {
    os << "  [" << (t.pass ? "pass" : "FAIL") << "] " << t.name << " (" << t.anchor << ")";
    if (!t.pass) os << ": expected " << t.expected.dump() << ", computed " << t.computed.dump();
    os << "\n";
  }
  os << "  wall time " << wall_time_ << " s\n";
  return os.str();
}

std::string dec(const Integer& n) { return n.get_str(); }
std::string dec(long long n) { return std::to_string(n); }

Json dec_list(const std::vector<Integer>& values) {
  Json j = Json::array();
  for (const auto& v : values) j.push_back(v.get_str());
  return j;
}

}  // namespace smithlat::cli
