#pragma once

#include <string>
#include <vector>

#include "smithlat/exactla/json.hpp"

namespace smithlat::cli {

struct Target {
  std::string name;
  std::string anchor;  // what the number certifies
  Json expected;
  Json computed;
  bool pass = false;
};

/// Machine-readable certificate of one command run.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  const std::string& command() const { return command_; }
  Json& inputs() { return inputs_; }
  Json& values() { return values_; }
  const std::vector<Target>& targets() const { return targets_; }

  /// Passes when computed == expected.
  void expect(const std::string& name, const std::string& anchor, const Json& expected, const Json& computed);
  /// Passes when ok; expected and computed are recorded as given.
  void check(const std::string& name, const std::string& anchor, bool ok, const Json& expected, const Json& computed);

  bool pass() const;
  void set_wall_time(double seconds) { wall_time_ = seconds; }
  double wall_time() const { return wall_time_; }

  Json to_json() const;
  std::string to_text() const;

 private:
  std::string command_;
  Json inputs_ = Json::object();
  Json values_ = Json::object();
  std::vector<Target> targets_;
  double wall_time_ = 0.0;
};

std::string dec(const Integer& n);
std::string dec(long long n);
Json dec_list(const std::vector<Integer>& values);

}  // namespace smithlat::cli
