#pragma once

#include <chrono>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ybx::cli {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string witness;
  bool representation_level_only = false;
  std::optional<double> millis;
};

std::string sha256_hex(const std::string& bytes);

// Result of one CLI invocation: echo of the command, per-check outcomes, and
// hashes of every input read.
class Report {
 public:
  static constexpr const char* kSchema = "ybx-report/1";

  explicit Report(std::vector<std::string> command) : command_(std::move(command)) {}

  void add_input(const std::string& label, const std::string& bytes);
  void add_check(CheckResult c) { checks_.push_back(std::move(c)); }
  void add_info(const std::string& key, nlohmann::json value) { info_[key] = std::move(value); }
  void set_output(std::string text) { output_ = std::move(text); }
  void set_error(std::string kind, std::string message);

  bool all_pass() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::string& output() const { return output_; }

  nlohmann::json to_json(bool timings) const;
  void print_human(std::ostream& out, bool timings) const;

 private:
  std::vector<std::string> command_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<CheckResult> checks_;
  std::map<std::string, nlohmann::json> info_;
  std::string output_;
  std::optional<std::pair<std::string, std::string>> error_;
};

}  // namespace ybx::cli
