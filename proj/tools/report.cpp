#include "report.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ybx::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "skipped";
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

void Report::add_input(const std::string& label, const std::string& bytes) {
  inputs_.emplace_back(label, sha256_hex(bytes));
}

void Report::set_error(std::string kind, std::string message) {
  error_ = {std::move(kind), std::move(message)};
}

bool Report::all_pass() const {
  if (error_) return false;
  for (const auto& c : checks_)
    if (c.status == Status::fail) return false;
  return true;
}

nlohmann::json Report::to_json(bool timings) const {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["command"] = command_;
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& [label, hash] : inputs_) inputs.push_back({{"path", label}, {"sha256", hash}});
  j["inputs"] = std::move(inputs);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json e = {{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (c.representation_level_only) e["representation_level_only"] = true;
    if (timings && c.millis) e["millis"] = *c.millis;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  if (!info_.empty()) j["info"] = info_;
  if (!output_.empty()) j["output"] = output_;
  if (error_) j["error"] = {{"kind", error_->first}, {"message", error_->second}};
  j["ok"] = all_pass();
  return j;
}

void Report::print_human(std::ostream& out, bool timings) const {
  out << output_;
  for (const auto& [key, value] : info_)
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  for (const auto& c : checks_) {
    switch (c.status) {
      case Status::pass: out << "PASS "; break;
      case Status::fail: out << "FAIL "; break;
      case Status::skipped: out << "SKIP "; break;
    }
    out << c.name;
    if (c.representation_level_only) out << " [representation level]";
    if (timings && c.millis) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.1f ms)", *c.millis);
      out << buf;
    }
    if (!c.witness.empty()) out << ": " << c.witness;
    out << '\n';
  }
}

}  // namespace ybx::cli
