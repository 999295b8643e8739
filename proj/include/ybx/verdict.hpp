#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ybx {

// Outcome of an exhaustive check. A failing verdict carries a human-readable
// witness locating the first violation found.
struct Verdict {
  bool ok = true;
  std::string witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const { return ok; }
};

struct NamedVerdict {
  std::string name;
  Verdict verdict;
};

inline bool all_pass(const std::vector<NamedVerdict>& checks) {
  for (const auto& c : checks)
    if (!c.verdict.ok) return false;
  return true;
}

}  // namespace ybx
