#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace klcells {

/// Outcome of an exhaustive check.  Success iff no violations.
struct Report {
  std::string suite;
  int n = 0;
  std::size_t cases = 0;
  std::vector<std::string> violations{};
  /// Extra named results ("cells" -> "26").
  std::vector<std::pair<std::string, std::string>> facts{};
  double seconds = 0.0;

  bool ok() const { return violations.empty(); }
  void fail(std::string message) { violations.push_back(std::move(message)); }
  void note(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
};

}  // namespace klcells
