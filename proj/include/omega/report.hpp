#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace omega {

inline constexpr const char* kVersion = "1.0.0";

enum class ExecPolicy { serial, parallel };

// Outcome of a randomized property check. Violations carry a printable
// witness; at most `kMaxWitnesses` are kept, `violation_count` counts all.
struct PropertyReport {
  static constexpr std::size_t kMaxWitnesses = 20;

  std::string name;
  std::size_t trials = 0;
  std::size_t violation_count = 0;
  std::vector<std::string> witnesses;
  std::map<std::string, std::uint64_t> counters;
  std::map<std::string, std::string> settings;

  bool ok() const { return violation_count == 0; }
  void violation(std::string witness) {
    ++violation_count;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
  }
  void merge(const PropertyReport& other);
};

nlohmann::json to_json(const PropertyReport& report);

}  // namespace omega
