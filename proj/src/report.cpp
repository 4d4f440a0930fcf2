#include "omega/report.hpp"

namespace omega {

void PropertyReport::merge(const PropertyReport& other) {
  trials += other.trials;
  violation_count += other.violation_count;
  for (const auto& w : other.witnesses)
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
  for (const auto& [k, v] : other.counters) counters[k] += v;
}

nlohmann::json to_json(const PropertyReport& report) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["name"] = report.name;
  j["trials"] = report.trials;
  j["violations"] = report.violation_count;
  j["ok"] = report.ok();
  j["witnesses"] = report.witnesses;
  j["counters"] = report.counters;
  j["settings"] = report.settings;
  return j;
}

}  // namespace omega
