#include "regsynth/report.hpp"

#include <cstdio>

namespace regsynth {

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed)
{
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

void RunReport::add_input(std::string_view name, std::string_view content)
{
  digest = fnv1a(name, digest);
  digest = fnv1a(std::string_view("\0", 1), digest);
  digest = fnv1a(content, digest);
}

void RunReport::set(const std::string& key, const std::string& value)
{
  for (auto& [k, v] : fields)
    if (k == key) {
      v = value;
      return;
    }
  fields.emplace_back(key, value);
}

std::string RunReport::to_text(bool with_timings) const
{
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest));
  std::string out = "command: " + command + "\ninputs_digest: fnv1a64:" + hex + "\n";
  for (const auto& [k, v] : fields)
    out += k + ": " + v + "\n";
  if (with_timings)
    for (const auto& [stage, ms] : timings_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", ms);
      out += "time_ms." + stage + ": " + buf + "\n";
    }
  return out;
}

}  // namespace regsynth
