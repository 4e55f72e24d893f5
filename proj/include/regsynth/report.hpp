#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace regsynth {

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ull);

/// Summary of a CLI run, written as `key: value` lines in insertion order.
struct RunReport {
  std::string command;
  std::uint64_t digest = 0xcbf29ce484222325ull;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::pair<std::string, double>> timings_ms;

  /// Folds an input file into the digest.
  void add_input(std::string_view name, std::string_view content);
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, std::uint64_t value) { set(key, std::to_string(value)); }
  void time(const std::string& stage, double ms) { timings_ms.emplace_back(stage, ms); }

  /// Timings are left out unless asked for, so the text is reproducible.
  std::string to_text(bool with_timings = false) const;
};

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double lap_ms()
  {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace regsynth
