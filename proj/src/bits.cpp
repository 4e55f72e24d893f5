#include "regsynth/bits.hpp"

#include <algorithm>

namespace regsynth {

SignalSet::SignalSet(std::vector<std::string> names) : names_(std::move(names))
{
  if (names_.size() > kMaxSignals)
    throw Error("too many Boolean signals (" + std::to_string(names_.size()) + " > 64)");
  for (std::size_t j = 0; j < names_.size(); ++j)
    for (std::size_t k = 0; k < j; ++k)
      if (names_[j] == names_[k])
        throw Error("duplicate signal name '" + names_[j] + "'");
}

int SignalSet::index_of(const std::string& name) const
{
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

SignalMap::SignalMap(const SignalSet& from, const SignalSet& to)
{
  target_.reserve(from.size());
  for (const auto& n : from.names()) {
    int j = to.index_of(n);
    if (j < 0)
      throw Error("signal '" + n + "' is not part of the target alphabet");
    target_.push_back(j);
  }
}

std::uint64_t SignalMap::map_bits(std::uint64_t bits) const
{
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < target_.size(); ++j)
    if (test_bit(bits, j))
      out |= std::uint64_t{1} << target_[j];
  return out;
}

Cube SignalMap::map_cube(const Cube& c) const
{
  return {map_bits(c.care), map_bits(c.value)};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
  std::string out;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (j)
      out += sep;
    out += parts[j];
  }
  return out;
}

std::string bit_string(std::uint64_t bits, std::size_t width)
{
  std::string s;
  for (std::size_t j = 0; j < width; ++j)
    s += test_bit(bits, j) ? '1' : '0';
  return s;
}

std::string cube_string(const Cube& c, std::size_t width)
{
  std::string s;
  for (std::size_t j = 0; j < width; ++j)
    s += c.is_free(j) ? '*' : (c.is_true(j) ? '1' : '0');
  return s;
}

}  // namespace regsynth
