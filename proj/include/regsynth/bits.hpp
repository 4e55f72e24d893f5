#pragma once

#include <bit>
#include <cstdint>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace regsynth {

/// A valuation of up to 64 Boolean signals; bit j is signal j.
using Letter = std::uint64_t;

inline constexpr std::size_t kMaxSignals = 64;

inline constexpr std::uint64_t low_mask(std::size_t width)
{
  return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
}

inline constexpr bool test_bit(std::uint64_t bits, std::size_t j)
{
  return ((bits >> j) & 1u) != 0;
}

inline constexpr std::uint64_t with_bit(std::uint64_t bits, std::size_t j, bool v)
{
  return v ? (bits | (std::uint64_t{1} << j)) : (bits & ~(std::uint64_t{1} << j));
}

/// A conjunction of literals: every bit in `care` is fixed to the matching bit
/// of `value`, all other bits are free. Complete valuations are cubes whose
/// `care` covers the whole width.
struct Cube {
  std::uint64_t care = 0;
  std::uint64_t value = 0;

  static Cube any() { return {}; }
  static Cube exact(std::uint64_t bits, std::size_t width)
  {
    return {low_mask(width), bits & low_mask(width)};
  }

  bool matches(std::uint64_t bits) const { return (bits & care) == value; }
  bool is_free(std::size_t j) const { return !test_bit(care, j); }
  bool is_true(std::size_t j) const { return test_bit(care, j) && test_bit(value, j); }
  bool is_false(std::size_t j) const { return test_bit(care, j) && !test_bit(value, j); }

  Cube with(std::size_t j, bool v) const
  {
    return {care | (std::uint64_t{1} << j), with_bit(value, j, v)};
  }
  Cube without(std::size_t j) const
  {
    return {care & ~(std::uint64_t{1} << j), value & ~(std::uint64_t{1} << j)};
  }

  std::optional<Cube> intersect(const Cube& o) const
  {
    const auto shared = care & o.care;
    if ((value & shared) != (o.value & shared))
      return std::nullopt;
    return Cube{care | o.care, value | o.value};
  }

  /// Number of complete valuations over `width` bits covered by the cube.
  std::uint64_t minterm_count(std::size_t width) const
  {
    return std::uint64_t{1} << (width - std::popcount(care & low_mask(width)));
  }

  /// Calls f(bits) for every complete valuation over `width` bits in the cube,
  /// in increasing numeric order.
  template <class F>
  void for_each_minterm(std::size_t width, F&& f) const
  {
    const auto free = ~care & low_mask(width);
    std::uint64_t sub = 0;
    while (true) {
      f(value | sub);
      if (sub == free)
        break;
      sub = (sub - free) & free;
    }
  }

  auto operator<=>(const Cube&) const = default;
};

/// Ordered list of signal names with name lookup.
class SignalSet {
public:
  SignalSet() = default;
  explicit SignalSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& operator[](std::size_t j) const { return names_[j]; }

  /// -1 if absent.
  int index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name) >= 0; }

  bool operator==(const SignalSet&) const = default;

private:
  std::vector<std::string> names_;
};

/// Maps letters over `from` onto the positions the same names occupy in `to`.
/// Throws if a name of `from` is missing in `to`.
class SignalMap {
public:
  SignalMap(const SignalSet& from, const SignalSet& to);

  std::uint64_t map_bits(std::uint64_t bits) const;
  Cube map_cube(const Cube& c) const;
  int target(std::size_t j) const { return target_[j]; }

private:
  std::vector<int> target_;
};

/// Raised for malformed inputs and violated operation preconditions.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep);

/// Bits j of `bits` for j < width as a '0'/'1' string, bit 0 first.
std::string bit_string(std::uint64_t bits, std::size_t width);

/// Same for a cube, writing '*' for free bits.
std::string cube_string(const Cube& c, std::size_t width);

}  // namespace regsynth
