#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regsynth/bits.hpp"

namespace regsynth {

/// Data values. The infinite domain is the naturals; D_n is {0, ..., n-1}.
using DataValue = std::uint32_t;

enum class Acceptance { UniversalCoBuchi, NondeterministicBuchi };

std::string to_string(Acceptance a);
Acceptance dual(Acceptance a);

/// Equality guard over k registers: bit m of `in` constrains i = r_m and bit m
/// of `out` constrains o = r_m. A bit that is not cared for is unconstrained,
/// so a complete guard vector is the special case of fully cared cubes.
struct Guard {
  Cube in;
  Cube out;

  bool matches(std::uint64_t in_eq, std::uint64_t out_eq) const
  {
    return in.matches(in_eq) && out.matches(out_eq);
  }
  auto operator<=>(const Guard&) const = default;
};

/// One element of delta: on a letter in `letter` whose data comparisons match
/// `guard`, move to `dst` storing i into every register whose bit is set in
/// `store`.
struct RaTransition {
  int src = 0;
  Cube letter;
  Guard guard;
  std::uint64_t store = 0;
  int dst = 0;

  auto operator<=>(const RaTransition&) const = default;
};

/// Register automaton <P, {i,o}, R, d0, Q, q0, delta, F> read either as a
/// universal co-Buchi or a nondeterministic Buchi automaton.
struct RegisterAutomaton {
  Acceptance mode = Acceptance::UniversalCoBuchi;
  SignalSet signals;
  std::vector<std::string> registers;
  DataValue init_value = 0;
  std::vector<std::string> states;
  int initial = 0;
  std::vector<int> accepting;
  std::vector<RaTransition> transitions;

  std::size_t num_registers() const { return registers.size(); }
  std::size_t num_states() const { return states.size(); }
  std::vector<bool> accepting_mask() const;
  /// Transition indices grouped by source state.
  std::vector<std::vector<int>> outgoing() const;
  /// Sorts transitions and removes duplicates.
  void normalize();
};

/// (q, register values).
struct Configuration {
  int state = 0;
  std::vector<DataValue> registers;

  auto operator<=>(const Configuration&) const = default;
};

struct DataLetter {
  Letter signals = 0;
  DataValue in = 0;
  DataValue out = 0;

  auto operator<=>(const DataLetter&) const = default;
};

/// Ultimately periodic data word prefix . loop^omega over 2^P x D^2.
struct DataWord {
  SignalSet signals;
  std::vector<DataLetter> prefix;
  std::vector<DataLetter> loop;

  std::size_t length() const { return prefix.size() + loop.size(); }
  const DataLetter& at(std::size_t pos) const
  {
    return pos < prefix.size() ? prefix[pos] : loop[pos - prefix.size()];
  }
  /// Position reached after reading `pos`; the last loop letter wraps back.
  std::size_t next(std::size_t pos) const
  {
    return pos + 1 < length() ? pos + 1 : prefix.size();
  }
  DataValue max_value() const;

  bool operator==(const DataWord&) const = default;
};

/// Output of a register transducer step. `out_reg` is 0-based.
struct TransducerMove {
  Letter outputs = 0;
  int out_reg = 0;
  std::uint64_t store = 0;
  int dst = 0;

  bool operator==(const TransducerMove&) const = default;
};

/// Deterministic and complete register transducer. The transition function is
/// a dense table indexed by (state, input letter, i-guard vector).
struct RegisterTransducer {
  SignalSet inputs;
  SignalSet outputs;
  std::vector<std::string> registers;
  DataValue init_value = 0;
  std::vector<std::string> states;
  int initial = 0;
  std::vector<TransducerMove> table;

  std::size_t num_registers() const { return registers.size(); }
  std::size_t num_states() const { return states.size(); }
  std::size_t index(int state, Letter in, std::uint64_t guard) const
  {
    return ((static_cast<std::size_t>(state) << inputs.size()) | in) << num_registers() |
           guard;
  }
  const TransducerMove& move(int state, Letter in, std::uint64_t guard) const
  {
    return table[index(state, in, guard)];
  }
  /// Allocates a table of the right size filled with self-loops that output
  /// nothing, read `default_reg` and store nothing.
  void reset_table(int default_reg = 0);
};

struct BaTransition {
  int src = 0;
  Cube label;
  int dst = 0;

  auto operator<=>(const BaTransition&) const = default;
};

/// Register-less automaton over 2^signals with cube-labelled transitions.
/// Missing transitions mean the run falls out of the automaton.
struct BooleanAutomaton {
  Acceptance mode = Acceptance::UniversalCoBuchi;
  SignalSet signals;
  std::vector<std::string> states;
  int initial = 0;
  std::vector<int> accepting;
  std::vector<BaTransition> transitions;

  std::size_t num_states() const { return states.size(); }
  std::vector<bool> accepting_mask() const;
  std::vector<std::vector<int>> outgoing() const;
  void normalize();
  /// Number of (state, complete letter, state) triples denoted by the cubes.
  std::uint64_t explicit_transition_count() const;
};

struct MealyMove {
  Letter outputs = 0;
  int dst = 0;

  bool operator==(const MealyMove&) const = default;
};

/// Boolean transducer (Mealy machine), total and deterministic.
struct BooleanTransducer {
  SignalSet inputs;
  SignalSet outputs;
  std::vector<std::string> states;
  int initial = 0;
  std::vector<MealyMove> table;  // index (state << |inputs|) | input letter

  std::size_t num_states() const { return states.size(); }
  const MealyMove& move(int state, Letter in) const
  {
    return table[(static_cast<std::size_t>(state) << inputs.size()) | in];
  }
};

/// Bitmask of registers whose value equals v.
std::uint64_t equality_bits(const std::vector<DataValue>& regs, DataValue v);

/// Applies a store vector.
void apply_store(std::vector<DataValue>& regs, std::uint64_t store, DataValue v);

}  // namespace regsynth
