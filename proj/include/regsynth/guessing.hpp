#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "regsynth/automata.hpp"
#include "regsynth/semantics.hpp"

namespace regsynth {

/// Transition of a register-guessing automaton. The guard is symbolic: a cared
/// bit is an atom i = r / i != r (o likewise), a free bit is absent.
struct GaTransition {
  int src = 0;
  Cube letter;
  Guard guard;
  int dst = 0;

  auto operator<=>(const GaTransition&) const = default;
};

/// Nondeterministic Buchi automaton whose registers are guessed initially
/// (subject to the inequality set) and never written.
struct GuessingAutomaton {
  SignalSet signals;
  std::vector<std::string> registers;
  std::vector<std::string> states;
  int initial = 0;
  std::vector<int> accepting;
  std::vector<GaTransition> transitions;
  /// Pairs of register indices that must hold different values.
  std::vector<std::pair<int, int>> inequalities;

  std::size_t num_registers() const { return registers.size(); }
  std::size_t num_states() const { return states.size(); }
};

std::vector<Diagnostic> validate_guessing(const GuessingAutomaton& a);

/// Acceptance of a lasso word: some initial valuation that respects the
/// inequalities admits an accepting run. Valuations range over the values of
/// w plus k fresh values.
bool accepts_guessing(const GuessingAutomaton& a, const DataWord& w);

/// Conversion-2 gave up: the transition reads an uninitialized register in a
/// way that cannot be resolved by storing.
struct Abort {
  std::string reason;
  int source_state = 0;      // guessing-automaton state
  std::uint64_t initialized = 0;
  GaTransition transition;
};

using Conversion2Result = std::variant<RegisterAutomaton, Abort>;

/// Converts a register-guessing automaton into a nondeterministic Buchi
/// register automaton with states Q x B^k (reachable part only). Returns an
/// Abort value when a reachable rule reads an uninitialized register.
Conversion2Result conversion2(const GuessingAutomaton& a, DataValue init_value = 0);

/// Human-readable description of an abort.
std::string describe(const Abort& abort, const GuessingAutomaton& a);

}  // namespace regsynth
