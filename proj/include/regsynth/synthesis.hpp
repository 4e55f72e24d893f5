#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "regsynth/automata.hpp"
#include "regsynth/pipeline.hpp"

namespace regsynth {

/// Counter map over the states of a universal co-Buchi automaton: -1 means no
/// run is in the state, otherwise the largest number of F-visits of a run
/// ending there.
using CounterMap = std::vector<std::int8_t>;

/// Safety game obtained from a UCW by bounding F-visits. A round is: the
/// environment picks an input letter, the system answers with an output letter.
/// Positions are the counter maps reachable before a round.
struct SafetyGame {
  SignalSet inputs;
  SignalSet outputs;
  std::size_t bound = 0;
  std::vector<CounterMap> positions;
  /// -1 if the initial counter map already exceeds the bound.
  int initial = -1;
  /// Successor position of (p, in, out) or -1 when a counter exceeds the bound
  /// or the output letter is not allowed.
  std::vector<int> moves;

  std::size_t num_inputs() const { return std::size_t{1} << inputs.size(); }
  std::size_t num_outputs() const { return std::size_t{1} << outputs.size(); }
  int successor(int p, Letter in, Letter out) const
  {
    return moves[(static_cast<std::size_t>(p) * num_inputs() + in) * num_outputs() + out];
  }
};

/// Builds the game for UCW `a`. `inputs`/`outputs` partition a's signals (by
/// name). `allowed_output`, if set, removes output letters from the game.
SafetyGame ucw_to_safety_game(const BooleanAutomaton& a, std::size_t bound,
                              const SignalSet& inputs, const SignalSet& outputs,
                              const std::function<bool(Letter)>& allowed_output = {});
SafetyGame ucw_to_safety_game(const HiddenSpec& h, std::size_t bound);

struct SafetySolution {
  std::vector<bool> winning;     // per position
  std::vector<Letter> strategy;  // per (position, input); smallest winning output
  bool realizable = false;
};

SafetySolution solve_safety(const SafetyGame& g);

/// The strategy's reachable part as a Mealy machine. A successor position that
/// is pointwise dominated by an existing winning state is merged into it.
BooleanTransducer extract_mealy(const SafetyGame& g, const SafetySolution& s);

enum class SynthesisStatus { Realized, UnrealizableUpToBound };

struct SynthesisResult {
  SynthesisStatus status = SynthesisStatus::UnrealizableUpToBound;
  std::optional<RegisterTransducer> transducer;
  std::size_t bound = 0;  // bound at which it was realized, or the last tried
  std::size_t hidden_states = 0;
  std::size_t game_positions = 0;
  std::size_t mealy_states = 0;
};

/// Tries counter bounds 0..max_bound on H = build_hidden_spec(a, iface). A
/// returned transducer has been model checked against a.
SynthesisResult bounded_synthesis(const RegisterAutomaton& a, const SynthesisInterface& iface,
                                  std::size_t max_bound);
SynthesisResult bounded_synthesis(const RegisterAutomaton& a, const HiddenSpec& h,
                                  const SynthesisInterface& iface, std::size_t max_bound);

}  // namespace regsynth
