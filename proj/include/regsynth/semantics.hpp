#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regsynth/automata.hpp"

namespace regsynth {

struct Diagnostic {
  std::string invariant;
  std::string location;

  bool operator==(const Diagnostic&) const = default;
};

/// Structural checks of the register-automaton invariants. Empty iff valid.
std::vector<Diagnostic> validate_automaton(const RegisterAutomaton& a);
std::vector<Diagnostic> validate_automaton(const BooleanAutomaton& a);
std::vector<Diagnostic> validate_transducer(const RegisterTransducer& t);

struct TransducerInput {
  Letter signals = 0;
  DataValue value = 0;
};

struct TransducerOutput {
  Letter signals = 0;
  DataValue value = 0;
  std::uint64_t store = 0;

  bool operator==(const TransducerOutput&) const = default;
};

/// Runs t on a finite input stream. The data output of a step is read from the
/// registers before that step's store is applied.
std::vector<TransducerOutput> run_transducer(const RegisterTransducer& t,
                                             const std::vector<TransducerInput>& input);

/// The data word t produces on an ultimately periodic input. The input loop is
/// unrolled until the transducer configuration repeats at a loop boundary.
/// Signals of the result are inputs followed by outputs.
DataWord transducer_word(const RegisterTransducer& t, const std::vector<TransducerInput>& prefix,
                         const std::vector<TransducerInput>& loop);

/// Exact acceptance of a lasso word. If `domain_size` is given, every value in
/// w and the initial register value must lie below it.
bool accepts_data_word(const RegisterAutomaton& a, const DataWord& w,
                       std::optional<DataValue> domain_size = std::nullopt);

/// Acceptance of a Boolean lasso word given as letters over a.signals.
bool accepts_boolean_word(const BooleanAutomaton& a, const std::vector<Letter>& prefix,
                          const std::vector<Letter>& loop);

/// True iff some run of `a` reaches a cycle through an accepting state, for
/// some word. For universal co-Buchi automata this is "a rejected word exists";
/// for nondeterministic Buchi automata it is non-emptiness.
bool has_accepting_cycle(const BooleanAutomaton& a);

/// Bounded check of t against a: every transducer word produced by an input
/// lasso with prefix+loop length <= depth over D_domain_size is accepted.
bool transducer_satisfies_by_enumeration(const RegisterTransducer& t, const RegisterAutomaton& a,
                                         DataValue domain_size, std::size_t depth);

/// Calls f(prefix, loop) for every input lasso with 1 <= |loop| and
/// |prefix| + |loop| <= depth over 2^inputs x D_domain_size.
void for_each_input_lasso(std::size_t num_inputs, DataValue domain_size, std::size_t depth,
                          const std::function<void(const std::vector<TransducerInput>&,
                                                   const std::vector<TransducerInput>&)>& f);

/// Reindexes a word's letters onto another signal set (names must exist there).
DataWord remap_word(const DataWord& w, const SignalSet& target);

}  // namespace regsynth
