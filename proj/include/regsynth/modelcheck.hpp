#pragma once

#include <optional>

#include "regsynth/automata.hpp"

namespace regsynth {

/// Same tuple read in the dual acceptance mode.
RegisterAutomaton dualize(const RegisterAutomaton& a);

/// Product of a nondeterministic Buchi automaton with a transducer: registers
/// R^A ++ R^T, states (q, s) reachable in the control graph, F = F^A x S. The
/// word's o is forced to equal the transducer register chosen by out_reg.
RegisterAutomaton product_with_transducer(const RegisterAutomaton& atilde,
                                          const RegisterTransducer& t);

/// Buchi emptiness of a register automaton over a finite domain of
/// `domain_size` values (default k + 1), always containing init_value. Returns
/// an accepted lasso word if the language is non-empty.
std::optional<DataWord> check_emptiness_cutoff(const RegisterAutomaton& p,
                                               std::optional<DataValue> domain_size = {});

struct ModelCheckResult {
  bool holds = false;
  std::optional<DataWord> counterexample;  // over a's signals
};

/// T |= A for a universal co-Buchi A. Counterexamples are re-checked by
/// running the transducer and the automaton on them.
ModelCheckResult model_check(const RegisterTransducer& t, const RegisterAutomaton& a);

}  // namespace regsynth
