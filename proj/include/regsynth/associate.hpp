#pragma once

#include <string>
#include <vector>

#include "regsynth/automata.hpp"

namespace regsynth {

/// Reserved signal names of the Boolean associates. User signals may not start
/// with any of the prefixes.
namespace signal_names {
std::string g_in(const std::string& reg);    // g_i@r : i = r
std::string g_out(const std::string& reg);   // g_o@r : o = r
std::string assign(const std::string& reg);  // asgn@r : store i into r
std::string outreg(std::size_t bit);         // outreg@b : bit b of (out_reg - 1)
bool is_reserved(const std::string& name);
}  // namespace signal_names

/// Number of O_k signals needed to encode [k]: ceil(log2 k), 0 for k <= 1.
std::size_t outreg_width(std::size_t k);

/// A_B over P ++ G_i ++ G_o ++ Asgn (in that order, registers in order).
BooleanAutomaton to_boolean_automaton(const RegisterAutomaton& a);

/// T_B with inputs I ++ G_i and outputs O ++ Asgn ++ O_k.
BooleanTransducer to_boolean_transducer(const RegisterTransducer& t);

/// Interface of the register transducer a Boolean transducer is read back as.
struct TransducerInterface {
  SignalSet inputs;
  SignalSet outputs;
  std::vector<std::string> registers;
  DataValue init_value = 0;
};

/// Reads a Mealy machine over (I ++ G_i) / (O ++ Asgn ++ O_k), matched by
/// signal name, as a register transducer. Unreachable states are dropped.
/// Throws if an emitted O_k code is not a register index.
RegisterTransducer lift_transducer(const BooleanTransducer& tb, const TransducerInterface& iface);

/// Rejects user signal names that collide with the reserved prefixes.
void check_user_signals(const SignalSet& signals);

}  // namespace regsynth
