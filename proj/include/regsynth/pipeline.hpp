#pragma once

#include <string>
#include <vector>

#include "regsynth/associate.hpp"
#include "regsynth/automata.hpp"
#include "regsynth/verifier.hpp"

namespace regsynth {

/// Interface of the transducer to synthesize.
struct SynthesisInterface {
  SignalSet inputs;
  SignalSet outputs;
  std::size_t k_t = 1;
  DataValue init_value = 0;

  /// t1..tk, the transducer registers.
  std::vector<std::string> registers() const;
  /// Letter signals of T_all that mirror the transducer stores (sync@tj).
  std::vector<std::string> sync_signals() const;
  TransducerInterface transducer_interface() const;
};

/// T_all over I ++ O ++ sync@t1..: states {q0, sink}, F = {sink}.
RegisterAutomaton build_t_all(const SynthesisInterface& iface);

/// A (x) T_all with registers R^A ++ R^T and states Q^A x {q0, sink}.
RegisterAutomaton product_A_Tall(const RegisterAutomaton& a, const RegisterAutomaton& tall);

/// Result of the synthesis-tailored verifier construction.
struct Atw {
  BooleanAutomaton automaton;
  std::vector<std::string> registers;  // R^A ++ R^T
  SignalSet inputs;                    // I
  SignalSet outputs;                   // O
  std::size_t k_a = 0;
  std::size_t k_t = 0;
  std::vector<Partition> partition;     // per state
  std::vector<int> source_state;        // state of A (x) T_all per state
  std::size_t dropped = 0;              // transitions with o outside every T register
  std::vector<std::string> dropped_log; // first few, with provenance
};

/// (A (x) T_all)_B @ V_{kA+kT} with the g_o^T signals replaced by the output
/// register code. The last iface.k_t registers of `at` are the transducer's.
Atw build_atw(const RegisterAutomaton& at, const SynthesisInterface& iface);

/// H = hide_A(ATW) over I ++ O ++ G_i^T ++ O_kT ++ Asgn^T.
struct HiddenSpec {
  BooleanAutomaton automaton;
  std::vector<int> atw_state;         // provenance per state
  std::vector<Partition> partition;   // over R^A ++ R^T
  std::vector<std::string> registers; // R^A ++ R^T
  std::size_t k_a = 0;
  std::size_t k_t = 0;
  SignalSet inputs;   // I ++ G_i^T
  SignalSet outputs;  // O ++ O_kT ++ Asgn^T
};

HiddenSpec hide(const Atw& atw);

/// All intermediate automata of the reduction, for inspection.
struct PipelineStages {
  BooleanAutomaton ab;   // A_B
  Verifier v;            // V_{kA+kT}
  BooleanAutomaton abv;  // A_B @ V_kA
  RegisterAutomaton tall;
  RegisterAutomaton at;  // A (x) T_all
  Atw atw;
  HiddenSpec h;
};

void check_interface(const RegisterAutomaton& a, const SynthesisInterface& iface);

PipelineStages run_pipeline(const RegisterAutomaton& a, const SynthesisInterface& iface);
HiddenSpec build_hidden_spec(const RegisterAutomaton& a, const SynthesisInterface& iface);

/// |Q_A| * 2 * Bell(kA + kT).
std::uint64_t hidden_state_bound(const RegisterAutomaton& a, std::size_t k_t);
std::uint64_t bell_number(std::size_t n);

/// H read as a universal co-Buchi kT-register automaton over the alphabet of
/// A (x) T_all: g_i^T bits become i-guards, the output code j becomes o = t_j
/// and Asgn^T bits become both the sync@tj letter signals and the stores.
RegisterAutomaton register_reading(const HiddenSpec& h, const SynthesisInterface& iface);

}  // namespace regsynth
