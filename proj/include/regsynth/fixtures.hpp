#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regsynth/automata.hpp"
#include "regsynth/guessing.hpp"
#include "regsynth/pipeline.hpp"

/// Reference machines (fig1, fig2, ...) and a small synthesis corpus, in the
/// textual formats. The copies under fixtures/ in the source tree match these.
namespace regsynth::fixtures {

extern const std::string_view kFig1;          // request/grant UCW, 1 register
extern const std::string_view kFig2;          // 1-register transducer satisfying kFig1
extern const std::string_view kNeverGrant;    // transducer that never grants
extern const std::string_view kFig4;          // 2-register-guessing automaton
extern const std::string_view kFig7;          // "eventually i = d0"
extern const std::string_view kRequestGrant;  // formula of kFig1
extern const std::string_view kFig4Formula;
extern const std::string_view kNeverEqual;    // exists x . G(i != x)

RegisterAutomaton fig1();
RegisterTransducer fig2();
RegisterTransducer never_grant();
GuessingAutomaton fig4();
RegisterAutomaton fig7();

struct CorpusEntry {
  std::string name;
  std::string_view text;  // .ra text, or a formula when `formula` is set
  bool formula = false;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::size_t k_t = 1;
  bool realizable = true;

  SynthesisInterface interface() const;
  /// The specification as a universal co-Buchi register automaton.
  RegisterAutomaton spec() const;
};

const std::vector<CorpusEntry>& synthesis_corpus();

}  // namespace regsynth::fixtures
