#include "regsynth/fixtures.hpp"

#include "regsynth/format.hpp"
#include "regsynth/ltleq.hpp"

namespace regsynth::fixtures {

const std::string_view kFig1 = R"(# regsynth-format 1
# Every req is eventually followed by a grant whose o equals the requested i.
mode: universal-co-buchi
bool_signals: req, grant
registers: r
init_value: 0
states: q0, q1
initial: q0
accepting: q1
q0 | req?, grant? | * | * | 0 | q0
q0 | req, grant?  | * | * | 1 | q1
q1 | req?         | * | * | 0 | q1
q1 | req?, grant  | * | 0 | 0 | q1
)";

const std::string_view kFig2 = R"(# regsynth-format 1
inputs: req
out: grant
registers: r
init_value: 0
states: s0, s1
initial: s0
outreg: 1
default: none
s0 | -   | * | -     | 1 | 0 | s0
s0 | req | * | -     | 1 | 1 | s1
s1 | req | * | grant | 1 | 1 | s1
s1 | -   | * | grant | 1 | 0 | s0
)";

const std::string_view kNeverGrant = R"(# regsynth-format 1
inputs: req
out: grant
registers: r
init_value: 0
states: s0
initial: s0
outreg: 1
default: self
)";

const std::string_view kFig4 = R"(# regsynth-format 1
# Two consecutive i-values are compared; equal ones must be echoed with e
# high two steps later, different ones need e low. Accepts the violations.
mode: nondeterministic-buchi
bool_signals: e
registers: r1, r2
inequalities: r1 != r2
states: q0, q1, q2, q3, qacc
initial: q0
accepting: qacc
q0   | e?  | *  | * | q0
q0   | e?  | 1* | * | q1
q1   | e?  | *1 | * | q2
q1   | e?  | 1* | * | q3
q2   | e   | *  | * | qacc
q3   | -   | *  | * | qacc
q3   | e?  | *  | 0* | qacc
qacc | e?  | *  | * | qacc
)";

const std::string_view kFig7 = R"(# regsynth-format 1
# At some moment i equals the initial register value.
mode: universal-co-buchi
bool_signals: -
registers: r
init_value: 0
states: q0, q1
initial: q0
accepting: q0
q0 | * | 0 | * | 0 | q0
q0 | * | 1 | * | 0 | q1
q1 | * | * | * | 0 | q1
)";

const std::string_view kRequestGrant = R"(# Every request is eventually granted with the requested value.
forall d . true . G(req & i = d -> X F (grant & o = d))
)";

const std::string_view kFig4Formula = R"(# Negation of: equal consecutive inputs are echoed with e two steps later,
# different ones lower e.
exists x1 x2 . x1 != x2 .
  !G((i = x1 & X i = x2 -> X X !e) & (i = x1 & X i = x1 -> X X (e & o = x1)))
)";

const std::string_view kNeverEqual = R"(# Some value never appears on i; no register automaton expresses this.
exists x . true . G(i != x)
)";

RegisterAutomaton fig1() { return parse_register_automaton(kFig1); }
RegisterTransducer fig2() { return parse_register_transducer(kFig2); }
RegisterTransducer never_grant() { return parse_register_transducer(kNeverGrant); }
GuessingAutomaton fig4() { return parse_guessing_automaton(kFig4); }
RegisterAutomaton fig7() { return parse_register_automaton(kFig7); }

namespace {

const std::string_view kResponse = R"(# regsynth-format 1
# G(req -> F grant)
mode: universal-co-buchi
bool_signals: req, grant
registers: -
states: q0, q1
initial: q0
accepting: q1
q0 | * | - | - | - | q0
q0 | req, grant? | - | - | - | q1
q1 | req? | - | - | - | q1
)";

const std::string_view kImmediate = R"(# regsynth-format 1
# G(req -> grant)
mode: universal-co-buchi
bool_signals: req, grant
registers: -
states: q0, bad
initial: q0
accepting: bad
q0 | * | - | - | - | q0
q0 | req | - | - | - | bad
bad | * | - | - | - | bad
)";

const std::string_view kAcceptAll = R"(# regsynth-format 1
mode: universal-co-buchi
bool_signals: req, grant
registers: -
states: q0
initial: q0
accepting: -
q0 | * | - | - | - | q0
)";

const std::string_view kDelayOne = R"(# regsynth-format 1
# From the second step on, o equals the previous i.
mode: universal-co-buchi
bool_signals: req, grant
registers: r
init_value: 0
states: q0, q1, bad
initial: q0
accepting: bad
q0 | * | * | * | 1 | q1
q1 | * | * | 1 | 1 | q1
q1 | * | * | 0 | 0 | bad
bad | * | * | * | 0 | bad
)";

const std::string_view kRememberFirst = R"(# regsynth-format 1
# From the second step on, o equals the first i.
mode: universal-co-buchi
bool_signals: req, grant
registers: r
init_value: 0
states: q0, q1, bad
initial: q0
accepting: bad
q0 | * | * | * | 1 | q1
q1 | * | * | 1 | 0 | q1
q1 | * | * | 0 | 0 | bad
bad | * | * | * | 0 | bad
)";

const std::string_view kNextGrant = R"(# regsynth-format 1
# G(req & i = d -> X(grant & o = d))
mode: universal-co-buchi
bool_signals: req, grant
registers: r
init_value: 0
states: q0, q1, bad
initial: q0
accepting: bad
q0 | * | * | * | 0 | q0
q0 | req, grant? | * | * | 1 | q1
q1 | req? | * | * | 0 | bad
q1 | req?, grant | * | 0 | 0 | bad
bad | * | * | * | 0 | bad
)";

const std::string_view kInfinitelyOftenGrant = R"(# regsynth-format 1
# G F grant
mode: universal-co-buchi
bool_signals: req, grant
registers: -
states: q0, q1
initial: q0
accepting: q1
q0 | * | - | - | - | q0
q0 | req? | - | - | - | q1
q1 | req? | - | - | - | q1
)";

const std::string_view kOutputInitial = R"(# regsynth-format 1
# o always equals the initial register value.
mode: universal-co-buchi
bool_signals: req, grant
registers: r
init_value: 0
states: q0, bad
initial: q0
accepting: bad
q0 | * | * | 1 | 0 | q0
q0 | * | * | 0 | 0 | bad
bad | * | * | * | 0 | bad
)";

const std::string_view kDelayTwo = R"(# regsynth-format 1
# From the third step on, o equals the i of two steps before.
mode: universal-co-buchi
bool_signals: req, grant
registers: r
init_value: 0
states: q0, q1, q2, bad
initial: q0
accepting: bad
q0 | * | * | * | 0 | q0
q0 | * | * | * | 1 | q1
q1 | * | * | * | 0 | q2
q2 | * | * | 0 | 0 | bad
bad | * | * | * | 0 | bad
)";

const std::string_view kEmpty = R"(# regsynth-format 1
# Rejects every word.
mode: universal-co-buchi
bool_signals: req, grant
registers: -
states: q0
initial: q0
accepting: q0
q0 | * | - | - | - | q0
)";

const std::string_view kOutputNotInitial = R"(# regsynth-format 1
# o never equals the initial register value.
mode: universal-co-buchi
bool_signals: req, grant
registers: r
init_value: 0
states: q0, bad
initial: q0
accepting: bad
q0 | * | * | 0 | 0 | q0
q0 | * | * | 1 | 0 | bad
bad | * | * | * | 0 | bad
)";

const std::string_view kClairvoyant = R"(# regsynth-format 1
# G(grant <-> X req)
mode: universal-co-buchi
bool_signals: req, grant
registers: -
states: q0, qg, qn, bad
initial: q0
accepting: bad
q0 | * | - | - | - | q0
q0 | req?, grant | - | - | - | qg
q0 | req? | - | - | - | qn
qg | grant? | - | - | - | bad
qn | req, grant? | - | - | - | bad
bad | * | - | - | - | bad
)";

const std::string_view kForceRequests = R"(# regsynth-format 1
# G F req, with req an input
mode: universal-co-buchi
bool_signals: req, grant
registers: -
states: q0, q1
initial: q0
accepting: q1
q0 | * | - | - | - | q0
q0 | grant? | - | - | - | q1
q1 | grant? | - | - | - | q1
)";

}  // namespace

SynthesisInterface CorpusEntry::interface() const
{
  return {SignalSet(inputs), SignalSet(outputs), k_t, 0};
}

RegisterAutomaton CorpusEntry::spec() const
{
  if (!formula)
    return parse_register_automaton(text);
  std::vector<std::string> names = inputs;
  names.insert(names.end(), outputs.begin(), outputs.end());
  auto r = formula_to_spec(parse_formula(text), SignalSet(names));
  if (std::holds_alternative<Abort>(r))
    throw Error("corpus formula " + name + " does not convert");
  return std::get<RegisterAutomaton>(r);
}

const std::vector<CorpusEntry>& synthesis_corpus()
{
  static const std::vector<CorpusEntry> corpus = [] {
    const std::vector<std::string> in{"req"}, out{"grant"};
    std::vector<CorpusEntry> c;
    c.push_back({"fig1-kt1", kFig1, false, in, out, 1, true});
    c.push_back({"fig1-kt2", kFig1, false, in, out, 2, true});
    c.push_back({"request-grant-formula", kRequestGrant, true, in, out, 1, true});
    c.push_back({"response", kResponse, false, in, out, 1, true});
    c.push_back({"immediate-grant", kImmediate, false, in, out, 1, true});
    c.push_back({"accept-all", kAcceptAll, false, in, out, 1, true});
    c.push_back({"delay-one", kDelayOne, false, in, out, 1, true});
    c.push_back({"remember-first", kRememberFirst, false, in, out, 1, true});
    c.push_back({"next-step-grant", kNextGrant, false, in, out, 1, true});
    c.push_back({"infinitely-often-grant", kInfinitelyOftenGrant, false, in, out, 1, true});
    c.push_back({"output-initial", kOutputInitial, false, in, out, 1, true});
    c.push_back({"delay-two-kt2", kDelayTwo, false, in, out, 2, true});
    c.push_back({"empty-language", kEmpty, false, in, out, 1, false});
    c.push_back({"output-not-initial", kOutputNotInitial, false, in, out, 1, false});
    c.push_back({"eventually-initial-input", kFig7, false, {}, {}, 1, false});
    c.push_back({"clairvoyant-grant", kClairvoyant, false, in, out, 1, false});
    c.push_back({"force-requests", kForceRequests, false, in, out, 1, false});
    c.push_back({"delay-two-kt1", kDelayTwo, false, in, out, 1, false});
    return c;
  }();
  return corpus;
}

}  // namespace regsynth::fixtures
