#include <doctest.h>

#include <map>
#include <set>

#include "regsynth/associate.hpp"
#include "regsynth/fixtures.hpp"
#include "regsynth/modelcheck.hpp"
#include "regsynth/pipeline.hpp"
#include "support.hpp"

using namespace regsynth;
using namespace testing;

namespace {

const SynthesisInterface kReqGrant{SignalSet({"req"}), SignalSet({"grant"}), 1, 0};

// Keeps only the signals of `target` (all of which must occur in w).
DataWord project(const DataWord& w, const SignalSet& target)
{
  std::vector<int> at;
  for (const auto& n : target.names())
    at.push_back(w.signals.index_of(n));
  auto map = [&](const DataLetter& l) {
    Letter out = 0;
    for (std::size_t j = 0; j < at.size(); ++j)
      out |= static_cast<Letter>(test_bit(l.signals, at[j])) << j;
    return DataLetter{out, l.in, l.out};
  };
  DataWord r{target, {}, {}};
  for (const auto& l : w.prefix)
    r.prefix.push_back(map(l));
  for (const auto& l : w.loop)
    r.loop.push_back(map(l));
  return r;
}

// A word is producible iff, storing i into t_j whenever sync@tj holds, o
// always equals some current register.
bool producible(const DataWord& w, const SynthesisInterface& iface)
{
  const auto nio = iface.inputs.size() + iface.outputs.size();
  std::vector<DataValue> regs(iface.k_t, iface.init_value);
  std::set<std::pair<std::size_t, std::vector<DataValue>>> seen;
  std::size_t pos = 0;
  while (seen.insert({pos, regs}).second) {
    const auto& l = w.at(pos);
    if (equality_bits(regs, l.out) == 0)
      return false;
    apply_store(regs, l.signals >> nio, l.in);
    pos = w.next(pos);
  }
  return true;
}

SignalSet tall_signals(const SynthesisInterface& iface)
{
  auto n = iface.inputs.names();
  n.insert(n.end(), iface.outputs.names().begin(), iface.outputs.names().end());
  const auto s = iface.sync_signals();
  n.insert(n.end(), s.begin(), s.end());
  return SignalSet(n);
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("T_all with one register")
{
  const auto tall = build_t_all(kReqGrant);
  CHECK(tall.signals.names() == std::vector<std::string>{"req", "grant", "sync@t1"});
  CHECK(tall.registers == std::vector<std::string>{"t1"});
  CHECK(tall.states == std::vector<std::string>{"q0", "sink"});
  CHECK(tall.accepting == std::vector<int>{1});
  bool stay_store = false, to_sink = false;
  for (const auto& t : tall.transitions) {
    if (t.src != 0)
      continue;
    const Letter sync_on = 0b100;
    if (t.guard.out.matches(1) && t.letter.matches(sync_on)) {
      CHECK(t.dst == 0);
      CHECK(t.store == 1);
      stay_store = true;
    }
    if (t.guard.out.matches(0)) {
      CHECK(t.dst == 1);
      to_sink = true;
    }
  }
  CHECK(stay_store);
  CHECK(to_sink);
}

TEST_CASE("T_all on hand-built words")
{
  const SynthesisInterface iface{SignalSet(), SignalSet(), 1, 0};
  const auto tall = build_t_all(iface);
  const SignalSet s({"sync@t1"});
  // store 1, then output it forever
  CHECK(accepts_data_word(tall, {s, {{1, 1, 0}}, {{0, 0, 1}}}));
  // output a value never stored
  CHECK_FALSE(accepts_data_word(tall, {s, {{0, 1, 0}}, {{0, 0, 1}}}));
  // store without sync: register keeps 0
  CHECK_FALSE(accepts_data_word(tall, {s, {{0, 1, 0}}, {{0, 1, 1}}}));
}

TEST_CASE("T_all accepts exactly the producible words")
{
  auto rng = make_rng(30);
  for (std::size_t kt = 1; kt <= 2; ++kt) {
    const SynthesisInterface iface{SignalSet({"a"}), SignalSet({"b"}), kt, 0};
    const auto tall = build_t_all(iface);
    const auto sig = tall_signals(iface);
    int accepted = 0;
    for (int n = 0; n < 400; ++n) {
      auto w = random_word(rng, sig, 3);
      // bias towards producible words
      if (coin(rng, 60)) {
        std::vector<DataValue> regs(kt, 0);
        for (std::size_t j = 0; j < w.length(); ++j) {
          auto& l = j < w.prefix.size() ? w.prefix[j] : w.loop[j - w.prefix.size()];
          l.out = regs[pick(rng, kt)];
          apply_store(regs, l.signals >> 2, l.in);
        }
      }
      const bool got = accepts_data_word(tall, w);
      CHECK(got == producible(w, iface));
      accepted += got;
    }
    CHECK(accepted > 0);
  }
}

TEST_CASE("product of fig1 with T_all")
{
  const auto at = product_A_Tall(fixtures::fig1(), build_t_all(kReqGrant));
  CHECK(at.num_states() == 4);
  CHECK(at.registers == std::vector<std::string>{"r", "t1"});
  std::set<std::string> f;
  for (int q : at.accepting)
    f.insert(at.states[q]);
  CHECK(f == std::set<std::string>{"q1|q0", "q1|sink", "q0|sink"});
  CHECK(at.states[at.initial] == "q0|q0");
}

TEST_CASE("product language is the intersection")
{
  auto rng = make_rng(31);
  const auto a = fixtures::fig1();
  const auto tall = build_t_all(kReqGrant);
  const auto at = product_A_Tall(a, tall);
  int both = 0;
  for (int n = 0; n < 400; ++n) {
    auto w = random_word(rng, at.signals, 3);
    if (coin(rng, 50)) {
      DataValue reg = 0;
      for (std::size_t j = 0; j < w.length(); ++j) {
        auto& l = j < w.prefix.size() ? w.prefix[j] : w.loop[j - w.prefix.size()];
        l.out = reg;
        if (l.signals & 4u)
          reg = l.in;
      }
    }
    const bool ta = accepts_data_word(tall, w);
    const bool aa = accepts_data_word(a, project(w, a.signals));
    CHECK(accepts_data_word(at, w) == (ta && aa));
    both += ta && aa;
  }
  CHECK(both > 0);
}

TEST_CASE("register name collision is rejected")
{
  auto a = fixtures::fig1();
  a.registers = {"t1"};
  CHECK_THROWS_AS(product_A_Tall(a, build_t_all(kReqGrant)), Error);
}

TEST_CASE("ATW splits o-equalities over the transducer registers")
{
  const auto spec = parse_register_automaton(R"(# regsynth-format 1
mode: universal-co-buchi
bool_signals: -
registers: -
states: q0
initial: q0
accepting: -
q0 | * | - | - | - | q0
)");
  const SynthesisInterface iface{SignalSet(), SignalSet(), 2, 0};
  const auto atw = build_atw(product_A_Tall(spec, build_t_all(iface)), iface);
  const auto& sig = atw.automaton.signals;
  const int code = sig.index_of("outreg@0");
  REQUIRE(code >= 0);
  CHECK(sig.index_of("g_o@t1") < 0);
  // from the start (t1, t2 in one block) both codes are available
  bool j1 = false, j2 = false;
  for (const auto& t : atw.automaton.transitions)
    if (t.src == atw.automaton.initial) {
      j1 = j1 || t.label.is_false(code);
      j2 = j2 || t.label.is_true(code);
    }
  CHECK(j1);
  CHECK(j2);
  CHECK(atw.dropped > 0);
  CHECK_FALSE(atw.dropped_log.empty());
}

TEST_CASE("fig1 pipeline sizes")
{
  const auto st = run_pipeline(fixtures::fig1(), kReqGrant);
  CHECK(st.ab.num_states() == 2);
  CHECK(st.v.automaton.num_states() == 2);
  CHECK(st.at.num_states() == 4);
  CHECK(st.h.automaton.num_states() <= hidden_state_bound(fixtures::fig1(), 1));
  CHECK(hidden_state_bound(fixtures::fig1(), 1) == 8);
  CHECK(st.h.automaton.signals.names() ==
        std::vector<std::string>{"req", "g_i@t1", "grant", "asgn@t1"});
  CHECK(st.h.inputs.names() == std::vector<std::string>{"req", "g_i@t1"});
  CHECK(st.h.outputs.names() == std::vector<std::string>{"grant", "asgn@t1"});
  CHECK(st.h.partition[st.h.automaton.initial] == Partition::single_block(2));
}

TEST_CASE("H keeps provenance of every state")
{
  const auto st = run_pipeline(fixtures::fig1(), kReqGrant);
  const auto& h = st.h;
  REQUIRE(h.atw_state.size() == h.automaton.num_states());
  for (std::size_t q = 0; q < h.automaton.num_states(); ++q) {
    const int a = h.atw_state[q];
    REQUIRE(a >= 0);
    REQUIRE(static_cast<std::size_t>(a) < st.atw.automaton.num_states());
    CHECK(h.partition[q] == st.atw.partition[a]);
  }
  // every ATW transition from a kept state projects onto an H transition
  std::map<int, int> h_of;
  for (std::size_t q = 0; q < h.automaton.num_states(); ++q)
    h_of[h.atw_state[q]] = static_cast<int>(q);
  const SignalMap proj_check(h.automaton.signals, st.atw.automaton.signals);
  for (const auto& t : st.atw.automaton.transitions) {
    if (!h_of.count(t.src))
      continue;
    REQUIRE(h_of.count(t.dst));
    bool found = false;
    for (const auto& u : h.automaton.transitions) {
      if (u.src != h_of[t.src] || u.dst != h_of[t.dst])
        continue;
      const auto lifted = proj_check.map_cube(u.label);
      found = found || lifted.intersect(t.label).has_value();
    }
    CHECK(found);
  }
}

TEST_CASE("hiding without A-registers changes nothing")
{
  const auto spec = fixtures::synthesis_corpus()[3];  // response, no registers
  REQUIRE(spec.name == "response");
  const auto st = run_pipeline(spec.spec(), spec.interface());
  // H keeps the reachable part of the ATW, one state per ATW state
  const auto& atw = st.atw.automaton;
  const auto out = atw.outgoing();
  std::set<int> reach{atw.initial};
  std::vector<int> todo{atw.initial};
  while (!todo.empty()) {
    const int q = todo.back();
    todo.pop_back();
    for (int j : out[q])
      if (reach.insert(atw.transitions[j].dst).second)
        todo.push_back(atw.transitions[j].dst);
  }
  CHECK(st.h.automaton.num_states() == reach.size());
  std::set<int> sources(st.h.atw_state.begin(), st.h.atw_state.end());
  CHECK(sources == reach);
  std::size_t reachable_transitions = 0;
  for (const auto& t : atw.transitions)
    reachable_transitions += reach.count(t.src);
  CHECK(st.h.automaton.transitions.size() == reachable_transitions);
}

TEST_CASE("Bell bound over the corpus")
{
  for (const auto& e : fixtures::synthesis_corpus()) {
    const auto a = e.spec();
    const auto h = build_hidden_spec(a, e.interface());
    CHECK_MESSAGE(h.automaton.num_states() <= hidden_state_bound(a, e.k_t), e.name);
  }
}

TEST_CASE("interface mismatches are rejected")
{
  const auto a = fixtures::fig1();
  CHECK_THROWS_AS(build_hidden_spec(a, {SignalSet({"req"}), SignalSet(), 1, 0}), Error);
  CHECK_THROWS_AS(build_hidden_spec(a, {SignalSet({"req"}), SignalSet({"grant"}), 1, 3}), Error);
  CHECK_THROWS_AS(build_hidden_spec(a, {SignalSet({"req"}), SignalSet({"grant"}), 0, 0}), Error);
}

TEST_CASE("fig7: H loses the words whose first value differs from d0")
{
  const auto a = fixtures::fig7();
  const SynthesisInterface iface{SignalSet(), SignalSet(), 1, 0};
  const auto at = product_A_Tall(a, build_t_all(iface));
  const auto reading = register_reading(build_hidden_spec(a, iface), iface);
  const SignalSet s({"sync@t1"});
  const DataWord witness{s, {{1, 1, 0}}, {{0, 0, 1}}};
  CHECK(accepts_data_word(at, witness));
  CHECK_FALSE(accepts_data_word(reading, witness));
  // first i = d0 is kept
  const DataWord first_d0{s, {{0, 0, 0}}, {{0, 1, 0}}};
  CHECK(accepts_data_word(at, first_d0));
  CHECK(accepts_data_word(reading, first_d0));
}

TEST_CASE("register reading of H is contained in A (x) T_all")
{
  auto rng = make_rng(32);
  for (const auto* e : {&fixtures::synthesis_corpus()[0], &fixtures::synthesis_corpus()[6]}) {
    const auto a = e->spec();
    const auto iface = e->interface();
    const auto at = product_A_Tall(a, build_t_all(iface));
    const auto reading = register_reading(build_hidden_spec(a, iface), iface);
    for (int n = 0; n < 300; ++n) {
      const auto w = random_word(rng, at.signals, 3);
      if (accepts_data_word(reading, w))
        CHECK(accepts_data_word(at, w));
    }
  }
}

TEST_CASE("a transducer's violation shows up as a Boolean word rejected by H")
{
  const auto a = fixtures::fig1();
  const auto t = fixtures::never_grant();
  const auto mc = model_check(t, a);
  REQUIRE_FALSE(mc.holds);
  const auto& w = *mc.counterexample;
  const auto h = build_hidden_spec(a, kReqGrant);
  const auto& sig = h.automaton.signals;
  // replay T along the word, recording its Boolean letter over H's signals
  std::vector<DataValue> regs(t.num_registers(), t.init_value);
  int s = t.initial;
  std::vector<Letter> letters;
  for (std::size_t j = 0; j < w.length(); ++j) {
    const auto& l = w.at(j);
    const Letter in = l.signals & 1u;
    const auto gi = equality_bits(regs, l.in);
    const auto& mv = t.move(s, in, gi);
    Letter b = 0;
    b |= static_cast<Letter>(in) << sig.index_of("req");
    b |= static_cast<Letter>(gi & 1u) << sig.index_of("g_i@t1");
    b |= static_cast<Letter>(mv.outputs & 1u) << sig.index_of("grant");
    b |= static_cast<Letter>(mv.store & 1u) << sig.index_of("asgn@t1");
    letters.push_back(b);
    apply_store(regs, mv.store, l.in);
    s = mv.dst;
  }
  const std::vector<Letter> pre(letters.begin(), letters.begin() + w.prefix.size());
  const std::vector<Letter> loop(letters.begin() + w.prefix.size(), letters.end());
  CHECK_FALSE(accepts_boolean_word(h.automaton, pre, loop));
}

}  // TEST_SUITE
