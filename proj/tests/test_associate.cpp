#include <doctest.h>

#include "regsynth/associate.hpp"
#include "regsynth/fixtures.hpp"
#include "support.hpp"

using namespace regsynth;
using namespace testing;

namespace {

// Complete letters of A_B read from q to q2, by direct enumeration over A.
std::set<std::tuple<int, Letter, int>> associate_triples(const RegisterAutomaton& a)
{
  const auto p = a.signals.size();
  const auto k = a.num_registers();
  std::set<std::tuple<int, Letter, int>> out;
  for (const auto& t : a.transitions)
    for (Letter l = 0; l < (Letter{1} << p); ++l)
      for (std::uint64_t gi = 0; gi < (1u << k); ++gi)
        for (std::uint64_t go = 0; go < (1u << k); ++go)
          if (t.letter.matches(l) && t.guard.matches(gi, go))
            out.insert({t.src, l | gi << p | go << (p + k) | t.store << (p + 2 * k), t.dst});
  return out;
}

std::set<std::tuple<int, Letter, int>> boolean_triples(const BooleanAutomaton& b)
{
  std::set<std::tuple<int, Letter, int>> out;
  for (const auto& t : b.transitions)
    t.label.for_each_minterm(b.signals.size(), [&](Letter l) { out.insert({t.src, l, t.dst}); });
  return out;
}

}  // namespace

TEST_SUITE("associate") {

TEST_CASE("reserved signal names")
{
  CHECK(signal_names::g_in("r") == "g_i@r");
  CHECK(signal_names::g_out("r") == "g_o@r");
  CHECK(signal_names::assign("r") == "asgn@r");
  CHECK(signal_names::outreg(0) == "outreg@0");
  CHECK(signal_names::is_reserved("sync@t1"));
  CHECK_FALSE(signal_names::is_reserved("req"));
  CHECK_THROWS_AS(check_user_signals(SignalSet({"req", "g_i@x"})), Error);
  CHECK_NOTHROW(check_user_signals(SignalSet({"req", "grant"})));
}

TEST_CASE("output register code width")
{
  CHECK(outreg_width(1) == 0);
  CHECK(outreg_width(2) == 1);
  CHECK(outreg_width(3) == 2);
  CHECK(outreg_width(4) == 2);
  CHECK(outreg_width(5) == 3);
  CHECK(outreg_width(8) == 3);
  CHECK(outreg_width(9) == 4);
}

TEST_CASE("fig1 associate")
{
  const auto ab = to_boolean_automaton(fixtures::fig1());
  CHECK(ab.signals.names() == std::vector<std::string>{"req", "grant", "g_i@r", "g_o@r", "asgn@r"});
  CHECK(ab.num_states() == 2);
  CHECK(ab.accepting == std::vector<int>{1});
  CHECK(ab.mode == Acceptance::UniversalCoBuchi);
  // q0: 16 letters stay (no store), 8 go to q1 (req, store);
  // q1: 8 letters without store, 4 more with grant and o = r.
  CHECK(ab.explicit_transition_count() == 36);
}

TEST_CASE("associate letters match the register transitions")
{
  auto rng = make_rng(10);
  for (int n = 0; n < 100; ++n) {
    const auto a = random_ucw(rng);
    const auto ab = to_boolean_automaton(a);
    CHECK(boolean_triples(ab) == associate_triples(a));
    CHECK(ab.accepting == a.accepting);
    CHECK(ab.initial == a.initial);
  }
}

TEST_CASE("data steps correspond to associate steps")
{
  auto rng = make_rng(11);
  for (int n = 0; n < 100; ++n) {
    const auto a = random_ucw(rng);
    const auto ab = to_boolean_automaton(a);
    const auto p = a.signals.size();
    const auto k = a.num_registers();
    for (int s = 0; s < 20; ++s) {
      std::vector<DataValue> regs(k);
      for (auto& r : regs)
        r = static_cast<DataValue>(pick(rng, 3));
      const auto l = random_letter(rng, p, 3);
      const int q = static_cast<int>(pick(rng, a.num_states()));
      const auto gi = equality_bits(regs, l.in);
      const auto go = equality_bits(regs, l.out);
      for (const auto& t : a.transitions) {
        if (t.src != q || !t.letter.matches(l.signals) || !t.guard.matches(gi, go))
          continue;
        const Letter bl = l.signals | gi << p | go << (p + k) | t.store << (p + 2 * k);
        bool found = false;
        for (const auto& bt : ab.transitions)
          found = found || (bt.src == q && bt.dst == t.dst && bt.label.matches(bl));
        CHECK(found);
      }
    }
  }
}

TEST_CASE("transducer associate and lift are inverse")
{
  const auto t = fixtures::fig2();
  const auto tb = to_boolean_transducer(t);
  CHECK(tb.inputs.names() == std::vector<std::string>{"req", "g_i@r"});
  CHECK(tb.outputs.names() == std::vector<std::string>{"grant", "asgn@r"});
  const auto back = lift_transducer(tb, {t.inputs, t.outputs, t.registers, t.init_value});
  CHECK(back.table == t.table);
}

TEST_CASE("lifting random Mealy machines preserves behaviour")
{
  auto rng = make_rng(12);
  for (int n = 0; n < 40; ++n) {
    const std::size_t k = 1 + pick(rng, 3);
    const auto t = random_transducer(rng, SignalSet({"a"}), SignalSet({"b"}), k, 1 + pick(rng, 3));
    const auto tb = to_boolean_transducer(t);
    CHECK(tb.outputs.size() == 1 + k + outreg_width(k));
    const auto u = lift_transducer(tb, {t.inputs, t.outputs, t.registers, t.init_value});
    for (int s = 0; s < 10; ++s) {
      std::vector<TransducerInput> in;
      for (int j = 0; j < 6; ++j)
        in.push_back({rng() & 1u, static_cast<DataValue>(pick(rng, 3))});
      CHECK(run_transducer(u, in) == run_transducer(t, in));
    }
  }
}

TEST_CASE("lift rejects an output code outside the registers")
{
  BooleanTransducer tb;
  tb.inputs = SignalSet({"g_i@t1", "g_i@t2", "g_i@t3"});
  tb.outputs = SignalSet({"asgn@t1", "asgn@t2", "asgn@t3", "outreg@0", "outreg@1"});
  tb.states = {"m0"};
  tb.table.assign(8, MealyMove{0b11000, 0});  // code 3 names a fourth register
  CHECK_THROWS_AS(lift_transducer(tb, {SignalSet(), SignalSet(), {"t1", "t2", "t3"}, 0}), Error);
}

}  // TEST_SUITE
