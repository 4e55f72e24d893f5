#include "regsynth/synthesis.hpp"

#include <deque>
#include <map>

#include "regsynth/modelcheck.hpp"

namespace regsynth {

namespace {

bool dominates(const CounterMap& big, const CounterMap& small)
{
  for (std::size_t q = 0; q < big.size(); ++q)
    if (big[q] < small[q])
      return false;
  return true;
}

}  // namespace

SafetyGame ucw_to_safety_game(const BooleanAutomaton& a, std::size_t bound,
                              const SignalSet& inputs, const SignalSet& outputs,
                              const std::function<bool(Letter)>& allowed_output)
{
  if (a.mode != Acceptance::UniversalCoBuchi)
    throw Error("the safety game expects a universal co-Buchi automaton");
  if (inputs.size() + outputs.size() != a.signals.size())
    throw Error("inputs and outputs must partition the automaton's signals");
  if (a.signals.size() > 24)
    throw Error("too many signals for explicit game construction");
  if (bound > 100)
    throw Error("counter bound must be at most 100");
  SignalMap in_map(inputs, a.signals), out_map(outputs, a.signals);

  SafetyGame g;
  g.inputs = inputs;
  g.outputs = outputs;
  g.bound = bound;
  const auto nq = a.num_states();
  const auto ni = g.num_inputs(), no = g.num_outputs();
  const auto acc = a.accepting_mask();
  const auto outgoing = a.outgoing();
  const int k = static_cast<int>(bound);

  std::vector<Letter> spread_in(ni), spread_out(no);
  for (Letter l = 0; l < ni; ++l)
    spread_in[l] = in_map.map_bits(l);
  for (Letter l = 0; l < no; ++l)
    spread_out[l] = out_map.map_bits(l);

  std::map<CounterMap, int> index;
  auto intern = [&](CounterMap&& m) {
    auto [it, fresh] = index.try_emplace(m, static_cast<int>(g.positions.size()));
    if (fresh)
      g.positions.push_back(std::move(m));
    return it->second;
  };

  CounterMap init(nq, -1);
  init[a.initial] = acc[a.initial] ? 1 : 0;
  if (init[a.initial] > k)
    return g;
  g.initial = intern(std::move(init));
  for (std::size_t p = 0; p < g.positions.size(); ++p) {
    for (Letter in = 0; in < ni; ++in)
      for (Letter out = 0; out < no; ++out) {
        if (allowed_output && !allowed_output(out)) {
          g.moves.push_back(-1);
          continue;
        }
        const Letter full = spread_in[in] | spread_out[out];
        const CounterMap& cur = g.positions[p];
        CounterMap next(nq, -1);
        bool safe = true;
        for (std::size_t q = 0; q < nq && safe; ++q) {
          if (cur[q] < 0)
            continue;
          for (int j : outgoing[q]) {
            const auto& t = a.transitions[j];
            if (!t.label.matches(full))
              continue;
            const int v = cur[q] + (acc[t.dst] ? 1 : 0);
            if (v > k) {
              safe = false;
              break;
            }
            next[t.dst] = std::max<std::int8_t>(next[t.dst], static_cast<std::int8_t>(v));
          }
        }
        g.moves.push_back(safe ? intern(std::move(next)) : -1);
      }
  }
  return g;
}

SafetyGame ucw_to_safety_game(const HiddenSpec& h, std::size_t bound)
{
  const auto kt = h.k_t;
  std::vector<int> code_bits;
  for (std::size_t b = 0; b < outreg_width(kt); ++b)
    code_bits.push_back(h.outputs.index_of(signal_names::outreg(b)));
  auto allowed = [code_bits, kt](Letter out) {
    std::size_t code = 0;
    for (std::size_t b = 0; b < code_bits.size(); ++b)
      code |= static_cast<std::size_t>(test_bit(out, code_bits[b])) << b;
    return code < kt;
  };
  return ucw_to_safety_game(h.automaton, bound, h.inputs, h.outputs, allowed);
}

SafetySolution solve_safety(const SafetyGame& g)
{
  const auto np = g.positions.size();
  const auto ni = g.num_inputs(), no = g.num_outputs();
  SafetySolution s;
  s.winning.assign(np, true);
  s.strategy.assign(np * ni, 0);

  // count[p * ni + in] = outputs leading to a position not yet known losing.
  std::vector<std::uint32_t> count(np * ni, 0);
  std::vector<std::vector<std::uint32_t>> preds(np);
  std::deque<int> lost;
  for (std::size_t p = 0; p < np; ++p)
    for (Letter in = 0; in < ni; ++in)
      for (Letter out = 0; out < no; ++out) {
        const int d = g.successor(static_cast<int>(p), in, out);
        if (d >= 0) {
          ++count[p * ni + in];
          preds[d].push_back(static_cast<std::uint32_t>(p * ni + in));
        }
      }
  for (std::size_t p = 0; p < np; ++p)
    for (Letter in = 0; in < ni; ++in)
      if (count[p * ni + in] == 0 && s.winning[p]) {
        s.winning[p] = false;
        lost.push_back(static_cast<int>(p));
      }
  while (!lost.empty()) {
    const int d = lost.front();
    lost.pop_front();
    for (auto slot : preds[d]) {
      const auto p = slot / ni;
      if (--count[slot] == 0 && s.winning[p]) {
        s.winning[p] = false;
        lost.push_back(static_cast<int>(p));
      }
    }
  }
  for (std::size_t p = 0; p < np; ++p) {
    if (!s.winning[p])
      continue;
    for (Letter in = 0; in < ni; ++in)
      for (Letter out = 0; out < no; ++out) {
        const int d = g.successor(static_cast<int>(p), in, out);
        if (d >= 0 && s.winning[d]) {
          s.strategy[p * ni + in] = out;
          break;
        }
      }
  }
  s.realizable = g.initial >= 0 && s.winning[g.initial];
  return s;
}

BooleanTransducer extract_mealy(const SafetyGame& g, const SafetySolution& s)
{
  if (!s.realizable)
    throw Error("extract_mealy: the strategy does not win from the initial position");
  const auto ni = g.num_inputs();
  BooleanTransducer m;
  m.inputs = g.inputs;
  m.outputs = g.outputs;
  m.initial = 0;
  std::vector<int> position{g.initial};
  std::map<int, int> state_of{{g.initial, 0}};
  for (std::size_t j = 0; j < position.size(); ++j) {
    const int p = position[j];
    for (Letter in = 0; in < ni; ++in) {
      const Letter out = s.strategy[static_cast<std::size_t>(p) * ni + in];
      const int d = g.successor(p, in, out);
      if (d < 0 || !s.winning[d])
        throw Error("extract_mealy: strategy leaves the winning region");
      int dst = -1;
      if (auto it = state_of.find(d); it != state_of.end()) {
        dst = it->second;
      } else {
        for (std::size_t r = 0; r < position.size() && dst < 0; ++r)
          if (dominates(g.positions[position[r]], g.positions[d]))
            dst = static_cast<int>(r);
        if (dst < 0) {
          dst = static_cast<int>(position.size());
          position.push_back(d);
        }
        state_of.emplace(d, dst);
      }
      m.table.push_back({out, dst});
    }
  }
  for (std::size_t j = 0; j < position.size(); ++j)
    m.states.push_back("m" + std::to_string(j));
  return m;
}

SynthesisResult bounded_synthesis(const RegisterAutomaton& a, const HiddenSpec& h,
                                  const SynthesisInterface& iface, std::size_t max_bound)
{
  SynthesisResult r;
  r.hidden_states = h.automaton.num_states();
  for (std::size_t k = 0; k <= max_bound; ++k) {
    r.bound = k;
    const auto game = ucw_to_safety_game(h, k);
    r.game_positions = game.positions.size();
    const auto sol = solve_safety(game);
    if (!sol.realizable)
      continue;
    const auto mealy = extract_mealy(game, sol);
    r.mealy_states = mealy.num_states();
    auto t = lift_transducer(mealy, iface.transducer_interface());
    if (!model_check(t, a).holds)
      throw Error("internal error: the synthesized transducer violates the specification");
    r.status = SynthesisStatus::Realized;
    r.transducer = std::move(t);
    return r;
  }
  return r;
}

SynthesisResult bounded_synthesis(const RegisterAutomaton& a, const SynthesisInterface& iface,
                                  std::size_t max_bound)
{
  return bounded_synthesis(a, build_hidden_spec(a, iface), iface, max_bound);
}

}  // namespace regsynth
