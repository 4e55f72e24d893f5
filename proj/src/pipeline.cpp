#include "regsynth/pipeline.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "regsynth/format.hpp"

namespace regsynth {

namespace {

Cube shift(const Cube& c, std::size_t by) { return {c.care << by, c.value << by}; }

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b)
{
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Moves the cared bits of c to new positions; pos[j] < 0 drops bit j.
Cube remap(const Cube& c, const std::vector<int>& pos)
{
  Cube out;
  for (std::size_t j = 0; j < pos.size(); ++j)
    if (pos[j] >= 0 && !c.is_free(j))
      out = out.with(pos[j], c.is_true(j));
  return out;
}

}  // namespace

std::vector<std::string> SynthesisInterface::registers() const
{
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= k_t; ++j)
    out.push_back("t" + std::to_string(j));
  return out;
}

std::vector<std::string> SynthesisInterface::sync_signals() const
{
  std::vector<std::string> out;
  for (const auto& r : registers())
    out.push_back("sync@" + r);
  return out;
}

TransducerInterface SynthesisInterface::transducer_interface() const
{
  return {inputs, outputs, registers(), init_value};
}

RegisterAutomaton build_t_all(const SynthesisInterface& iface)
{
  if (iface.k_t == 0)
    throw Error("the transducer needs at least one register");
  const auto k = iface.k_t;
  RegisterAutomaton t;
  t.mode = Acceptance::UniversalCoBuchi;
  t.signals = SignalSet(concat(concat(iface.inputs.names(), iface.outputs.names()),
                               iface.sync_signals()));
  t.registers = iface.registers();
  t.init_value = iface.init_value;
  t.states = {"q0", "sink"};
  t.initial = 0;
  t.accepting = {1};
  const auto base = iface.inputs.size() + iface.outputs.size();
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
    const Cube letter = shift(Cube::exact(a, k), base);
    // o equals some register: split into disjoint cubes by the first such register.
    for (std::size_t j = 0; j < k; ++j) {
      Cube out{low_mask(j + 1), std::uint64_t{1} << j};
      t.transitions.push_back({0, letter, {Cube::any(), out}, a, 0});
    }
  }
  t.transitions.push_back({0, Cube::any(), {Cube::any(), Cube::exact(0, k)}, 0, 1});
  t.transitions.push_back({1, Cube::any(), {}, 0, 1});
  t.normalize();
  return t;
}

RegisterAutomaton product_A_Tall(const RegisterAutomaton& a, const RegisterAutomaton& tall)
{
  if (a.mode != Acceptance::UniversalCoBuchi || tall.mode != Acceptance::UniversalCoBuchi)
    throw Error("A (x) T_all expects universal co-Buchi factors");
  for (const auto& r : tall.registers)
    if (std::find(a.registers.begin(), a.registers.end(), r) != a.registers.end())
      throw Error("register name '" + r + "' is used by both the specification and T_all");
  if (a.init_value != tall.init_value)
    throw Error("the specification and the transducer must share the initial register value");
  std::vector<std::string> names = a.signals.names();
  for (const auto& n : tall.signals.names())
    if (!a.signals.contains(n))
      names.push_back(n);
  RegisterAutomaton p;
  p.mode = Acceptance::UniversalCoBuchi;
  p.signals = SignalSet(std::move(names));
  p.registers = concat(a.registers, tall.registers);
  p.init_value = a.init_value;
  const auto ka = a.num_registers();
  const auto nt = tall.num_states();
  const auto acc_a = a.accepting_mask();
  const auto acc_t = tall.accepting_mask();
  for (std::size_t qa = 0; qa < a.num_states(); ++qa)
    for (std::size_t qt = 0; qt < nt; ++qt) {
      p.states.push_back(a.states[qa] + "|" + tall.states[qt]);
      if (acc_a[qa] || acc_t[qt])
        p.accepting.push_back(static_cast<int>(qa * nt + qt));
    }
  p.initial = static_cast<int>(a.initial * nt + tall.initial);
  SignalMap ma(a.signals, p.signals), mt(tall.signals, p.signals);
  for (const auto& ta : a.transitions)
    for (const auto& tt : tall.transitions) {
      auto letter = ma.map_cube(ta.letter).intersect(mt.map_cube(tt.letter));
      if (!letter)
        continue;
      Guard g{*ta.guard.in.intersect(shift(tt.guard.in, ka)),
              *ta.guard.out.intersect(shift(tt.guard.out, ka))};
      p.transitions.push_back({static_cast<int>(ta.src * nt + tt.src), *letter, g,
                               ta.store | tt.store << ka,
                               static_cast<int>(ta.dst * nt + tt.dst)});
    }
  p.normalize();
  return p;
}

Atw build_atw(const RegisterAutomaton& at, const SynthesisInterface& iface)
{
  const auto kt = iface.k_t;
  const auto k = at.num_registers();
  if (kt == 0 || kt > k)
    throw Error("build_atw: the automaton lacks the transducer registers");
  const auto ka = k - kt;
  const auto ab = to_boolean_automaton(at);
  const auto v = build_verifier(at.registers);
  std::vector<std::pair<int, int>> origin;
  const auto abv = product_with_verifier(ab, v, &origin);

  Atw atw;
  atw.registers = at.registers;
  atw.inputs = iface.inputs;
  atw.outputs = iface.outputs;
  atw.k_a = ka;
  atw.k_t = kt;
  const std::vector<std::string> reg_a(at.registers.begin(), at.registers.begin() + ka);
  const std::vector<std::string> reg_t(at.registers.begin() + ka, at.registers.end());
  const auto w = outreg_width(kt);

  std::vector<std::string> names = concat(iface.inputs.names(), iface.outputs.names());
  for (const auto& r : at.registers)
    names.push_back(signal_names::g_in(r));
  for (const auto& r : reg_a)
    names.push_back(signal_names::g_out(r));
  const int code_base = static_cast<int>(names.size());
  for (std::size_t b = 0; b < w; ++b)
    names.push_back(signal_names::outreg(b));
  for (const auto& r : at.registers)
    names.push_back(signal_names::assign(r));
  SignalSet sig(std::move(names));

  // Old bit -> new bit; sync and g_o^T bits are handled separately.
  std::vector<int> pos(ab.signals.size(), -1);
  for (std::size_t j = 0; j < ab.signals.size(); ++j)
    pos[j] = sig.index_of(ab.signals[j]);
  std::vector<int> sync_bit(kt), assign_bit(kt), g_out_bit(kt);
  for (std::size_t j = 0; j < kt; ++j) {
    sync_bit[j] = ab.signals.index_of("sync@" + reg_t[j]);
    assign_bit[j] = ab.signals.index_of(signal_names::assign(reg_t[j]));
    g_out_bit[j] = ab.signals.index_of(signal_names::g_out(reg_t[j]));
    if (sync_bit[j] < 0)
      throw Error("build_atw: missing store-mirror signal for register " + reg_t[j]);
  }

  atw.automaton.mode = abv.mode;
  atw.automaton.signals = sig;
  atw.automaton.states = abv.states;
  atw.automaton.initial = abv.initial;
  atw.automaton.accepting = abv.accepting;
  for (const auto& [q, pi] : origin) {
    atw.source_state.push_back(q);
    atw.partition.push_back(v.partitions[pi]);
  }
  for (const auto& t : abv.transitions) {
    Cube c = t.label;
    bool conflict = false;
    for (std::size_t j = 0; j < kt && !conflict; ++j) {
      if (c.is_free(sync_bit[j]))
        continue;
      const bool s = c.is_true(sync_bit[j]);
      if (!c.is_free(assign_bit[j]) && c.is_true(assign_bit[j]) != s)
        conflict = true;
      c = c.with(assign_bit[j], s);
    }
    if (conflict)
      continue;
    const Cube base = remap(c, pos);
    bool any = false;
    for (std::size_t j = 0; j < kt; ++j) {
      if (c.is_free(g_out_bit[j]))
        throw Error("build_atw: output comparison left unconstrained by the verifier");
      if (!c.is_true(g_out_bit[j]))
        continue;
      any = true;
      Cube out = base;
      for (std::size_t b = 0; b < w; ++b)
        out = out.with(code_base + b, test_bit(j, b));
      atw.automaton.transitions.push_back({t.src, out, t.dst});
    }
    if (!any) {
      ++atw.dropped;
      if (atw.dropped_log.size() < 16)
        atw.dropped_log.push_back("state " + abv.states[t.src] + ", letter " +
                                  format_letter(t.label, abv.signals) +
                                  ": o differs from every transducer register");
    }
  }
  atw.automaton.normalize();
  return atw;
}

HiddenSpec hide(const Atw& atw)
{
  const auto& a = atw.automaton;
  const std::vector<std::string> reg_t(atw.registers.begin() + atw.k_a, atw.registers.end());
  const auto w = outreg_width(atw.k_t);
  std::vector<std::string> in = atw.inputs.names(), out = atw.outputs.names();
  for (const auto& r : reg_t)
    in.push_back(signal_names::g_in(r));
  for (std::size_t b = 0; b < w; ++b)
    out.push_back(signal_names::outreg(b));
  for (const auto& r : reg_t)
    out.push_back(signal_names::assign(r));

  HiddenSpec h;
  h.registers = atw.registers;
  h.k_a = atw.k_a;
  h.k_t = atw.k_t;
  h.inputs = SignalSet(in);
  h.outputs = SignalSet(out);
  h.automaton.mode = a.mode;
  h.automaton.signals = SignalSet(concat(in, out));
  std::vector<int> pos(a.signals.size());
  for (std::size_t j = 0; j < a.signals.size(); ++j)
    pos[j] = h.automaton.signals.index_of(a.signals[j]);

  const auto outgoing = a.outgoing();
  const auto acc = a.accepting_mask();
  std::vector<int> renumber(a.states.size(), -1);
  std::deque<int> queue;
  auto intern = [&](int q) {
    if (renumber[q] < 0) {
      renumber[q] = static_cast<int>(h.atw_state.size());
      h.atw_state.push_back(q);
      h.partition.push_back(atw.partition[q]);
      h.automaton.states.push_back(a.states[q]);
      if (acc[q])
        h.automaton.accepting.push_back(renumber[q]);
      queue.push_back(q);
    }
    return renumber[q];
  };
  h.automaton.initial = intern(a.initial);
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (int j : outgoing[q]) {
      const auto& t = a.transitions[j];
      const int src = renumber[q];
      const int dst = intern(t.dst);
      h.automaton.transitions.push_back({src, remap(t.label, pos), dst});
    }
  }
  h.automaton.normalize();
  return h;
}

void check_interface(const RegisterAutomaton& a, const SynthesisInterface& iface)
{
  if (a.mode != Acceptance::UniversalCoBuchi)
    throw Error("the specification must be a universal co-Buchi register automaton");
  if (iface.k_t == 0)
    throw Error("the transducer needs at least one register (k_T >= 1)");
  check_user_signals(a.signals);
  check_user_signals(iface.inputs);
  check_user_signals(iface.outputs);
  std::set<std::string> io;
  for (const auto* s : {&iface.inputs, &iface.outputs})
    for (const auto& n : s->names())
      if (!io.insert(n).second)
        throw Error("signal '" + n + "' is declared as both input and output");
  std::set<std::string> spec(a.signals.names().begin(), a.signals.names().end());
  if (io != spec)
    throw Error("interface signals {" + join({io.begin(), io.end()}, ", ") +
                "} differ from the specification signals {" +
                join({spec.begin(), spec.end()}, ", ") + "}");
  if (a.init_value != iface.init_value)
    throw Error("the specification and the transducer must share the initial register value");
  for (const auto& r : iface.registers())
    if (std::find(a.registers.begin(), a.registers.end(), r) != a.registers.end())
      throw Error("specification register '" + r + "' clashes with the transducer registers");
}

PipelineStages run_pipeline(const RegisterAutomaton& a, const SynthesisInterface& iface)
{
  check_interface(a, iface);
  PipelineStages s;
  s.ab = to_boolean_automaton(a);
  s.abv = product_with_verifier(s.ab, build_verifier(a.registers));
  s.tall = build_t_all(iface);
  s.at = product_A_Tall(a, s.tall);
  s.v = build_verifier(s.at.registers);
  s.atw = build_atw(s.at, iface);
  s.h = hide(s.atw);
  return s;
}

HiddenSpec build_hidden_spec(const RegisterAutomaton& a, const SynthesisInterface& iface)
{
  check_interface(a, iface);
  return hide(build_atw(product_A_Tall(a, build_t_all(iface)), iface));
}

std::uint64_t bell_number(std::size_t n)
{
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row)
      next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

std::uint64_t hidden_state_bound(const RegisterAutomaton& a, std::size_t k_t)
{
  return a.num_states() * 2 * bell_number(a.num_registers() + k_t);
}

RegisterAutomaton register_reading(const HiddenSpec& h, const SynthesisInterface& iface)
{
  const auto kt = h.k_t;
  const auto w = outreg_width(kt);
  const auto& sig = h.automaton.signals;
  RegisterAutomaton r;
  r.mode = h.automaton.mode;
  r.signals = SignalSet(concat(concat(iface.inputs.names(), iface.outputs.names()),
                               iface.sync_signals()));
  r.registers = iface.registers();
  r.init_value = iface.init_value;
  r.states = h.automaton.states;
  r.initial = h.automaton.initial;
  r.accepting = h.automaton.accepting;
  const auto nio = iface.inputs.size() + iface.outputs.size();
  std::vector<int> io_pos(nio), g_pos(kt), code_pos(w), asgn_pos(kt);
  for (std::size_t j = 0; j < nio; ++j)
    io_pos[j] = sig.index_of(r.signals[j]);
  for (std::size_t j = 0; j < kt; ++j) {
    g_pos[j] = sig.index_of(signal_names::g_in(r.registers[j]));
    asgn_pos[j] = sig.index_of(signal_names::assign(r.registers[j]));
  }
  for (std::size_t b = 0; b < w; ++b)
    code_pos[b] = sig.index_of(signal_names::outreg(b));
  auto sub = [](const Cube& c, const std::vector<int>& at) {
    Cube out;
    for (std::size_t j = 0; j < at.size(); ++j)
      if (!c.is_free(at[j]))
        out = out.with(j, c.is_true(at[j]));
    return out;
  };
  for (const auto& t : h.automaton.transitions) {
    const Cube io = sub(t.label, io_pos);
    const Cube gin = sub(t.label, g_pos);
    sub(t.label, code_pos).for_each_minterm(w, [&](std::uint64_t code) {
      if (code >= kt)
        return;
      const Cube out = Cube{}.with(code, true);
      sub(t.label, asgn_pos).for_each_minterm(kt, [&](std::uint64_t a) {
        Cube letter = io;
        letter.care |= low_mask(kt) << nio;
        letter.value |= a << nio;
        r.transitions.push_back({t.src, letter, {gin, out}, a, t.dst});
      });
    });
  }
  // an output outside every transducer register is T_all's sink
  std::string sink = "sink";
  while (std::find(r.states.begin(), r.states.end(), sink) != r.states.end())
    sink += "'";
  const int s = static_cast<int>(r.states.size());
  r.states.push_back(sink);
  r.accepting.push_back(s);
  Cube none;
  none.care = low_mask(kt);
  for (int q = 0; q < s; ++q)
    r.transitions.push_back({q, Cube{}, {Cube{}, none}, 0, s});
  r.transitions.push_back({s, Cube{}, {Cube{}, Cube{}}, 0, s});
  r.normalize();
  return r;
}

}  // namespace regsynth
