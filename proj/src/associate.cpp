#include "regsynth/associate.hpp"

#include <deque>

namespace regsynth {

namespace signal_names {

std::string g_in(const std::string& reg) { return "g_i@" + reg; }
std::string g_out(const std::string& reg) { return "g_o@" + reg; }
std::string assign(const std::string& reg) { return "asgn@" + reg; }
std::string outreg(std::size_t bit) { return "outreg@" + std::to_string(bit); }

bool is_reserved(const std::string& name)
{
  for (const char* prefix : {"g_i@", "g_o@", "asgn@", "outreg@", "sync@"})
    if (name.rfind(prefix, 0) == 0)
      return true;
  return false;
}

}  // namespace signal_names

std::size_t outreg_width(std::size_t k)
{
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < k)
    ++bits;
  return bits;
}

void check_user_signals(const SignalSet& signals)
{
  for (const auto& n : signals.names())
    if (signal_names::is_reserved(n))
      throw Error("signal name '" + n + "' uses a reserved prefix");
}

BooleanAutomaton to_boolean_automaton(const RegisterAutomaton& a)
{
  const auto p = a.signals.size();
  const auto k = a.num_registers();
  if (p + 3 * k > kMaxSignals)
    throw Error("the Boolean associate would need more than 64 signals");
  std::vector<std::string> names = a.signals.names();
  for (const auto& r : a.registers)
    names.push_back(signal_names::g_in(r));
  for (const auto& r : a.registers)
    names.push_back(signal_names::g_out(r));
  for (const auto& r : a.registers)
    names.push_back(signal_names::assign(r));

  BooleanAutomaton b;
  b.mode = a.mode;
  b.signals = SignalSet(std::move(names));
  b.states = a.states;
  b.initial = a.initial;
  b.accepting = a.accepting;
  for (const auto& t : a.transitions) {
    Cube label = t.letter;
    label.care |= t.guard.in.care << p | t.guard.out.care << (p + k) | low_mask(k) << (p + 2 * k);
    label.value |= t.guard.in.value << p | t.guard.out.value << (p + k) | t.store << (p + 2 * k);
    b.transitions.push_back({t.src, label, t.dst});
  }
  b.normalize();
  return b;
}

BooleanTransducer to_boolean_transducer(const RegisterTransducer& t)
{
  const auto ni = t.inputs.size();
  const auto no = t.outputs.size();
  const auto k = t.num_registers();
  const auto w = outreg_width(k);
  std::vector<std::string> in = t.inputs.names();
  for (const auto& r : t.registers)
    in.push_back(signal_names::g_in(r));
  std::vector<std::string> out = t.outputs.names();
  for (const auto& r : t.registers)
    out.push_back(signal_names::assign(r));
  for (std::size_t b = 0; b < w; ++b)
    out.push_back(signal_names::outreg(b));

  BooleanTransducer tb;
  tb.inputs = SignalSet(std::move(in));
  tb.outputs = SignalSet(std::move(out));
  tb.states = t.states;
  tb.initial = t.initial;
  tb.table.resize(t.states.size() << (ni + k));
  for (std::size_t s = 0; s < t.states.size(); ++s)
    for (Letter l = 0; l < (Letter{1} << ni); ++l)
      for (std::uint64_t g = 0; g < (std::uint64_t{1} << k); ++g) {
        const auto& m = t.move(static_cast<int>(s), l, g);
        const Letter outputs = m.outputs | m.store << no |
                               static_cast<Letter>(m.out_reg) << (no + k);
        tb.table[(s << (ni + k)) | l | g << ni] = MealyMove{outputs, m.dst};
      }
  return tb;
}

RegisterTransducer lift_transducer(const BooleanTransducer& tb, const TransducerInterface& iface)
{
  const auto ni = iface.inputs.size();
  const auto no = iface.outputs.size();
  const auto k = iface.registers.size();
  const auto w = outreg_width(k);
  if (k == 0)
    throw Error("a register transducer needs at least one register");
  if (tb.inputs.size() != ni + k || tb.outputs.size() != no + k + w)
    throw Error("Boolean transducer signals do not match the register-transducer interface");

  // Positions of the interface signals inside tb's alphabet.
  std::vector<int> in_pos, out_pos;
  auto find = [](const SignalSet& s, const std::string& n) {
    const int j = s.index_of(n);
    if (j < 0)
      throw Error("Boolean transducer lacks signal '" + n + "'");
    return j;
  };
  for (const auto& n : iface.inputs.names())
    in_pos.push_back(find(tb.inputs, n));
  for (const auto& r : iface.registers)
    in_pos.push_back(find(tb.inputs, signal_names::g_in(r)));
  for (const auto& n : iface.outputs.names())
    out_pos.push_back(find(tb.outputs, n));
  for (const auto& r : iface.registers)
    out_pos.push_back(find(tb.outputs, signal_names::assign(r)));
  for (std::size_t b = 0; b < w; ++b)
    out_pos.push_back(find(tb.outputs, signal_names::outreg(b)));

  std::vector<int> renumber(tb.states.size(), -1);
  std::vector<int> order;
  std::deque<int> queue{tb.initial};
  renumber[tb.initial] = 0;
  order.push_back(tb.initial);
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    for (Letter l = 0; l < (Letter{1} << tb.inputs.size()); ++l) {
      const int d = tb.move(s, l).dst;
      if (renumber[d] < 0) {
        renumber[d] = static_cast<int>(order.size());
        order.push_back(d);
        queue.push_back(d);
      }
    }
  }

  RegisterTransducer t;
  t.inputs = iface.inputs;
  t.outputs = iface.outputs;
  t.registers = iface.registers;
  t.init_value = iface.init_value;
  for (int s : order)
    t.states.push_back(tb.states[s]);
  t.initial = 0;
  t.reset_table();
  for (std::size_t s = 0; s < order.size(); ++s)
    for (Letter l = 0; l < (Letter{1} << ni); ++l)
      for (std::uint64_t g = 0; g < (std::uint64_t{1} << k); ++g) {
        Letter in = 0;
        for (std::size_t j = 0; j < ni; ++j)
          in |= static_cast<Letter>(test_bit(l, j)) << in_pos[j];
        for (std::size_t j = 0; j < k; ++j)
          in |= static_cast<Letter>(test_bit(g, j)) << in_pos[ni + j];
        const auto& m = tb.move(order[s], in);
        auto out_bit = [&](std::size_t j) { return test_bit(m.outputs, out_pos[j]); };
        TransducerMove mv;
        for (std::size_t j = 0; j < no; ++j)
          mv.outputs |= static_cast<Letter>(out_bit(j)) << j;
        for (std::size_t j = 0; j < k; ++j)
          mv.store |= static_cast<std::uint64_t>(out_bit(no + j)) << j;
        std::size_t code = 0;
        for (std::size_t b = 0; b < w; ++b)
          code |= static_cast<std::size_t>(out_bit(no + k + b)) << b;
        if (code >= k)
          throw Error("Boolean transducer emits output-register code " + std::to_string(code) +
                      " but the interface has only " + std::to_string(k) + " registers");
        mv.out_reg = static_cast<int>(code);
        mv.dst = renumber[m.dst];
        t.table[t.index(static_cast<int>(s), l, g)] = mv;
      }
  return t;
}

}  // namespace regsynth
