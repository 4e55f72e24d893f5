#include "regsynth/guessing.hpp"

#include <deque>
#include <map>
#include <set>

#include "regsynth/format.hpp"
#include "regsynth/lasso.hpp"

namespace regsynth {

std::vector<Diagnostic> validate_guessing(const GuessingAutomaton& a)
{
  std::vector<Diagnostic> out;
  const auto n = static_cast<int>(a.states.size());
  const auto k = static_cast<int>(a.registers.size());
  auto in_range = [](int x, int bound) { return x >= 0 && x < bound; };
  if (std::set<std::string>(a.states.begin(), a.states.end()).size() != a.states.size())
    out.push_back({"state names are unique", "states"});
  if (std::set<std::string>(a.registers.begin(), a.registers.end()).size() != a.registers.size())
    out.push_back({"register names are unique", "registers"});
  if (!in_range(a.initial, n))
    out.push_back({"initial state is a state", "initial"});
  for (int q : a.accepting)
    if (!in_range(q, n))
      out.push_back({"accepting states are states", "accepting #" + std::to_string(q)});
  for (std::size_t j = 0; j < a.transitions.size(); ++j) {
    const auto& t = a.transitions[j];
    const auto where = "transition #" + std::to_string(j + 1);
    if (!in_range(t.src, n) || !in_range(t.dst, n))
      out.push_back({"transition source and target are states", where});
    if ((t.guard.in.care | t.guard.out.care) & ~low_mask(k))
      out.push_back({"guard atoms refer to declared registers", where});
    if (t.letter.care & ~low_mask(a.signals.size()))
      out.push_back({"letters use declared signals only", where});
  }
  for (auto [x, y] : a.inequalities) {
    if (!in_range(x, k) || !in_range(y, k))
      out.push_back({"inequalities refer to declared registers", "inequalities"});
    else if (x == y)
      out.push_back({"the inequality set is irreflexive", a.registers[x] + " != " + a.registers[y]});
  }
  return out;
}

bool accepts_guessing(const GuessingAutomaton& a, const DataWord& word)
{
  if (auto d = validate_guessing(a); !d.empty())
    throw Error("invalid guessing automaton: " + d.front().invariant + " (" + d.front().location +
                ")");
  if (word.loop.empty())
    throw Error("a lasso word needs a non-empty loop");
  const DataWord w = remap_word(word, a.signals);
  const auto k = a.num_registers();
  std::set<DataValue> seen;
  for (std::size_t p = 0; p < w.length(); ++p) {
    seen.insert(w.at(p).in);
    seen.insert(w.at(p).out);
  }
  std::vector<DataValue> candidates(seen.begin(), seen.end());
  const DataValue top = seen.empty() ? 0 : *seen.rbegin() + 1;
  for (std::size_t j = 0; j < k; ++j)
    candidates.push_back(top + static_cast<DataValue>(j));

  std::vector<std::vector<int>> out(a.states.size());
  for (std::size_t j = 0; j < a.transitions.size(); ++j)
    out[a.transitions[j].src].push_back(static_cast<int>(j));
  std::vector<bool> acc(a.states.size(), false);
  for (int q : a.accepting)
    acc[q] = true;

  using Node = std::pair<int, std::size_t>;
  struct NodeHash {
    std::size_t operator()(const Node& n) const { return n.first * 1000003u ^ n.second; }
  };
  std::vector<std::size_t> digit(k, 0);
  std::vector<DataValue> regs(k);
  while (true) {
    for (std::size_t j = 0; j < k; ++j)
      regs[j] = candidates[digit[j]];
    bool ok = true;
    for (auto [x, y] : a.inequalities)
      ok = ok && regs[x] != regs[y];
    if (ok) {
      auto successors = [&](const Node& n) {
        std::vector<std::pair<char, Node>> next;
        const auto& l = w.at(n.second);
        const auto in_eq = equality_bits(regs, l.in), out_eq = equality_bits(regs, l.out);
        for (int j : out[n.first]) {
          const auto& t = a.transitions[j];
          if (t.letter.matches(l.signals) && t.guard.matches(in_eq, out_eq))
            next.emplace_back(0, Node{t.dst, w.next(n.second)});
        }
        return next;
      };
      if (find_accepting_lasso<Node, char, NodeHash>(
              Node{a.initial, 0}, successors,
              [&](const Node& n) { return static_cast<bool>(acc[n.first]); }))
        return true;
    }
    std::size_t j = 0;
    while (j < k && ++digit[j] == candidates.size())
      digit[j++] = 0;
    if (j == k)
      break;
  }
  return false;
}

Conversion2Result conversion2(const GuessingAutomaton& a, DataValue init_value)
{
  if (auto d = validate_guessing(a); !d.empty())
    throw Error("invalid guessing automaton: " + d.front().invariant + " (" + d.front().location +
                ")");
  const auto k = a.num_registers();
  std::vector<std::uint64_t> differs(k, 0);  // E, symmetric
  for (auto [x, y] : a.inequalities) {
    differs[x] |= std::uint64_t{1} << y;
    differs[y] |= std::uint64_t{1} << x;
  }
  std::vector<std::vector<int>> out(a.states.size());
  for (std::size_t j = 0; j < a.transitions.size(); ++j)
    out[a.transitions[j].src].push_back(static_cast<int>(j));
  std::vector<bool> acc(a.states.size(), false);
  for (int q : a.accepting)
    acc[q] = true;

  RegisterAutomaton r;
  r.mode = Acceptance::NondeterministicBuchi;
  r.signals = a.signals;
  r.registers = a.registers;
  r.init_value = init_value;
  std::map<std::pair<int, std::uint64_t>, int> index;
  std::vector<std::pair<int, std::uint64_t>> states;
  std::deque<int> queue;
  auto intern = [&](int q, std::uint64_t b) {
    auto [it, fresh] = index.try_emplace({q, b}, static_cast<int>(states.size()));
    if (fresh) {
      states.emplace_back(q, b);
      r.states.push_back(k == 0 ? a.states[q] : a.states[q] + "[" + bit_string(b, k) + "]");
      if (acc[q])
        r.accepting.push_back(it->second);
      queue.push_back(it->second);
    }
    return it->second;
  };
  r.initial = intern(a.initial, 0);
  while (!queue.empty()) {
    const int src = queue.front();
    queue.pop_front();
    const auto [q, b] = states[src];
    const auto uninit = ~b & low_mask(k);
    for (int j : out[q]) {
      const auto& t = a.transitions[j];
      const auto& gi = t.guard.in;
      const auto& go = t.guard.out;
      const auto first_eq = gi.care & gi.value & uninit;
      bool contradictory = false;
      for (std::size_t m = 0; m < k; ++m)
        if (test_bit(first_eq, m) && (differs[m] & first_eq))
          contradictory = true;
      if (contradictory)
        continue;
      if ((gi.care & ~gi.value & uninit) || (go.care & uninit)) {
        std::string reason;
        for (std::size_t m = 0; m < k && reason.empty(); ++m) {
          if (!test_bit(uninit, m))
            continue;
          if (gi.is_false(m))
            reason = "i != " + a.registers[m];
          else if (go.is_true(m))
            reason = "o = " + a.registers[m];
          else if (go.is_false(m))
            reason = "o != " + a.registers[m];
        }
        return Abort{"the guard reads uninitialized register via '" + reason + "'", q, b, t};
      }
      Guard g{{gi.care & b, gi.value & b}, go};
      bool conflict = false;
      for (std::size_t m = 0; m < k; ++m) {
        if (!test_bit(first_eq, m))
          continue;
        for (std::size_t x = 0; x < k; ++x) {
          if (!test_bit(differs[m] & b, x))
            continue;
          if (g.in.is_true(x))
            conflict = true;
          g.in = g.in.with(x, false);
        }
      }
      if (conflict)
        continue;
      r.transitions.push_back({src, t.letter, g, first_eq, intern(t.dst, b | first_eq)});
    }
  }
  r.normalize();
  return r;
}

std::string describe(const Abort& abort, const GuessingAutomaton& a)
{
  std::vector<std::string> init;
  for (std::size_t m = 0; m < a.num_registers(); ++m)
    if (test_bit(abort.initialized, m))
      init.push_back(a.registers[m]);
  const auto& t = abort.transition;
  std::vector<std::string> atoms;
  for (std::size_t m = 0; m < a.num_registers(); ++m) {
    if (!t.guard.in.is_free(m))
      atoms.push_back(std::string("i ") + (t.guard.in.is_true(m) ? "=" : "!=") + " " +
                      a.registers[m]);
    if (!t.guard.out.is_free(m))
      atoms.push_back(std::string("o ") + (t.guard.out.is_true(m) ? "=" : "!=") + " " +
                      a.registers[m]);
  }
  return "conversion-2 aborted at state " + a.states.at(abort.source_state) +
         " (initialized registers: " + (init.empty() ? "none" : join(init, ", ")) +
         ") on the transition to " + a.states.at(t.dst) + " with letter " +
         format_letter(t.letter, a.signals) + " and guard " +
         (atoms.empty() ? "true" : join(atoms, " & ")) + ": " + abort.reason;
}

}  // namespace regsynth
