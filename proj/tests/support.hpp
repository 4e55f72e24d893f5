#pragma once

#include <cstdint>
#include <algorithm>
#include <compare>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "regsynth/automata.hpp"
#include "regsynth/format.hpp"
#include "regsynth/semantics.hpp"

namespace testing {

using namespace regsynth;

/// REGSYNTH_SEED overrides the default seed.
inline std::uint64_t base_seed()
{
  if (const char* s = std::getenv("REGSYNTH_SEED"))
    return std::strtoull(s, nullptr, 10);
  return 20240917;
}

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(base_seed() ^ (salt * 0x9e3779b97f4a7c15ull)); }

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }
inline bool coin(std::mt19937_64& rng, int percent = 50) { return static_cast<int>(rng() % 100) < percent; }

/// Random cube over `width` bits; each bit is cared for with the given odds.
inline Cube random_cube(std::mt19937_64& rng, std::size_t width, int care_percent)
{
  Cube c;
  for (std::size_t j = 0; j < width; ++j)
    if (coin(rng, care_percent))
      c = c.with(j, coin(rng));
  return c;
}

struct UcwShape {
  std::size_t max_registers = 2;
  std::size_t max_states = 3;
  std::size_t max_signals = 1;
  std::size_t max_transitions_per_state = 4;
};

/// Random universal co-Buchi register automaton with sparse cube transitions.
inline RegisterAutomaton random_ucw(std::mt19937_64& rng, const UcwShape& shape = {})
{
  RegisterAutomaton a;
  a.mode = Acceptance::UniversalCoBuchi;
  const auto k = pick(rng, shape.max_registers + 1);
  const auto n = 1 + pick(rng, shape.max_states);
  const auto p = pick(rng, shape.max_signals + 1);
  std::vector<std::string> sig;
  for (std::size_t j = 0; j < p; ++j)
    sig.push_back("p" + std::to_string(j));
  a.signals = SignalSet(sig);
  for (std::size_t m = 0; m < k; ++m)
    a.registers.push_back("r" + std::to_string(m + 1));
  for (std::size_t q = 0; q < n; ++q) {
    a.states.push_back("q" + std::to_string(q));
    if (coin(rng, 40))
      a.accepting.push_back(static_cast<int>(q));
  }
  if (a.accepting.empty())
    a.accepting.push_back(static_cast<int>(pick(rng, n)));
  for (std::size_t q = 0; q < n; ++q) {
    const auto count = 1 + pick(rng, shape.max_transitions_per_state);
    for (std::size_t e = 0; e < count; ++e) {
      RaTransition t;
      t.src = static_cast<int>(q);
      t.dst = static_cast<int>(pick(rng, n));
      t.letter = random_cube(rng, p, 50);
      t.guard.in = random_cube(rng, k, 40);
      t.guard.out = random_cube(rng, k, 40);
      t.store = rng() & low_mask(k);
      a.transitions.push_back(t);
    }
  }
  a.normalize();
  return a;
}

inline DataLetter random_letter(std::mt19937_64& rng, std::size_t signals, DataValue domain)
{
  return {static_cast<Letter>(rng() & low_mask(signals)), static_cast<DataValue>(pick(rng, domain)),
          static_cast<DataValue>(pick(rng, domain))};
}

/// Lasso with 0..max_prefix prefix letters and 1..max_loop loop letters.
inline DataWord random_word(std::mt19937_64& rng, const SignalSet& signals, DataValue domain,
                            std::size_t max_prefix = 3, std::size_t max_loop = 3)
{
  DataWord w;
  w.signals = signals;
  const auto p = pick(rng, max_prefix + 1);
  const auto l = 1 + pick(rng, max_loop);
  for (std::size_t j = 0; j < p; ++j)
    w.prefix.push_back(random_letter(rng, signals.size(), domain));
  for (std::size_t j = 0; j < l; ++j)
    w.loop.push_back(random_letter(rng, signals.size(), domain));
  return w;
}

/// Every finite data word of length 1..max_len over 2^signals x D_domain^2.
inline void for_each_finite_word(std::size_t signals, DataValue domain, std::size_t max_len,
                                 const std::function<void(const std::vector<DataLetter>&)>& f)
{
  std::vector<DataLetter> alphabet;
  for (Letter l = 0; l < (Letter{1} << signals); ++l)
    for (DataValue i = 0; i < domain; ++i)
      for (DataValue o = 0; o < domain; ++o)
        alphabet.push_back({l, i, o});
  std::vector<DataLetter> word;
  std::function<void()> rec = [&] {
    if (!word.empty())
      f(word);
    if (word.size() == max_len)
      return;
    for (const auto& a : alphabet) {
      word.push_back(a);
      rec();
      word.pop_back();
    }
  };
  rec();
}

/// Set partitions of {0..k-1} as restricted growth strings.
inline std::set<std::vector<int>> all_partitions(std::size_t k)
{
  std::set<std::vector<int>> out;
  std::vector<int> rgs(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int max_block) {
    if (j == k) {
      out.insert(rgs);
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs[j] = b;
      rec(j + 1, std::max(max_block, b));
    }
  };
  if (k == 0)
    out.insert(std::vector<int>{});
  else
    rec(1, 0);
  return out;
}

/// Partition induced by register values, as a restricted growth string.
inline std::vector<int> value_partition(const std::vector<DataValue>& regs)
{
  std::vector<int> out;
  std::vector<DataValue> seen;
  for (auto v : regs) {
    int b = -1;
    for (std::size_t j = 0; j < seen.size(); ++j)
      if (seen[j] == v)
        b = static_cast<int>(j);
    if (b < 0) {
      b = static_cast<int>(seen.size());
      seen.push_back(v);
    }
    out.push_back(b);
  }
  return out;
}

/// Acceptance of a lasso word by explicit configuration graph: collect the
/// reachable (state, position, registers) nodes, then look for an accepting
/// node that reaches itself.
inline bool oracle_accepts(const RegisterAutomaton& a, const DataWord& w0)
{
  const DataWord w = remap_word(w0, a.signals);
  struct Node {
    int q;
    std::size_t pos;
    std::vector<DataValue> regs;
    auto operator<=>(const Node&) const = default;
  };
  auto succ = [&](const Node& n) {
    std::vector<Node> out;
    const auto& l = w.at(n.pos);
    for (const auto& t : a.transitions) {
      if (t.src != n.q || !t.letter.matches(l.signals))
        continue;
      if (!t.guard.in.matches(equality_bits(n.regs, l.in)) ||
          !t.guard.out.matches(equality_bits(n.regs, l.out)))
        continue;
      Node m{t.dst, w.next(n.pos), n.regs};
      for (std::size_t r = 0; r < m.regs.size(); ++r)
        if (test_bit(t.store, r))
          m.regs[r] = l.in;
      out.push_back(m);
    }
    return out;
  };
  auto reach = [&](const std::vector<Node>& from) {
    std::set<Node> seen;
    std::vector<Node> todo = from;
    while (!todo.empty()) {
      Node n = todo.back();
      todo.pop_back();
      if (!seen.insert(n).second)
        continue;
      for (auto& m : succ(n))
        todo.push_back(m);
    }
    return seen;
  };
  const auto all = reach({Node{a.initial, 0, std::vector<DataValue>(a.num_registers(), a.init_value)}});
  bool cycle = false;
  for (const auto& n : all) {
    if (std::find(a.accepting.begin(), a.accepting.end(), n.q) == a.accepting.end())
      continue;
    if (reach(succ(n)).count(n)) {
      cycle = true;
      break;
    }
  }
  return a.mode == Acceptance::UniversalCoBuchi ? !cycle : cycle;
}

/// Random complete register transducer.
inline RegisterTransducer random_transducer(std::mt19937_64& rng, const SignalSet& inputs,
                                            const SignalSet& outputs, std::size_t k,
                                            std::size_t states)
{
  RegisterTransducer t;
  t.inputs = inputs;
  t.outputs = outputs;
  for (std::size_t m = 0; m < k; ++m)
    t.registers.push_back("t" + std::to_string(m + 1));
  for (std::size_t s = 0; s < states; ++s)
    t.states.push_back("s" + std::to_string(s));
  t.reset_table();
  for (auto& mv : t.table) {
    mv.outputs = rng() & low_mask(outputs.size());
    mv.out_reg = static_cast<int>(pick(rng, k));
    mv.store = rng() & low_mask(k);
    mv.dst = static_cast<int>(pick(rng, states));
  }
  return t;
}

inline std::string fixture_path(const std::string& name)
{
  return std::string(REGSYNTH_FIXTURES) + "/" + name;
}

}  // namespace testing
