#include "regsynth/automata.hpp"

#include <algorithm>

namespace regsynth {

std::string to_string(Acceptance a)
{
  return a == Acceptance::UniversalCoBuchi ? "universal-co-buchi" : "nondeterministic-buchi";
}

Acceptance dual(Acceptance a)
{
  return a == Acceptance::UniversalCoBuchi ? Acceptance::NondeterministicBuchi
                                           : Acceptance::UniversalCoBuchi;
}

namespace {

std::vector<bool> mask_of(const std::vector<int>& ids, std::size_t n)
{
  std::vector<bool> m(n, false);
  for (int q : ids)
    if (q >= 0 && static_cast<std::size_t>(q) < n)
      m[q] = true;
  return m;
}

template <class T>
std::vector<std::vector<int>> group_by_source(const std::vector<T>& ts, std::size_t n)
{
  std::vector<std::vector<int>> out(n);
  for (std::size_t j = 0; j < ts.size(); ++j)
    if (ts[j].src >= 0 && static_cast<std::size_t>(ts[j].src) < n)
      out[ts[j].src].push_back(static_cast<int>(j));
  return out;
}

template <class T>
void sort_unique(std::vector<T>& v)
{
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<bool> RegisterAutomaton::accepting_mask() const
{
  return mask_of(accepting, states.size());
}

std::vector<std::vector<int>> RegisterAutomaton::outgoing() const
{
  return group_by_source(transitions, states.size());
}

void RegisterAutomaton::normalize()
{
  sort_unique(transitions);
  sort_unique(accepting);
}

DataValue DataWord::max_value() const
{
  DataValue m = 0;
  for (const auto* part : {&prefix, &loop})
    for (const auto& l : *part)
      m = std::max({m, l.in, l.out});
  return m;
}

void RegisterTransducer::reset_table(int default_reg)
{
  const std::size_t per_state = std::size_t{1} << (inputs.size() + num_registers());
  table.assign(states.size() * per_state, TransducerMove{});
  for (std::size_t s = 0; s < states.size(); ++s)
    for (std::size_t j = 0; j < per_state; ++j)
      table[s * per_state + j] = TransducerMove{0, default_reg, 0, static_cast<int>(s)};
}

std::vector<bool> BooleanAutomaton::accepting_mask() const
{
  return mask_of(accepting, states.size());
}

std::vector<std::vector<int>> BooleanAutomaton::outgoing() const
{
  return group_by_source(transitions, states.size());
}

void BooleanAutomaton::normalize()
{
  sort_unique(transitions);
  sort_unique(accepting);
}

std::uint64_t BooleanAutomaton::explicit_transition_count() const
{
  // Cubes of one source and target may overlap, so count distinct letters.
  std::uint64_t total = 0;
  std::vector<std::pair<int, int>> keys;
  for (const auto& t : transitions)
    keys.emplace_back(t.src, t.dst);
  sort_unique(keys);
  for (auto [src, dst] : keys) {
    std::vector<Letter> letters;
    for (const auto& t : transitions)
      if (t.src == src && t.dst == dst)
        t.label.for_each_minterm(signals.size(), [&](Letter l) { letters.push_back(l); });
    sort_unique(letters);
    total += letters.size();
  }
  return total;
}

std::uint64_t equality_bits(const std::vector<DataValue>& regs, DataValue v)
{
  std::uint64_t bits = 0;
  for (std::size_t m = 0; m < regs.size(); ++m)
    if (regs[m] == v)
      bits |= std::uint64_t{1} << m;
  return bits;
}

void apply_store(std::vector<DataValue>& regs, std::uint64_t store, DataValue v)
{
  for (std::size_t m = 0; m < regs.size(); ++m)
    if (test_bit(store, m))
      regs[m] = v;
}

}  // namespace regsynth
