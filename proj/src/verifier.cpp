#include "regsynth/verifier.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "regsynth/associate.hpp"
#include "regsynth/format.hpp"

namespace regsynth {

Partition Partition::canonical(std::vector<int> block_of)
{
  std::map<int, int> rename;
  for (auto& b : block_of) {
    auto it = rename.try_emplace(b, static_cast<int>(rename.size())).first;
    b = it->second;
  }
  return {std::move(block_of)};
}

int Partition::num_blocks() const
{
  int n = 0;
  for (int b : block_of)
    n = std::max(n, b + 1);
  return n;
}

bool Partition::is_canonical() const
{
  int next = 0;
  for (int b : block_of) {
    if (b > next || b < 0)
      return false;
    if (b == next)
      ++next;
  }
  return true;
}

std::uint64_t Partition::block_mask(int b) const
{
  std::uint64_t m = 0;
  for (std::size_t r = 0; r < block_of.size(); ++r)
    if (block_of[r] == b)
      m |= std::uint64_t{1} << r;
  return m;
}

std::string Partition::to_string(const std::vector<std::string>& registers) const
{
  std::vector<std::string> blocks;
  for (int b = 0; b < num_blocks(); ++b) {
    std::vector<std::string> members;
    for (std::size_t r = 0; r < block_of.size(); ++r)
      if (block_of[r] == b)
        members.push_back(r < registers.size() ? registers[r] : "r" + std::to_string(r + 1));
    blocks.push_back("{" + join(members, ",") + "}");
  }
  return "{" + join(blocks, ",") + "}";
}

namespace {

// A g-vector is consistent iff it is empty or exactly one whole block.
bool one_sided_consistent(const Partition& pi, std::uint64_t g)
{
  if (g == 0)
    return true;
  const int b = pi.block_of[std::countr_zero(g)];
  return g == pi.block_mask(b);
}

}  // namespace

bool guard_consistent(const Partition& pi, std::uint64_t g_in, std::uint64_t g_out)
{
  return one_sided_consistent(pi, g_in) && one_sided_consistent(pi, g_out);
}

Partition partition_successor(const Partition& pi, std::uint64_t g_in, std::uint64_t assign)
{
  const auto k = pi.size();
  // Union-find is unnecessary: e' is an equivalence whenever g_in is consistent,
  // so the block of m is the smallest n related to m.
  std::vector<int> block(k);
  auto related = [&](std::size_t m, std::size_t n) {
    const bool am = test_bit(assign, m), an = test_bit(assign, n);
    if (am && an)
      return true;
    if (!am && an)
      return test_bit(g_in, m);
    if (am && !an)
      return test_bit(g_in, n);
    return pi.same_block(m, n);
  };
  for (std::size_t m = 0; m < k; ++m) {
    block[m] = static_cast<int>(m);
    for (std::size_t n = 0; n < m; ++n)
      if (related(m, n)) {
        block[m] = block[n];
        break;
      }
  }
  return Partition::canonical(std::move(block));
}

int Verifier::index_of(const Partition& pi) const
{
  auto it = std::find(partitions.begin(), partitions.end(), pi);
  return it == partitions.end() ? -1 : static_cast<int>(it - partitions.begin());
}

Verifier build_verifier(const std::vector<std::string>& registers)
{
  const auto k = registers.size();
  if (3 * k > kMaxSignals)
    throw Error("verifier alphabet exceeds 64 signals");
  Verifier v;
  v.registers = registers;
  std::vector<std::string> names;
  for (const auto& r : registers)
    names.push_back(signal_names::g_in(r));
  for (const auto& r : registers)
    names.push_back(signal_names::g_out(r));
  for (const auto& r : registers)
    names.push_back(signal_names::assign(r));
  v.automaton.mode = Acceptance::UniversalCoBuchi;
  v.automaton.signals = SignalSet(std::move(names));

  std::map<Partition, int> index;
  std::deque<int> queue;
  auto intern = [&](const Partition& pi) {
    auto [it, fresh] = index.try_emplace(pi, static_cast<int>(v.partitions.size()));
    if (fresh) {
      v.partitions.push_back(pi);
      queue.push_back(it->second);
    }
    return it->second;
  };
  v.automaton.initial = intern(Partition::single_block(k));
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    const Partition pi = v.partitions[q];
    std::vector<std::uint64_t> choices{0};
    for (int b = 0; b < pi.num_blocks(); ++b)
      choices.push_back(pi.block_mask(b));
    for (auto gi : choices)
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
        const int dst = intern(partition_successor(pi, gi, a));
        for (auto go : choices) {
          const Letter l = gi | go << k | a << (2 * k);
          v.automaton.transitions.push_back({q, Cube::exact(l, 3 * k), dst});
        }
      }
  }
  for (const auto& pi : v.partitions)
    v.automaton.states.push_back(pi.to_string(registers));
  v.automaton.normalize();
  return v;
}

Verifier build_verifier(std::size_t k)
{
  std::vector<std::string> regs;
  for (std::size_t r = 1; r <= k; ++r)
    regs.push_back("r" + std::to_string(r));
  return build_verifier(regs);
}

BooleanAutomaton product_with_verifier(const BooleanAutomaton& ab, const Verifier& v,
                                       std::vector<std::pair<int, int>>* origin)
{
  if (ab.mode != Acceptance::UniversalCoBuchi)
    throw Error("the verifier product expects a universal co-Buchi automaton");
  SignalMap map = [&] {
    try {
      return SignalMap(v.automaton.signals, ab.signals);
    } catch (const Error&) {
      throw Error("alphabet mismatch: the automaton lacks the verifier's guard/store signals");
    }
  }();
  const auto ab_out = ab.outgoing();
  const auto v_out = v.automaton.outgoing();
  std::vector<Cube> v_label(v.automaton.transitions.size());
  for (std::size_t j = 0; j < v_label.size(); ++j)
    v_label[j] = map.map_cube(v.automaton.transitions[j].label);

  BooleanAutomaton p;
  p.mode = ab.mode;
  p.signals = ab.signals;
  const auto acc = ab.accepting_mask();
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pairs;
  std::deque<int> queue;
  auto intern = [&](int q, int pi) {
    auto [it, fresh] = index.try_emplace({q, pi}, static_cast<int>(pairs.size()));
    if (fresh) {
      pairs.emplace_back(q, pi);
      p.states.push_back(ab.states[q] + "|" + v.automaton.states[pi]);
      if (acc[q])
        p.accepting.push_back(it->second);
      queue.push_back(it->second);
    }
    return it->second;
  };
  p.initial = intern(ab.initial, v.automaton.initial);
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    const auto [q, pi] = pairs[s];
    for (int ja : ab_out[q])
      for (int jv : v_out[pi])
        if (auto c = ab.transitions[ja].label.intersect(v_label[jv])) {
          const int d = intern(ab.transitions[ja].dst, v.automaton.transitions[jv].dst);
          p.transitions.push_back({s, *c, d});
        }
  }
  p.normalize();
  if (origin)
    *origin = pairs;
  return p;
}

std::string to_dot(const Verifier& v)
{
  return to_dot(v.automaton);
}

}  // namespace regsynth
