#include "regsynth/semantics.hpp"

#include <map>
#include <set>

#include "regsynth/lasso.hpp"

namespace regsynth {

namespace {

bool in_range(int q, std::size_t n) { return q >= 0 && static_cast<std::size_t>(q) < n; }

std::string transition_location(std::size_t j) { return "transition #" + std::to_string(j + 1); }

void check_names(const std::vector<std::string>& names, const std::string& what,
                 std::vector<Diagnostic>& out)
{
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      out.push_back({what + " names are unique", "'" + n + "'"});
}

struct ConfigNode {
  int state = 0;
  std::size_t pos = 0;
  std::vector<DataValue> regs;

  bool operator==(const ConfigNode&) const = default;
};

struct ConfigNodeHash {
  std::size_t operator()(const ConfigNode& n) const
  {
    std::size_t h = std::hash<int>{}(n.state) * 1000003u ^ n.pos;
    for (auto v : n.regs)
      h = h * 31u + v;
    return h;
  }
};

}  // namespace

std::vector<Diagnostic> validate_automaton(const RegisterAutomaton& a)
{
  std::vector<Diagnostic> out;
  const std::size_t n = a.states.size();
  const std::size_t k = a.registers.size();
  const std::size_t p = a.signals.size();
  check_names(a.states, "state", out);
  check_names(a.registers, "register", out);
  if (k > 32)
    out.push_back({"at most 32 registers", "registers"});
  if (!in_range(a.initial, n))
    out.push_back({"initial state is a state", "initial"});
  for (int q : a.accepting)
    if (!in_range(q, n))
      out.push_back({"accepting states are states", "accepting #" + std::to_string(q)});
  for (std::size_t j = 0; j < a.transitions.size(); ++j) {
    const auto& t = a.transitions[j];
    if (!in_range(t.src, n) || !in_range(t.dst, n))
      out.push_back({"transition source and target are states", transition_location(j)});
    const auto wide = ~low_mask(k);
    if ((t.guard.in.care & wide) || (t.guard.out.care & wide))
      out.push_back({"guard vector length equals register count", transition_location(j)});
    if (t.store & wide)
      out.push_back({"assignment vector length equals register count", transition_location(j)});
    if (t.letter.care & ~low_mask(p))
      out.push_back({"letters use declared signals only", transition_location(j)});
    if ((t.letter.value & ~t.letter.care) || (t.guard.in.value & ~t.guard.in.care) ||
        (t.guard.out.value & ~t.guard.out.care))
      out.push_back({"cube values lie within their care set", transition_location(j)});
  }
  return out;
}

std::vector<Diagnostic> validate_automaton(const BooleanAutomaton& a)
{
  std::vector<Diagnostic> out;
  const std::size_t n = a.states.size();
  check_names(a.states, "state", out);
  if (!in_range(a.initial, n))
    out.push_back({"initial state is a state", "initial"});
  for (int q : a.accepting)
    if (!in_range(q, n))
      out.push_back({"accepting states are states", "accepting #" + std::to_string(q)});
  for (std::size_t j = 0; j < a.transitions.size(); ++j) {
    const auto& t = a.transitions[j];
    if (!in_range(t.src, n) || !in_range(t.dst, n))
      out.push_back({"transition source and target are states", transition_location(j)});
    if (t.label.care & ~low_mask(a.signals.size()))
      out.push_back({"letters use declared signals only", transition_location(j)});
  }
  return out;
}

std::vector<Diagnostic> validate_transducer(const RegisterTransducer& t)
{
  std::vector<Diagnostic> out;
  const std::size_t n = t.states.size();
  const std::size_t k = t.registers.size();
  check_names(t.states, "state", out);
  check_names(t.registers, "register", out);
  if (k == 0)
    out.push_back({"a transducer has at least one register", "registers"});
  if (!in_range(t.initial, n))
    out.push_back({"initial state is a state", "initial"});
  const std::size_t expected = n << (t.inputs.size() + k);
  if (t.table.size() != expected) {
    out.push_back({"transition function is total", "table size " + std::to_string(t.table.size()) +
                                                       " != " + std::to_string(expected)});
    return out;
  }
  for (std::size_t j = 0; j < t.table.size(); ++j) {
    const auto& m = t.table[j];
    if (!in_range(m.dst, n))
      out.push_back({"transition target is a state", "entry #" + std::to_string(j)});
    if (!in_range(m.out_reg, k))
      out.push_back({"output register index lies in 1..k", "entry #" + std::to_string(j)});
    if (m.store & ~low_mask(k))
      out.push_back({"assignment vector length equals register count",
                     "entry #" + std::to_string(j)});
    if (m.outputs & ~low_mask(t.outputs.size()))
      out.push_back({"outputs use declared signals only", "entry #" + std::to_string(j)});
  }
  return out;
}

std::vector<TransducerOutput> run_transducer(const RegisterTransducer& t,
                                             const std::vector<TransducerInput>& input)
{
  std::vector<TransducerOutput> out;
  out.reserve(input.size());
  std::vector<DataValue> regs(t.num_registers(), t.init_value);
  int state = t.initial;
  for (const auto& step : input) {
    const auto& m = t.move(state, step.signals, equality_bits(regs, step.value));
    out.push_back({m.outputs, regs[m.out_reg], m.store});
    apply_store(regs, m.store, step.value);
    state = m.dst;
  }
  return out;
}

DataWord transducer_word(const RegisterTransducer& t, const std::vector<TransducerInput>& prefix,
                         const std::vector<TransducerInput>& loop)
{
  if (loop.empty())
    throw Error("input lasso needs a non-empty loop");
  std::vector<std::string> names = t.inputs.names();
  for (const auto& o : t.outputs.names())
    names.push_back(o);
  DataWord w;
  w.signals = SignalSet(names);
  const auto shift = t.inputs.size();

  std::vector<DataValue> regs(t.num_registers(), t.init_value);
  int state = t.initial;
  auto step = [&](const TransducerInput& in) {
    const auto& m = t.move(state, in.signals, equality_bits(regs, in.value));
    DataLetter l{in.signals | (m.outputs << shift), in.value, regs[m.out_reg]};
    apply_store(regs, m.store, in.value);
    state = m.dst;
    return l;
  };
  for (const auto& in : prefix)
    w.prefix.push_back(step(in));

  // Configuration at each loop boundary -> index into `unrolled`.
  std::map<std::pair<int, std::vector<DataValue>>, std::size_t> seen;
  std::vector<DataLetter> unrolled;
  while (true) {
    auto key = std::make_pair(state, regs);
    if (auto it = seen.find(key); it != seen.end()) {
      w.prefix.insert(w.prefix.end(), unrolled.begin(), unrolled.begin() + it->second);
      w.loop.assign(unrolled.begin() + it->second, unrolled.end());
      return w;
    }
    seen.emplace(std::move(key), unrolled.size());
    for (const auto& in : loop)
      unrolled.push_back(step(in));
  }
}

DataWord remap_word(const DataWord& w, const SignalSet& target)
{
  if (w.signals == target)
    return w;
  SignalMap map(w.signals, target);
  DataWord out{target, {}, {}};
  for (const auto& l : w.prefix)
    out.prefix.push_back({map.map_bits(l.signals), l.in, l.out});
  for (const auto& l : w.loop)
    out.loop.push_back({map.map_bits(l.signals), l.in, l.out});
  return out;
}

bool accepts_data_word(const RegisterAutomaton& a, const DataWord& word,
                       std::optional<DataValue> domain_size)
{
  if (word.loop.empty())
    throw Error("a lasso word needs a non-empty loop");
  if (domain_size && (word.max_value() >= *domain_size || a.init_value >= *domain_size))
    throw Error("data value outside the declared domain D_" + std::to_string(*domain_size));
  const DataWord w = remap_word(word, a.signals);
  const auto out = a.outgoing();
  const auto acc = a.accepting_mask();

  auto successors = [&](const ConfigNode& n) {
    std::vector<std::pair<char, ConfigNode>> next;
    const auto& l = w.at(n.pos);
    const auto in_eq = equality_bits(n.regs, l.in);
    const auto out_eq = equality_bits(n.regs, l.out);
    for (int j : out[n.state]) {
      const auto& t = a.transitions[j];
      if (!t.letter.matches(l.signals) || !t.guard.matches(in_eq, out_eq))
        continue;
      ConfigNode m{t.dst, w.next(n.pos), n.regs};
      apply_store(m.regs, t.store, l.in);
      next.emplace_back(0, std::move(m));
    }
    return next;
  };
  ConfigNode init{a.initial, 0, std::vector<DataValue>(a.num_registers(), a.init_value)};
  const bool cycle = find_accepting_lasso<ConfigNode, char, ConfigNodeHash>(
                         init, successors, [&](const ConfigNode& n) { return acc[n.state]; })
                         .has_value();
  return a.mode == Acceptance::UniversalCoBuchi ? !cycle : cycle;
}

bool accepts_boolean_word(const BooleanAutomaton& a, const std::vector<Letter>& prefix,
                          const std::vector<Letter>& loop)
{
  if (loop.empty())
    throw Error("a lasso word needs a non-empty loop");
  const auto out = a.outgoing();
  const auto acc = a.accepting_mask();
  const std::size_t len = prefix.size() + loop.size();
  auto letter_at = [&](std::size_t pos) {
    return pos < prefix.size() ? prefix[pos] : loop[pos - prefix.size()];
  };
  using Node = std::pair<int, std::size_t>;
  struct NodeHash {
    std::size_t operator()(const Node& n) const { return n.first * 1000003u ^ n.second; }
  };
  auto successors = [&](const Node& n) {
    std::vector<std::pair<char, Node>> next;
    const auto l = letter_at(n.second);
    const auto pos = n.second + 1 < len ? n.second + 1 : prefix.size();
    for (int j : out[n.first])
      if (a.transitions[j].label.matches(l))
        next.emplace_back(0, Node{a.transitions[j].dst, pos});
    return next;
  };
  const bool cycle = find_accepting_lasso<Node, char, NodeHash>(
                         Node{a.initial, 0}, successors,
                         [&](const Node& n) { return static_cast<bool>(acc[n.first]); })
                         .has_value();
  return a.mode == Acceptance::UniversalCoBuchi ? !cycle : cycle;
}

bool has_accepting_cycle(const BooleanAutomaton& a)
{
  const auto out = a.outgoing();
  const auto acc = a.accepting_mask();
  auto successors = [&](const int& q) {
    std::vector<std::pair<char, int>> next;
    for (int j : out[q])
      next.emplace_back(0, a.transitions[j].dst);
    return next;
  };
  return find_accepting_lasso<int, char>(a.initial, successors,
                                         [&](const int& q) { return static_cast<bool>(acc[q]); })
      .has_value();
}

void for_each_input_lasso(std::size_t num_inputs, DataValue domain_size, std::size_t depth,
                          const std::function<void(const std::vector<TransducerInput>&,
                                                   const std::vector<TransducerInput>&)>& f)
{
  const std::uint64_t letters = (std::uint64_t{1} << num_inputs) * domain_size;
  for (std::size_t len = 1; len <= depth; ++len) {
    std::vector<std::uint64_t> digits(len, 0);
    while (true) {
      std::vector<TransducerInput> seq;
      for (auto d : digits)
        seq.push_back({d / domain_size, static_cast<DataValue>(d % domain_size)});
      for (std::size_t loop_len = 1; loop_len <= len; ++loop_len) {
        std::vector<TransducerInput> prefix(seq.begin(), seq.end() - loop_len);
        std::vector<TransducerInput> loop(seq.end() - loop_len, seq.end());
        f(prefix, loop);
      }
      std::size_t j = 0;
      while (j < len && ++digits[j] == letters)
        digits[j++] = 0;
      if (j == len)
        break;
    }
  }
}

bool transducer_satisfies_by_enumeration(const RegisterTransducer& t, const RegisterAutomaton& a,
                                         DataValue domain_size, std::size_t depth)
{
  if (domain_size < 1)
    throw Error("domain size must be at least 1");
  bool ok = true;
  for_each_input_lasso(t.inputs.size(), domain_size, depth,
                       [&](const auto& prefix, const auto& loop) {
                         if (!ok)
                           return;
                         auto w = remap_word(transducer_word(t, prefix, loop), a.signals);
                         ok = accepts_data_word(a, w);
                       });
  return ok;
}

}  // namespace regsynth
