#include "regsynth/modelcheck.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "regsynth/lasso.hpp"
#include "regsynth/semantics.hpp"

namespace regsynth {

namespace {

struct Config {
  int state = 0;
  std::vector<DataValue> regs;

  bool operator==(const Config&) const = default;
};

struct ConfigHash {
  std::size_t operator()(const Config& c) const
  {
    std::size_t h = static_cast<std::size_t>(c.state) * 1000003u;
    for (auto v : c.regs)
      h = h * 31u + v;
    return h;
  }
};

}  // namespace

RegisterAutomaton dualize(const RegisterAutomaton& a)
{
  RegisterAutomaton d = a;
  d.mode = dual(a.mode);
  return d;
}

RegisterAutomaton product_with_transducer(const RegisterAutomaton& atilde,
                                          const RegisterTransducer& t)
{
  if (atilde.mode != Acceptance::NondeterministicBuchi)
    throw Error("the transducer product expects a nondeterministic Buchi automaton");
  std::set<std::string> io;
  for (const auto* s : {&t.inputs, &t.outputs})
    io.insert(s->names().begin(), s->names().end());
  const std::set<std::string> spec(atilde.signals.names().begin(), atilde.signals.names().end());
  if (io != spec || io.size() != t.inputs.size() + t.outputs.size())
    throw Error("transducer signals {" + join({io.begin(), io.end()}, ", ") +
                "} do not match the specification signals {" +
                join({spec.begin(), spec.end()}, ", ") + "}");
  if (atilde.init_value != t.init_value)
    throw Error("the specification and the transducer must share the initial register value");

  const auto ka = atilde.num_registers();
  const auto kt = t.num_registers();
  const auto ni = t.inputs.size();
  SignalMap in_map(t.inputs, atilde.signals), out_map(t.outputs, atilde.signals);

  RegisterAutomaton p;
  p.mode = Acceptance::NondeterministicBuchi;
  p.signals = atilde.signals;
  p.registers = atilde.registers;
  for (const auto& r : t.registers) {
    auto name = r;
    while (std::find(p.registers.begin(), p.registers.end(), name) != p.registers.end())
      name += "'";
    p.registers.push_back(name);
  }
  p.init_value = atilde.init_value;

  const auto out = atilde.outgoing();
  const auto acc = atilde.accepting_mask();
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pairs;
  std::deque<int> queue;
  auto intern = [&](int q, int s) {
    auto [it, fresh] = index.try_emplace({q, s}, static_cast<int>(pairs.size()));
    if (fresh) {
      pairs.emplace_back(q, s);
      p.states.push_back(atilde.states[q] + "|" + t.states[s]);
      if (acc[q])
        p.accepting.push_back(it->second);
      queue.push_back(it->second);
    }
    return it->second;
  };
  p.initial = intern(atilde.initial, t.initial);
  while (!queue.empty()) {
    const int src = queue.front();
    queue.pop_front();
    const auto [q, s] = pairs[src];
    for (Letter l = 0; l < (Letter{1} << ni); ++l)
      for (std::uint64_t g = 0; g < (std::uint64_t{1} << kt); ++g) {
        const auto& m = t.move(s, l, g);
        const Letter full = in_map.map_bits(l) | out_map.map_bits(m.outputs);
        for (int j : out[q]) {
          const auto& ta = atilde.transitions[j];
          if (!ta.letter.matches(full))
            continue;
          Guard guard{ta.guard.in, ta.guard.out};
          guard.in.care |= low_mask(kt) << ka;
          guard.in.value |= g << ka;
          guard.out = guard.out.with(ka + m.out_reg, true);
          p.transitions.push_back({src, Cube::exact(full, p.signals.size()), guard,
                                   ta.store | m.store << ka, intern(ta.dst, m.dst)});
        }
      }
  }
  p.normalize();
  return p;
}

std::optional<DataWord> check_emptiness_cutoff(const RegisterAutomaton& p,
                                               std::optional<DataValue> domain_size)
{
  const DataValue n = domain_size.value_or(static_cast<DataValue>(p.num_registers() + 1));
  if (n < 1)
    throw Error("domain size must be at least 1");
  std::vector<DataValue> values{p.init_value};
  for (DataValue v = 0; values.size() < n; ++v)
    if (v != p.init_value)
      values.push_back(v);

  const auto out = p.outgoing();
  const auto acc = p.accepting_mask();
  auto successors = [&](const Config& c) {
    std::vector<std::pair<DataLetter, Config>> next;
    for (int j : out[c.state]) {
      const auto& t = p.transitions[j];
      for (DataValue in : values) {
        if (!t.guard.in.matches(equality_bits(c.regs, in)))
          continue;
        for (DataValue o : values) {
          if (!t.guard.out.matches(equality_bits(c.regs, o)))
            continue;
          Config d{t.dst, c.regs};
          apply_store(d.regs, t.store, in);
          next.emplace_back(DataLetter{t.letter.value, in, o}, std::move(d));
        }
      }
    }
    return next;
  };
  Config init{p.initial, std::vector<DataValue>(p.num_registers(), p.init_value)};
  auto lasso = find_accepting_lasso<Config, DataLetter, ConfigHash>(
      init, successors, [&](const Config& c) { return static_cast<bool>(acc[c.state]); });
  if (!lasso)
    return std::nullopt;
  return DataWord{p.signals, std::move(lasso->prefix), std::move(lasso->loop)};
}

ModelCheckResult model_check(const RegisterTransducer& t, const RegisterAutomaton& a)
{
  if (a.mode != Acceptance::UniversalCoBuchi)
    throw Error("model checking expects a universal co-Buchi specification");
  const auto product = product_with_transducer(dualize(a), t);
  auto cex = check_emptiness_cutoff(product);
  if (!cex)
    return {true, std::nullopt};

  // Replay: the transducer produces the word and the specification rejects it.
  SignalMap in_map(t.inputs, cex->signals), out_map(t.outputs, cex->signals);
  auto inputs_of = [&](const std::vector<DataLetter>& part) {
    std::vector<TransducerInput> in;
    for (const auto& l : part) {
      Letter bits = 0;
      for (std::size_t j = 0; j < t.inputs.size(); ++j)
        bits |= static_cast<Letter>(test_bit(l.signals, in_map.target(j))) << j;
      in.push_back({bits, l.in});
    }
    return in;
  };
  const auto prefix = inputs_of(cex->prefix), loop = inputs_of(cex->loop);
  auto all = prefix;
  all.insert(all.end(), loop.begin(), loop.end());
  const auto produced = run_transducer(t, all);
  for (std::size_t j = 0; j < all.size(); ++j) {
    const auto& l = cex->at(j);
    if (out_map.map_bits(produced[j].signals) != (l.signals & ~in_map.map_bits(all[j].signals)) ||
        produced[j].value != l.out)
      throw Error("internal error: counterexample is not a transducer word");
  }
  if (accepts_data_word(a, transducer_word(t, prefix, loop)) || accepts_data_word(a, *cex))
    throw Error("internal error: counterexample is accepted by the specification");
  return {false, std::move(cex)};
}

}  // namespace regsynth
