// Acceptance suite: one PASS/FAIL line per criterion.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "regsynth/associate.hpp"
#include "regsynth/fixtures.hpp"
#include "regsynth/ltleq.hpp"
#include "regsynth/modelcheck.hpp"
#include "regsynth/pipeline.hpp"
#include "regsynth/synthesis.hpp"
#include "regsynth/verifier.hpp"
#include "support.hpp"

using namespace regsynth;
using namespace testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int run(const std::string& cmd)
{
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<RegisterAutomaton> random_corpus()
{
  auto rng = make_rng(300);
  std::vector<RegisterAutomaton> out;
  UcwShape shape;  // k <= 2, |Q| <= 3, |P| <= 1
  for (int n = 0; n < 25; ++n)
    out.push_back(random_ucw(rng, shape));
  return out;
}

Outcome figure_pair_round_trip()
{
  const std::string cli = REGSYNTH_CLI;
  const std::string spec = fixture_path("fig1.ra");
  const int synth = run(cli + " synth --spec " + spec +
                        " --kt 1 --inputs req --outputs grant --out acceptance_fig1.rt");
  if (synth != 0)
    return {false, "synth exited " + std::to_string(synth)};
  const int check = run(cli + " check --trans acceptance_fig1.rt --spec " + spec);
  const int fig2 = run(cli + " check --trans " + fixture_path("fig2.rt") + " --spec " + spec);
  return {check == 0 && fig2 == 0,
          "check(synthesized) exit " + std::to_string(check) + ", check(fig2) exit " +
              std::to_string(fig2)};
}

Outcome verifier_cardinality()
{
  const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  std::ostringstream os;
  bool ok = true;
  for (std::size_t k = 0; k <= 6; ++k) {
    const auto v = build_verifier(k);
    std::set<std::vector<int>> got;
    for (const auto& p : v.partitions)
      got.insert(p.block_of);
    const auto expect = all_partitions(k);
    ok = ok && v.automaton.num_states() == bell[k] && expect.size() == bell[k] && got == expect;
    os << (k ? "," : "") << v.automaton.num_states();
  }
  return {ok, "states " + os.str()};
}

// Associate/verifier correspondence in both directions. Data side: every run
// over every word of length <= 4 on D_{k+1} follows exactly one product path
// whose partitions match the register values. Boolean side: every product
// step reachable within 4 steps is realized by values chosen greedily (i, o
// equal to the marked block or fresh), so every path of length <= 4 has a
// data witness.
bool correspondence(const RegisterAutomaton& a, std::size_t& data_paths, std::size_t& bool_steps)
{
  const auto k = a.num_registers();
  const auto p = a.signals.size();
  const auto v = build_verifier(a.registers);
  std::vector<std::pair<int, int>> origin;
  const auto prod = product_with_verifier(to_boolean_automaton(a), v, &origin);
  const auto pout = prod.outgoing();
  const DataValue domain = static_cast<DataValue>(k + 1);
  auto encode = [&](Letter sig, std::uint64_t gi, std::uint64_t go, std::uint64_t asg) {
    return sig | gi << p | go << (p + k) | asg << (p + 2 * k);
  };

  bool ok = true;
  std::function<void(int, std::vector<DataValue>, int, int)> walk =
      [&](int q, std::vector<DataValue> regs, int ps, int depth) {
        if (depth == 4)
          return;
        for (Letter sig = 0; sig < (Letter{1} << p); ++sig)
          for (DataValue i = 0; i < domain; ++i)
            for (DataValue o = 0; o < domain; ++o) {
              const auto gi = equality_bits(regs, i), go = equality_bits(regs, o);
              std::set<std::pair<int, std::uint64_t>> moves;
              for (const auto& t : a.transitions)
                if (t.src == q && t.letter.matches(sig) && t.guard.matches(gi, go))
                  moves.insert({t.dst, t.store});
              for (auto [dst, store] : moves) {
                const Letter bl = encode(sig, gi, go, store);
                std::set<int> targets;
                for (int j : pout[ps]) {
                  const auto& pt = prod.transitions[j];
                  if (pt.label.matches(bl) && origin[pt.dst].first == dst)
                    targets.insert(pt.dst);
                }
                ++data_paths;
                if (targets.size() != 1) {
                  ok = false;
                  continue;
                }
                auto next = regs;
                apply_store(next, store, i);
                const int nps = *targets.begin();
                if (v.partitions[origin[nps].second].block_of != value_partition(next))
                  ok = false;
                walk(dst, next, nps, depth + 1);
              }
            }
      };
  walk(a.initial, std::vector<DataValue>(k, a.init_value), prod.initial, 0);

  // Boolean side, deduplicated on (product state, register partition).
  std::set<std::pair<int, std::vector<int>>> seen;
  std::vector<std::pair<int, std::vector<DataValue>>> layer{
      {prod.initial, std::vector<DataValue>(k, a.init_value)}};
  for (int depth = 0; depth < 4 && !layer.empty(); ++depth) {
    std::vector<std::pair<int, std::vector<DataValue>>> next_layer;
    for (const auto& [ps, regs] : layer) {
      if (!seen.insert({ps, value_partition(regs)}).second)
        continue;
      const int q = origin[ps].first;
      auto fresh = [&] {
        for (DataValue x = 0;; ++x)
          if (equality_bits(regs, x) == 0)
            return x;
      };
      auto pick_value = [&](std::uint64_t g) {
        for (std::size_t m = 0; m < k; ++m)
          if (test_bit(g, m))
            return regs[m];
        return fresh();
      };
      for (int j : pout[ps]) {
        const auto& pt = prod.transitions[j];
        pt.label.for_each_minterm(prod.signals.size(), [&](Letter bl) {
          ++bool_steps;
          const Letter sig = bl & low_mask(p);
          const auto gi = (bl >> p) & low_mask(k);
          const auto go = (bl >> (p + k)) & low_mask(k);
          const auto asg = (bl >> (p + 2 * k)) & low_mask(k);
          const DataValue i = pick_value(gi), o = pick_value(go);
          if (i >= domain || o >= domain || equality_bits(regs, i) != gi ||
              equality_bits(regs, o) != go) {
            ok = false;
            return;
          }
          bool step = false;
          for (const auto& t : a.transitions)
            step = step || (t.src == q && t.dst == origin[pt.dst].first && t.letter.matches(sig) &&
                            t.guard.matches(gi, go) && t.store == asg);
          auto after = regs;
          apply_store(after, asg, i);
          if (!step || v.partitions[origin[pt.dst].second].block_of != value_partition(after)) {
            ok = false;
            return;
          }
          next_layer.push_back({pt.dst, after});
        });
      }
    }
    layer = std::move(next_layer);
  }
  return ok;
}

Outcome observation_correspondence()
{
  std::size_t data_paths = 0, bool_steps = 0, failed = 0;
  for (const auto& a : random_corpus())
    if (!correspondence(a, data_paths, bool_steps))
      ++failed;
  return {failed == 0, std::to_string(data_paths) + " data steps, " + std::to_string(bool_steps) +
                           " Boolean steps, " + std::to_string(failed) + " automata failed"};
}

Outcome cutoff_cross_validation()
{
  std::size_t agree = 0, rejecting = 0, total = 0;
  for (const auto& a : random_corpus()) {
    ++total;
    const auto prod =
        product_with_verifier(to_boolean_automaton(a), build_verifier(a.registers));
    const bool boolean_side = has_accepting_cycle(prod);
    const auto k = static_cast<DataValue>(a.num_registers());
    const auto w1 = check_emptiness_cutoff(dualize(a), k + 1);
    const auto w2 = check_emptiness_cutoff(dualize(a), k + 2);
    bool ok = boolean_side == w1.has_value() && boolean_side == w2.has_value();
    // the found words really are rejected
    if (w1)
      ok = ok && !oracle_accepts(a, *w1);
    if (w2)
      ok = ok && !oracle_accepts(a, *w2);
    agree += ok;
    rejecting += boolean_side;
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree, " +
                              std::to_string(rejecting) + " with rejected words"};
}

Outcome corpus_soundness()
{
  std::size_t realized_ok = 0, unrealizable_ok = 0, wrong = 0;
  for (const auto& e : fixtures::synthesis_corpus()) {
    const auto a = e.spec();
    const auto r = bounded_synthesis(a, e.interface(), 4);
    const bool realized = r.status == SynthesisStatus::Realized;
    if (realized && model_check(*r.transducer, a).holds && e.realizable)
      ++realized_ok;
    else if (!realized && !e.realizable)
      ++unrealizable_ok;
    else
      ++wrong;
  }
  return {realized_ok >= 10 && unrealizable_ok >= 5 && wrong == 0,
          std::to_string(realized_ok) + " realized and model-checked, " +
              std::to_string(unrealizable_ok) + " unrealizable-up-to-bound, " +
              std::to_string(wrong) + " unexpected"};
}

Outcome strict_inclusion_witness()
{
  const auto a = fixtures::fig7();
  const SynthesisInterface iface{SignalSet(), SignalSet(), 1, a.init_value};
  const auto at = product_A_Tall(a, build_t_all(iface));
  const auto h = build_hidden_spec(a, iface);
  const auto reading = register_reading(h, iface);
  // first i differs from d0 (and is stored, then output), later i = d0
  const DataWord w{SignalSet({"sync@t1"}), {{1, 1, 0}}, {{0, 0, 1}}};
  const bool in_at = accepts_data_word(at, w) && oracle_accepts(at, w);
  const bool in_h = accepts_data_word(reading, w) || oracle_accepts(reading, w);
  return {in_at && !in_h, std::string("A(x)T_all ") + (in_at ? "accepts" : "rejects") +
                              ", H " + (in_h ? "accepts" : "rejects") + " the witness"};
}

Outcome conversion2_equivalence()
{
  const auto g = fixtures::fig4();
  const auto r = conversion2(g);
  if (!std::holds_alternative<RegisterAutomaton>(r))
    return {false, "fig4 conversion aborted"};
  const auto& a = std::get<RegisterAutomaton>(r);
  auto rng = make_rng(700);
  std::size_t agree = 0, fresh_cases = 0;
  const std::size_t total = 200;
  for (std::size_t n = 0; n < total; ++n) {
    auto w = random_word(rng, g.signals, 4);
    if (n % 2 == 0) {
      // values from a two-element subset of D_4: guesses need fresh values
      const DataValue lo = static_cast<DataValue>(pick(rng, 3));
      for (auto* part : {&w.prefix, &w.loop})
        for (auto& l : *part) {
          l.in = lo + (l.in & 1u);
          l.out = lo + (l.out & 1u);
        }
      ++fresh_cases;
    }
    agree += accepts_guessing(g, w) == accepts_data_word(a, w, 4);
  }
  const auto never = conversion2(conversion1(parse_formula(fixtures::kNeverEqual)));
  const bool aborts = std::holds_alternative<Abort>(never);
  return {a.num_states() == 6 && agree == total && aborts,
          std::to_string(a.num_states()) + " states, " + std::to_string(agree) + "/" +
              std::to_string(total) + " lassos agree (" + std::to_string(fresh_cases) +
              " fresh-value cases), G(i != x) " + (aborts ? "aborts" : "converts")};
}

Outcome logic_route()
{
  const auto f = parse_formula(fixtures::kRequestGrant);
  const SignalSet sig({"req", "grant"});
  const auto r = formula_to_spec(f, sig);
  if (!std::holds_alternative<RegisterAutomaton>(r))
    return {false, "conversion aborted"};
  const auto& spec = std::get<RegisterAutomaton>(r);
  const SynthesisInterface iface{SignalSet({"req"}), SignalSet({"grant"}), 1, spec.init_value};
  const auto s = bounded_synthesis(spec, iface, 8);
  const bool synthesized = s.status == SynthesisStatus::Realized &&
                           model_check(*s.transducer, spec).holds &&
                           model_check(*s.transducer, fixtures::fig1()).holds;
  const auto fig1 = fixtures::fig1();
  auto rng = make_rng(800);
  int agree = 0;
  for (int n = 0; n < 20; ++n) {
    const auto w = random_word(rng, sig, 3);
    agree += accepts_data_word(spec, w, 3) == accepts_data_word(fig1, w, 3);
  }
  return {synthesized && agree == 20,
          std::string(synthesized ? "synthesized and model-checked" : "synthesis failed") + ", " +
              std::to_string(agree) + "/20 lassos agree with fig1"};
}

Outcome bell_bound()
{
  std::size_t ok = 0, total = 0, max_ratio_num = 0, max_ratio_den = 1;
  for (const auto& e : fixtures::synthesis_corpus()) {
    const auto a = e.spec();
    const auto h = build_hidden_spec(a, e.interface());
    const auto bound = hidden_state_bound(a, e.k_t);
    const auto n = h.automaton.num_states();
    ++total;
    ok += n <= bound;
    if (n * max_ratio_den > max_ratio_num * bound) {
      max_ratio_num = n;
      max_ratio_den = bound;
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " within bound, largest |H|/bound = " + std::to_string(max_ratio_num) +
                           "/" + std::to_string(max_ratio_den)};
}

}  // namespace

int main()
{
  struct Criterion {
    const char* name;
    Outcome (*fn)();
  };
  const Criterion criteria[] = {
      {"1 figure-pair synthesis round trip", figure_pair_round_trip},
      {"2 verifier cardinality", verifier_cardinality},
      {"3 associate/verifier path correspondence", observation_correspondence},
      {"4 verifier route vs cutoff search", cutoff_cross_validation},
      {"5 bounded synthesis soundness on corpus", corpus_soundness},
      {"6 strict-inclusion witness", strict_inclusion_witness},
      {"7 conversion-2 equivalence", conversion2_equivalence},
      {"8 end-to-end logic route", logic_route},
      {"9 Bell-number state bound", bell_bound},
  };
  std::cout << "seed " << base_seed() << "\n";
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", s);
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " (" << time << "): " << o.detail
              << "\n";
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
