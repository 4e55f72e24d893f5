// regsynth: synthesis and model checking for register automata.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "regsynth/associate.hpp"
#include "regsynth/fixtures.hpp"
#include "regsynth/format.hpp"
#include "regsynth/ltleq.hpp"
#include "regsynth/modelcheck.hpp"
#include "regsynth/pipeline.hpp"
#include "regsynth/report.hpp"
#include "regsynth/synthesis.hpp"
#include "regsynth/verifier.hpp"

using namespace regsynth;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kUnrealizable = 10;
constexpr int kAborted = 11;
constexpr int kViolated = 20;

bool ends_with(const std::string& s, std::string_view suffix)
{
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<std::string> split_list(const std::string& s)
{
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ','))
    if (!cur.empty())
      out.push_back(cur);
  return out;
}

void write_report(const std::string& path, const RunReport& r, bool timings)
{
  if (!path.empty())
    write_file(path, r.to_text(timings));
}

struct SpecLoad {
  std::optional<RegisterAutomaton> automaton;
  int exit_code = kOk;
};

// An .ltleq file is compiled; an existential one goes through the conversions
// only to report an abort, since synthesis needs a universal specification.
SpecLoad load_spec(const std::string& path, const std::string& text, const SignalSet& signals,
                   RunReport& report)
{
  if (!ends_with(path, ".ltleq"))
    return {parse_register_automaton(text), kOk};
  const auto f = parse_formula(text);
  std::optional<SignalSet> sig;
  if (signals.size() > 0)
    sig = signals;
  if (f.quantifier == Quantifier::Forall) {
    auto r = formula_to_spec(f, sig);
    if (auto* abort = std::get_if<Abort>(&r)) {
      const auto g = conversion1(negate(f), sig);
      std::cerr << describe(*abort, g) << "\n"
                << "hint: the formula may have no register-automaton equivalent; try rewriting it\n";
      report.set("status", "conversion-aborted");
      return {std::nullopt, kAborted};
    }
    return {std::get<RegisterAutomaton>(r), kOk};
  }
  const auto g = conversion1(f, sig);
  auto r = conversion2(g);
  if (auto* abort = std::get_if<Abort>(&r)) {
    std::cerr << describe(*abort, g) << "\n"
              << "hint: the formula may have no register-automaton equivalent; try rewriting it\n";
    report.set("status", "conversion-aborted");
    return {std::nullopt, kAborted};
  }
  std::cerr << "error: an existential formula is not a synthesis specification; "
               "use a universal one\n";
  report.set("status", "input-error");
  return {std::nullopt, kInputError};
}

struct SynthOptions {
  std::string spec;
  std::string inputs;
  std::string outputs;
  std::size_t kt = 1;
  std::size_t kt_max = 0;
  std::size_t max_bound = 8;
  std::string out;
  std::string dot;
  std::string report;
  bool timings = false;
};

int cmd_synth(const SynthOptions& o)
{
  RunReport report;
  report.command = "synth";
  const auto text = read_file(o.spec);
  report.add_input(o.spec, text);
  SynthesisInterface iface{SignalSet(split_list(o.inputs)), SignalSet(split_list(o.outputs)), o.kt,
                           0};
  std::vector<std::string> all = iface.inputs.names();
  all.insert(all.end(), iface.outputs.names().begin(), iface.outputs.names().end());

  Stopwatch sw;
  auto spec = load_spec(o.spec, text, SignalSet(all), report);
  report.time("load", sw.lap_ms());
  if (!spec.automaton) {
    write_report(o.report, report, o.timings);
    return spec.exit_code;
  }
  const auto& a = *spec.automaton;
  iface.init_value = a.init_value;
  report.set("spec_states", a.num_states());
  report.set("spec_registers", a.num_registers());

  const std::size_t last = std::max(o.kt, o.kt_max);
  if (o.kt_max > o.kt)
    std::cerr << "note: searching k_T = " << o.kt << ".." << last
              << " (heuristic; failure says nothing about larger k_T)\n";
  SynthesisResult result;
  for (std::size_t kt = o.kt; kt <= last; ++kt) {
    iface.k_t = kt;
    const auto st = run_pipeline(a, iface);
    report.time("pipeline_kt" + std::to_string(kt), sw.lap_ms());
    report.set("kt", kt);
    report.set("size.ab", st.ab.num_states());
    report.set("size.v", st.v.automaton.num_states());
    report.set("size.abv", st.abv.num_states());
    report.set("size.tall", st.tall.num_states());
    report.set("size.at", st.at.num_states());
    report.set("size.atw", st.atw.automaton.num_states());
    report.set("size.h", st.h.automaton.num_states());
    report.set("atw_dropped_transitions", st.atw.dropped);
    result = bounded_synthesis(a, st.h, iface, o.max_bound);
    report.time("synthesis_kt" + std::to_string(kt), sw.lap_ms());
    report.set("bound", result.bound);
    report.set("game_positions", result.game_positions);
    if (result.status == SynthesisStatus::Realized)
      break;
  }

  if (result.status != SynthesisStatus::Realized) {
    report.set("status", "unrealizable-up-to-bound");
    write_report(o.report, report, o.timings);
    std::cout << "unrealizable-up-to-bound (k_T <= " << last << ", counter bound <= "
              << o.max_bound << ")\n";
    return kUnrealizable;
  }
  const auto& t = *result.transducer;
  report.set("mealy_states", result.mealy_states);
  report.set("transducer_states", t.num_states());
  report.set("model_check", "holds");
  report.set("status", "realized");
  const auto rt = format_register_transducer(t);
  if (!o.out.empty())
    write_file(o.out, rt);
  else
    std::cout << rt;
  if (!o.dot.empty())
    write_file(o.dot, to_dot(t));
  write_report(o.report, report, o.timings);
  std::cerr << "realized with k_T = " << iface.k_t << ", counter bound " << result.bound << ", "
            << t.num_states() << " states\n";
  return kOk;
}

struct CheckOptions {
  std::string trans;
  std::string spec;
  std::string cex;
  std::string report;
  bool timings = false;
};

int cmd_check(const CheckOptions& o)
{
  RunReport report;
  report.command = "check";
  const auto ttext = read_file(o.trans);
  const auto stext = read_file(o.spec);
  report.add_input(o.trans, ttext);
  report.add_input(o.spec, stext);
  Stopwatch sw;
  const auto t = parse_register_transducer(ttext);
  const auto a = parse_register_automaton(stext);
  report.set("transducer_states", t.num_states());
  report.set("spec_states", a.num_states());
  const auto r = model_check(t, a);
  report.time("model_check", sw.lap_ms());
  if (r.holds) {
    report.set("status", "holds");
    write_report(o.report, report, o.timings);
    std::cout << "yes\n";
    return kOk;
  }
  report.set("status", "violated");
  const auto cex = format_data_word(*r.counterexample);
  if (!o.cex.empty()) {
    write_file(o.cex, cex);
    report.set("counterexample", o.cex);
  }
  write_report(o.report, report, o.timings);
  std::cout << "no\n";
  if (o.cex.empty())
    std::cout << cex;
  return kViolated;
}

struct Ltl2RaOptions {
  std::string formula;
  std::string out;
  std::string stage = "ra";
  std::string signals;
  std::string dot;
  bool verify = false;
};

DataWord random_word(std::mt19937& rng, const SignalSet& signals, DataValue domain)
{
  DataWord w;
  w.signals = signals;
  std::uniform_int_distribution<int> len(1, 3);
  const Letter letters = Letter{1} << signals.size();
  auto letter = [&] {
    return DataLetter{static_cast<Letter>(rng() % letters), static_cast<DataValue>(rng() % domain),
                      static_cast<DataValue>(rng() % domain)};
  };
  const int p = len(rng) - 1;
  const int l = len(rng);
  for (int j = 0; j < p; ++j)
    w.prefix.push_back(letter());
  for (int j = 0; j < l; ++j)
    w.loop.push_back(letter());
  return w;
}

int cmd_ltl2ra(const Ltl2RaOptions& o)
{
  const auto f = parse_formula(read_file(o.formula));
  std::optional<SignalSet> sig;
  if (!o.signals.empty())
    sig = SignalSet(split_list(o.signals));
  // A universal formula is handled through its negation.
  const bool universal = f.quantifier == Quantifier::Forall;
  const auto ex = universal ? negate(f) : f;
  const SignalSet signals = sig ? *sig : SignalSet(ex.props());
  if (universal && o.stage != "ra")
    std::cerr << "note: stage '" << o.stage << "' is shown for the negated formula\n";

  std::string text, dot;
  std::optional<RegisterAutomaton> ra;
  std::optional<GuessingAutomaton> guess;
  if (o.stage == "nbw") {
    const auto nbw = conversion1_nbw(ex, signals);
    text = format_boolean_automaton(nbw);
    dot = to_dot(nbw);
  } else {
    guess = conversion1(ex, signals);
    if (o.stage == "guess") {
      text = format_guessing_automaton(*guess);
    } else {
      auto r = conversion2(*guess);
      if (auto* abort = std::get_if<Abort>(&r)) {
        std::cerr << describe(*abort, *guess) << "\n"
                  << "hint: the formula may have no register-automaton equivalent; try "
                     "rewriting it\n";
        return kAborted;
      }
      ra = std::get<RegisterAutomaton>(r);
      if (universal)
        ra = dualize(*ra);
      text = format_register_automaton(*ra);
      dot = to_dot(*ra);
    }
  }

  if (o.verify && o.stage != "nbw") {
    std::mt19937 rng(1);
    const DataValue domain = static_cast<DataValue>(f.vars.size() + 2);
    for (int n = 0; n < 5; ++n) {
      const auto w = random_word(rng, signals, domain);
      const bool truth = eval_formula(f, w);
      const bool got = ra ? accepts_data_word(*ra, w) : accepts_guessing(*guess, w) != universal;
      if (got != truth) {
        std::cerr << "error: verification failed on\n" << format_data_word(w);
        return 1;
      }
    }
    std::cerr << "verified on 5 random lassos\n";
  }

  if (!o.out.empty())
    write_file(o.out, text);
  else
    std::cout << text;
  if (!o.dot.empty() && !dot.empty())
    write_file(o.dot, dot);
  return kOk;
}

struct DumpOptions {
  std::string spec;
  std::string inputs;
  std::string outputs;
  std::size_t kt = 1;
  std::vector<std::string> stages;
  std::string dir = ".";
  bool dot = false;
};

int cmd_dump(const DumpOptions& o)
{
  const auto a = parse_register_automaton(read_file(o.spec));
  SynthesisInterface iface{SignalSet(split_list(o.inputs)), SignalSet(split_list(o.outputs)), o.kt,
                           a.init_value};
  const auto st = run_pipeline(a, iface);
  std::filesystem::create_directories(o.dir);
  auto emit = [&](const std::string& name, const std::string& text, const std::string& dot) {
    const auto base = (std::filesystem::path(o.dir) / name).string();
    write_file(base + ".ra", text);
    if (o.dot)
      write_file(base + ".dot", dot);
    std::cout << base << ".ra\n";
  };
  for (const auto& s : o.stages) {
    if (s == "ab")
      emit(s, format_boolean_automaton(st.ab), to_dot(st.ab));
    else if (s == "v")
      emit(s, format_boolean_automaton(st.v.automaton), to_dot(st.v));
    else if (s == "abv")
      emit(s, format_boolean_automaton(st.abv), to_dot(st.abv));
    else if (s == "tall")
      emit(s, format_register_automaton(st.tall), to_dot(st.tall));
    else if (s == "at")
      emit(s, format_register_automaton(st.at), to_dot(st.at));
    else if (s == "atw")
      emit(s, format_boolean_automaton(st.atw.automaton), to_dot(st.atw.automaton));
    else if (s == "h")
      emit(s, format_boolean_automaton(st.h.automaton), to_dot(st.h.automaton));
  }
  if (st.atw.dropped > 0) {
    std::cerr << st.atw.dropped << " ATW transitions dropped (o outside every T register)\n";
    for (const auto& line : st.atw.dropped_log)
      std::cerr << "  " << line << "\n";
  }
  return kOk;
}

int cmd_selftest()
{
  int failures = 0;
  auto line = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    failures += ok ? 0 : 1;
  };
  const auto fig1 = fixtures::fig1();
  line("fig2 satisfies fig1", model_check(fixtures::fig2(), fig1).holds);
  line("never-grant violates fig1", !model_check(fixtures::never_grant(), fig1).holds);
  {
    const SynthesisInterface iface{SignalSet({"req"}), SignalSet({"grant"}), 1, 0};
    const auto r = bounded_synthesis(fig1, iface, 4);
    line("fig1 realizable with one register",
         r.status == SynthesisStatus::Realized && model_check(*r.transducer, fig1).holds);
  }
  {
    bool ok = true;
    for (std::size_t k = 0; k <= 5; ++k)
      ok = ok && build_verifier(k).automaton.num_states() == bell_number(k);
    line("verifier has Bell(k) states", ok);
  }
  {
    auto r = conversion2(fixtures::fig4());
    line("fig4 converts",
         std::holds_alternative<RegisterAutomaton>(r) &&
             std::get<RegisterAutomaton>(r).num_states() == 6);
  }
  {
    auto r = formula_to_spec(negate(parse_formula(fixtures::kNeverEqual)));
    line("exists x . G(i != x) aborts", std::holds_alternative<Abort>(r));
  }
  return failures == 0 ? kOk : 1;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Synthesis and model checking for register automata"};
  app.require_subcommand(1);

  SynthOptions so;
  auto* synth = app.add_subcommand("synth", "synthesize a register transducer");
  synth->add_option("--spec", so.spec, "specification (.ra or .ltleq)")->required();
  synth->add_option("--inputs", so.inputs, "input signals, comma separated");
  synth->add_option("--outputs", so.outputs, "output signals, comma separated");
  synth->add_option("--kt", so.kt, "transducer registers")->check(CLI::PositiveNumber);
  synth->add_option("--kt-search", so.kt_max,
                    "also try k_T up to this value (heuristic, not a decision procedure)");
  synth->add_option("--max-bound", so.max_bound, "largest counter bound");
  synth->add_option("--out", so.out, "transducer file (.rt); stdout if omitted");
  synth->add_option("--dot", so.dot, "transducer as DOT");
  synth->add_option("--report", so.report, "run report");
  synth->add_flag("--timings", so.timings, "include stage timings in the report");

  CheckOptions co;
  auto* check = app.add_subcommand("check", "model check a transducer against a specification");
  check->add_option("--trans", co.trans, "transducer (.rt)")->required();
  check->add_option("--spec", co.spec, "specification (.ra)")->required();
  check->add_option("--cex", co.cex, "counterexample file (.dw)");
  check->add_option("--report", co.report, "run report");
  check->add_flag("--timings", co.timings, "include timings in the report");

  Ltl2RaOptions lo;
  auto* ltl2ra = app.add_subcommand("ltl2ra", "translate an LTL(EQ) formula");
  ltl2ra->add_option("--formula", lo.formula, "formula file (.ltleq)")->required();
  ltl2ra->add_option("--out", lo.out, "output file; stdout if omitted");
  ltl2ra->add_option("--stage", lo.stage, "nbw, guess or ra")
      ->check(CLI::IsMember({"nbw", "guess", "ra"}));
  ltl2ra->add_option("--signals", lo.signals, "Boolean signals, comma separated");
  ltl2ra->add_option("--dot", lo.dot, "result as DOT");
  ltl2ra->add_flag("--verify", lo.verify, "compare with the formula on 5 random lassos");

  DumpOptions dopt;
  dopt.stages = {"ab", "v", "abv", "tall", "at", "atw", "h"};
  auto* dump = app.add_subcommand("dump", "write the intermediate automata of the reduction");
  dump->add_option("--spec", dopt.spec, "specification (.ra)")->required();
  dump->add_option("--inputs", dopt.inputs, "input signals, comma separated");
  dump->add_option("--outputs", dopt.outputs, "output signals, comma separated");
  dump->add_option("--kt", dopt.kt, "transducer registers")->check(CLI::PositiveNumber);
  dump->add_option("--emit-stage", dopt.stages, "ab,v,abv,tall,at,atw,h")
      ->delimiter(',')
      ->check(CLI::IsMember({"ab", "v", "abv", "tall", "at", "atw", "h"}));
  dump->add_option("--dir", dopt.dir, "output directory");
  dump->add_flag("--dot", dopt.dot, "also write DOT files");

  auto* selftest = app.add_subcommand("selftest", "check the figure fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*synth)
      return cmd_synth(so);
    if (*check)
      return cmd_check(co);
    if (*ltl2ra)
      return cmd_ltl2ra(lo);
    if (*dump)
      return cmd_dump(dopt);
    if (*selftest)
      return cmd_selftest();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
