#include "regsynth/format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "regsynth/guessing.hpp"

namespace regsynth {

namespace {

std::string trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos)
      return out;
    start = pos + 1;
  }
}

[[noreturn]] void fail(int line, const std::string& msg)
{
  throw Error("line " + std::to_string(line) + ": " + msg);
}

struct Record {
  int line = 0;
  std::string section;
  std::vector<std::string> fields;
};

struct Document {
  std::map<std::string, std::pair<int, std::string>> keys;
  std::vector<Record> records;

  bool has(const std::string& k) const { return keys.count(k) != 0; }
  int line_of(const std::string& k) const { return has(k) ? keys.at(k).first : 0; }
  const std::string& get(const std::string& k) const
  {
    auto it = keys.find(k);
    if (it == keys.end())
      throw Error("missing header line '" + k + ":'");
    return it->second.second;
  }
};

Document read_document(std::string_view text, const std::set<std::string>& allowed,
                       const std::set<std::string>& sections = {})
{
  Document doc;
  std::string section;
  int number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    const auto line = trim(raw);
    if (line.empty())
      continue;
    if (line[0] == '#') {
      if (line.rfind("# regsynth-format", 0) == 0 && line != kFormatHeader)
        fail(number, "unsupported format version '" + line + "'");
      continue;
    }
    if (line.find('|') != std::string::npos) {
      doc.records.push_back({number, section, split(line, '|')});
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      fail(number, "expected 'key: value' or a '|'-separated record");
    const auto key = trim(std::string_view(line).substr(0, colon));
    const auto value = trim(std::string_view(line).substr(colon + 1));
    if (sections.count(key)) {
      if (!value.empty())
        fail(number, "section marker '" + key + ":' takes no value");
      section = key;
      continue;
    }
    if (!allowed.count(key))
      fail(number, "unknown key '" + key + "'");
    if (!doc.keys.emplace(key, std::make_pair(number, value)).second)
      fail(number, "duplicate key '" + key + "'");
  }
  return doc;
}

std::vector<std::string> name_list(const std::string& value)
{
  if (value.empty() || value == "-")
    return {};
  auto names = split(value, ',');
  for (const auto& n : names)
    if (n.empty() || n.find_first_of(" \t|") != std::string::npos)
      throw Error("invalid name '" + n + "' in list '" + value + "'");
  return names;
}

std::string list_or_dash(const std::vector<std::string>& names)
{
  return names.empty() ? "-" : join(names, ", ");
}

int index_in(const std::vector<std::string>& names, const std::string& n, int line,
             const std::string& what)
{
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end())
    fail(line, "unknown " + what + " '" + n + "'");
  return static_cast<int>(it - names.begin());
}

std::vector<int> state_list(const Document& doc, const std::string& key,
                            const std::vector<std::string>& states)
{
  std::vector<int> out;
  for (const auto& n : name_list(doc.get(key)))
    out.push_back(index_in(states, n, doc.line_of(key), "state"));
  return out;
}

DataValue parse_value(const std::string& s, int line)
{
  DataValue v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    fail(line, "expected a natural number, got '" + s + "'");
  return v;
}

Cube parse_bits(const std::string& s, std::size_t k, bool allow_free, int line,
                const std::string& what)
{
  if (s == "-" || s.empty()) {
    if (k != 0)
      fail(line, what + " must have length " + std::to_string(k));
    return {};
  }
  if (s == "*" && allow_free)
    return Cube::any();
  if (s.size() != k)
    fail(line, what + " '" + s + "' must have length " + std::to_string(k));
  Cube c;
  for (std::size_t j = 0; j < k; ++j) {
    if (s[j] == '1')
      c = c.with(j, true);
    else if (s[j] == '0')
      c = c.with(j, false);
    else if (!(s[j] == '*' && allow_free))
      fail(line, "invalid character '" + std::string(1, s[j]) + "' in " + what);
  }
  return c;
}

std::uint64_t parse_exact_bits(const std::string& s, std::size_t k, int line,
                               const std::string& what)
{
  return parse_bits(s, k, false, line, what).value;
}

std::string bits_or_dash(const Cube& c, std::size_t k)
{
  return k == 0 ? "-" : cube_string(c, k);
}

std::string exact_or_dash(std::uint64_t bits, std::size_t k)
{
  return k == 0 ? "-" : bit_string(bits, k);
}

Cube letter_at(const std::string& s, const SignalSet& sig, int line)
{
  try {
    return parse_letter(s, sig);
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

Letter exact_letter_at(const std::string& s, const SignalSet& sig, int line)
{
  auto c = letter_at(s, sig, line);
  if (c.care != low_mask(sig.size()))
    fail(line, "letter '" + s + "' must fix every signal");
  return c.value;
}

Acceptance parse_mode(const std::string& s, int line)
{
  if (s == "universal-co-buchi")
    return Acceptance::UniversalCoBuchi;
  if (s == "nondeterministic-buchi")
    return Acceptance::NondeterministicBuchi;
  fail(line, "unknown mode '" + s + "'");
}

void expect_fields(const Record& r, std::size_t n)
{
  if (r.fields.size() != n)
    fail(r.line, "expected " + std::to_string(n) + " '|'-separated fields, got " +
                     std::to_string(r.fields.size()));
}

void expect_no_section(const Record& r)
{
  if (!r.section.empty())
    fail(r.line, "records are not allowed inside section '" + r.section + "'");
}

std::string escape(const std::string& s)
{
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

std::string guard_label(const Guard& g, const std::vector<std::string>& regs)
{
  std::vector<std::string> atoms;
  for (std::size_t m = 0; m < regs.size(); ++m) {
    if (!g.in.is_free(m))
      atoms.push_back(std::string("i") + (g.in.is_true(m) ? "=" : "!=") + regs[m]);
    if (!g.out.is_free(m))
      atoms.push_back(std::string("o") + (g.out.is_true(m) ? "=" : "!=") + regs[m]);
  }
  return atoms.empty() ? "true" : join(atoms, " & ");
}

std::string store_label(std::uint64_t store, const std::vector<std::string>& regs)
{
  std::vector<std::string> parts;
  for (std::size_t m = 0; m < regs.size(); ++m)
    if (test_bit(store, m))
      parts.push_back(regs[m]);
  return parts.empty() ? "" : "store " + join(parts, ",");
}

}  // namespace

Cube parse_letter(std::string_view text, const SignalSet& signals)
{
  const auto s = trim(text);
  if (s == "*")
    return Cube::any();
  Cube c = Cube::exact(0, signals.size());
  if (s == "-" || s.empty())
    return c;
  for (auto item : split(s, ',')) {
    bool negated = false, free = false;
    if (!item.empty() && item[0] == '!') {
      negated = true;
      item = trim(item.substr(1));
    }
    if (!item.empty() && item.back() == '?') {
      free = true;
      item = trim(item.substr(0, item.size() - 1));
    }
    if (negated && free)
      throw Error("letter item '" + item + "' cannot be both negated and free");
    const int j = signals.index_of(item);
    if (j < 0)
      throw Error("unknown signal '" + item + "'");
    c = free ? c.without(j) : c.with(j, !negated);
  }
  return c;
}

std::string format_letter(const Cube& c, const SignalSet& signals)
{
  const auto all = low_mask(signals.size());
  if ((c.care & all) == 0)
    return "*";
  std::vector<std::string> items;
  for (std::size_t j = 0; j < signals.size(); ++j) {
    if (c.is_free(j))
      items.push_back(signals[j] + "?");
    else if (c.is_true(j))
      items.push_back(signals[j]);
  }
  return items.empty() ? "-" : join(items, ", ");
}

std::string format_letter(Letter l, const SignalSet& signals)
{
  return format_letter(Cube::exact(l, signals.size()), signals);
}

RegisterAutomaton parse_register_automaton(std::string_view text)
{
  auto doc = read_document(text, {"mode", "bool_signals", "registers", "init_value", "states",
                                  "initial", "accepting"});
  RegisterAutomaton a;
  a.mode = parse_mode(doc.get("mode"), doc.line_of("mode"));
  try {
    a.signals = SignalSet(name_list(doc.get("bool_signals")));
  } catch (const Error& e) {
    fail(doc.line_of("bool_signals"), e.what());
  }
  a.registers = name_list(doc.get("registers"));
  if (doc.has("init_value"))
    a.init_value = parse_value(doc.get("init_value"), doc.line_of("init_value"));
  a.states = name_list(doc.get("states"));
  a.initial = index_in(a.states, doc.get("initial"), doc.line_of("initial"), "state");
  a.accepting = state_list(doc, "accepting", a.states);
  const auto k = a.registers.size();
  for (const auto& r : doc.records) {
    expect_no_section(r);
    expect_fields(r, 6);
    RaTransition t;
    t.src = index_in(a.states, r.fields[0], r.line, "state");
    t.letter = letter_at(r.fields[1], a.signals, r.line);
    t.guard.in = parse_bits(r.fields[2], k, true, r.line, "i-guard");
    t.guard.out = parse_bits(r.fields[3], k, true, r.line, "o-guard");
    t.store = parse_exact_bits(r.fields[4], k, r.line, "store");
    t.dst = index_in(a.states, r.fields[5], r.line, "state");
    a.transitions.push_back(t);
  }
  a.normalize();
  return a;
}

std::string format_register_automaton(const RegisterAutomaton& a)
{
  std::ostringstream os;
  const auto k = a.num_registers();
  os << kFormatHeader << "\n";
  os << "mode: " << to_string(a.mode) << "\n";
  os << "bool_signals: " << list_or_dash(a.signals.names()) << "\n";
  os << "registers: " << list_or_dash(a.registers) << "\n";
  os << "init_value: " << a.init_value << "\n";
  os << "states: " << list_or_dash(a.states) << "\n";
  os << "initial: " << a.states.at(a.initial) << "\n";
  std::vector<std::string> acc;
  for (int q : a.accepting)
    acc.push_back(a.states.at(q));
  os << "accepting: " << list_or_dash(acc) << "\n";
  for (const auto& t : a.transitions)
    os << a.states.at(t.src) << " | " << format_letter(t.letter, a.signals) << " | "
       << bits_or_dash(t.guard.in, k) << " | " << bits_or_dash(t.guard.out, k) << " | "
       << exact_or_dash(t.store, k) << " | " << a.states.at(t.dst) << "\n";
  return os.str();
}

BooleanAutomaton parse_boolean_automaton(std::string_view text)
{
  auto ra = parse_register_automaton(text);
  if (ra.num_registers() != 0)
    throw Error("a Boolean automaton declares no registers (registers: -)");
  BooleanAutomaton b;
  b.mode = ra.mode;
  b.signals = ra.signals;
  b.states = ra.states;
  b.initial = ra.initial;
  b.accepting = ra.accepting;
  for (const auto& t : ra.transitions)
    b.transitions.push_back({t.src, t.letter, t.dst});
  b.normalize();
  return b;
}

std::string format_boolean_automaton(const BooleanAutomaton& b)
{
  RegisterAutomaton ra;
  ra.mode = b.mode;
  ra.signals = b.signals;
  ra.states = b.states;
  ra.initial = b.initial;
  ra.accepting = b.accepting;
  for (const auto& t : b.transitions)
    ra.transitions.push_back({t.src, t.label, {}, 0, t.dst});
  return format_register_automaton(ra);
}

namespace {

struct TransducerDoc {
  Document doc;
  SignalSet inputs;
  SignalSet outputs;
  std::vector<std::string> registers;
  std::vector<std::string> states;
  int initial = 0;
  DataValue init_value = 0;
  int default_reg = 0;
  bool default_self = false;
};

TransducerDoc read_transducer_doc(std::string_view text)
{
  TransducerDoc td;
  td.doc = read_document(text, {"inputs", "out", "registers", "init_value", "states", "initial",
                                "outreg", "default"});
  const auto& doc = td.doc;
  try {
    td.inputs = SignalSet(name_list(doc.get("inputs")));
    td.outputs = SignalSet(name_list(doc.get("out")));
  } catch (const Error& e) {
    if (std::string(e.what()).rfind("missing", 0) == 0)
      throw;
    fail(doc.line_of("inputs"), e.what());
  }
  td.registers = name_list(doc.get("registers"));
  if (doc.has("init_value"))
    td.init_value = parse_value(doc.get("init_value"), doc.line_of("init_value"));
  td.states = name_list(doc.get("states"));
  if (td.states.empty())
    throw Error("a transducer needs at least one state");
  td.initial = index_in(td.states, doc.get("initial"), doc.line_of("initial"), "state");
  if (doc.has("outreg") && doc.get("outreg") != "-") {
    td.default_reg =
        static_cast<int>(parse_value(doc.get("outreg"), doc.line_of("outreg"))) - 1;
    if (td.default_reg < 0 || static_cast<std::size_t>(td.default_reg) >= td.registers.size())
      fail(doc.line_of("outreg"), "outreg must lie in 1.." + std::to_string(td.registers.size()));
  }
  if (doc.has("default")) {
    const auto& d = doc.get("default");
    if (d == "self")
      td.default_self = true;
    else if (d != "none")
      fail(doc.line_of("default"), "default must be 'none' or 'self'");
  }
  if (td.inputs.size() + td.registers.size() > 24)
    throw Error("transducer tables support at most 24 input signals plus registers");
  return td;
}

std::string format_transducer_records(
    const std::vector<std::string>& states, const SignalSet& inputs, const SignalSet& outputs,
    std::size_t k, const std::function<TransducerMove(int, Letter, std::uint64_t)>& move)
{
  std::ostringstream os;
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (Letter l = 0; l < (Letter{1} << inputs.size()); ++l) {
      const auto first = move(static_cast<int>(s), l, 0);
      bool uniform = true;
      for (std::uint64_t g = 1; g < (std::uint64_t{1} << k); ++g)
        uniform = uniform && move(static_cast<int>(s), l, g) == first;
      auto emit = [&](const std::string& guard, const TransducerMove& m) {
        os << states[s] << " | " << format_letter(l, inputs) << " | " << guard << " | "
           << format_letter(m.outputs, outputs) << " | "
           << (k == 0 ? std::string("-") : std::to_string(m.out_reg + 1)) << " | "
           << exact_or_dash(m.store, k) << " | " << states.at(m.dst) << "\n";
      };
      if (uniform) {
        emit(k == 0 ? "-" : std::string(k, '*'), first);
      } else {
        for (std::uint64_t g = 0; g < (std::uint64_t{1} << k); ++g)
          emit(bit_string(g, k), move(static_cast<int>(s), l, g));
      }
    }
  }
  return os.str();
}

}  // namespace

RegisterTransducer parse_register_transducer(std::string_view text)
{
  auto td = read_transducer_doc(text);
  if (td.registers.empty())
    throw Error("a register transducer needs at least one register");
  RegisterTransducer t;
  t.inputs = td.inputs;
  t.outputs = td.outputs;
  t.registers = td.registers;
  t.init_value = td.init_value;
  t.states = td.states;
  t.initial = td.initial;
  t.reset_table(td.default_reg);
  const auto k = t.num_registers();
  std::vector<int> defined_by(t.table.size(), 0);
  for (const auto& r : td.doc.records) {
    expect_no_section(r);
    expect_fields(r, 7);
    const int src = index_in(t.states, r.fields[0], r.line, "state");
    const Cube in = letter_at(r.fields[1], t.inputs, r.line);
    const Cube guard = parse_bits(r.fields[2], k, true, r.line, "i-guard");
    TransducerMove m;
    m.outputs = exact_letter_at(r.fields[3], t.outputs, r.line);
    m.out_reg = static_cast<int>(parse_value(r.fields[4], r.line)) - 1;
    if (m.out_reg < 0 || static_cast<std::size_t>(m.out_reg) >= k)
      fail(r.line, "outreg must lie in 1.." + std::to_string(k));
    m.store = parse_exact_bits(r.fields[5], k, r.line, "store");
    m.dst = index_in(t.states, r.fields[6], r.line, "state");
    in.for_each_minterm(t.inputs.size(), [&](Letter l) {
      guard.for_each_minterm(k, [&](std::uint64_t g) {
        const auto idx = t.index(src, l, g);
        if (defined_by[idx] && !(t.table[idx] == m))
          fail(r.line, "conflicts with the record on line " + std::to_string(defined_by[idx]));
        t.table[idx] = m;
        defined_by[idx] = r.line;
      });
    });
  }
  if (!td.default_self) {
    for (std::size_t idx = 0; idx < t.table.size(); ++idx)
      if (!defined_by[idx])
        throw Error("transition function is not total (no record covers case #" +
                    std::to_string(idx) + "); add records or 'default: self'");
  }
  return t;
}

std::string format_register_transducer(const RegisterTransducer& t)
{
  std::ostringstream os;
  os << kFormatHeader << "\n";
  os << "inputs: " << list_or_dash(t.inputs.names()) << "\n";
  os << "out: " << list_or_dash(t.outputs.names()) << "\n";
  os << "registers: " << list_or_dash(t.registers) << "\n";
  os << "init_value: " << t.init_value << "\n";
  os << "states: " << list_or_dash(t.states) << "\n";
  os << "initial: " << t.states.at(t.initial) << "\n";
  os << "default: none\n";
  os << format_transducer_records(t.states, t.inputs, t.outputs, t.num_registers(),
                                  [&](int s, Letter l, std::uint64_t g) { return t.move(s, l, g); });
  return os.str();
}

BooleanTransducer parse_boolean_transducer(std::string_view text)
{
  auto td = read_transducer_doc(text);
  if (!td.registers.empty())
    throw Error("a Boolean transducer declares no registers (registers: -)");
  BooleanTransducer t;
  t.inputs = td.inputs;
  t.outputs = td.outputs;
  t.states = td.states;
  t.initial = td.initial;
  t.table.assign(t.states.size() << t.inputs.size(), MealyMove{});
  for (std::size_t s = 0; s < t.states.size(); ++s)
    for (Letter l = 0; l < (Letter{1} << t.inputs.size()); ++l)
      t.table[(s << t.inputs.size()) | l] = MealyMove{0, static_cast<int>(s)};
  std::vector<int> defined_by(t.table.size(), 0);
  for (const auto& r : td.doc.records) {
    expect_no_section(r);
    expect_fields(r, 7);
    const int src = index_in(t.states, r.fields[0], r.line, "state");
    const Cube in = letter_at(r.fields[1], t.inputs, r.line);
    parse_bits(r.fields[2], 0, true, r.line, "i-guard");
    MealyMove m{exact_letter_at(r.fields[3], t.outputs, r.line),
                index_in(t.states, r.fields[6], r.line, "state")};
    if (r.fields[4] != "-" || (r.fields[5] != "-" && !r.fields[5].empty()))
      fail(r.line, "outreg and store are '-' in a Boolean transducer");
    in.for_each_minterm(t.inputs.size(), [&](Letter l) {
      const auto idx = (static_cast<std::size_t>(src) << t.inputs.size()) | l;
      if (defined_by[idx] && !(t.table[idx] == m))
        fail(r.line, "conflicts with the record on line " + std::to_string(defined_by[idx]));
      t.table[idx] = m;
      defined_by[idx] = r.line;
    });
  }
  if (!td.default_self)
    for (std::size_t idx = 0; idx < t.table.size(); ++idx)
      if (!defined_by[idx])
        throw Error("transition function is not total; add records or 'default: self'");
  return t;
}

std::string format_boolean_transducer(const BooleanTransducer& t)
{
  std::ostringstream os;
  os << kFormatHeader << "\n";
  os << "inputs: " << list_or_dash(t.inputs.names()) << "\n";
  os << "out: " << list_or_dash(t.outputs.names()) << "\n";
  os << "registers: -\n";
  os << "states: " << list_or_dash(t.states) << "\n";
  os << "initial: " << t.states.at(t.initial) << "\n";
  os << "default: none\n";
  os << format_transducer_records(t.states, t.inputs, t.outputs, 0,
                                  [&](int s, Letter l, std::uint64_t) {
                                    const auto& m = t.move(s, l);
                                    return TransducerMove{m.outputs, 0, 0, m.dst};
                                  });
  return os.str();
}

DataWord parse_data_word(std::string_view text)
{
  auto doc = read_document(text, {"bool_signals"}, {"prefix", "loop"});
  DataWord w;
  try {
    w.signals = SignalSet(name_list(doc.get("bool_signals")));
  } catch (const Error& e) {
    if (std::string(e.what()).rfind("missing", 0) == 0)
      throw;
    fail(doc.line_of("bool_signals"), e.what());
  }
  for (const auto& r : doc.records) {
    expect_fields(r, 3);
    DataLetter l{exact_letter_at(r.fields[0], w.signals, r.line), parse_value(r.fields[1], r.line),
                 parse_value(r.fields[2], r.line)};
    if (r.section == "prefix")
      w.prefix.push_back(l);
    else if (r.section == "loop")
      w.loop.push_back(l);
    else
      fail(r.line, "data-word records belong after 'prefix:' or 'loop:'");
  }
  if (w.loop.empty())
    throw Error("a data word needs a non-empty loop");
  return w;
}

std::string format_data_word(const DataWord& w)
{
  std::ostringstream os;
  os << kFormatHeader << "\n";
  os << "bool_signals: " << list_or_dash(w.signals.names()) << "\n";
  os << "prefix:\n";
  for (const auto& l : w.prefix)
    os << format_letter(l.signals, w.signals) << " | " << l.in << " | " << l.out << "\n";
  os << "loop:\n";
  for (const auto& l : w.loop)
    os << format_letter(l.signals, w.signals) << " | " << l.in << " | " << l.out << "\n";
  return os.str();
}

GuessingAutomaton parse_guessing_automaton(std::string_view text)
{
  auto doc = read_document(text, {"mode", "bool_signals", "registers", "inequalities", "states",
                                  "initial", "accepting"});
  if (doc.has("mode") && doc.get("mode") != "nondeterministic-buchi")
    fail(doc.line_of("mode"), "guessing automata are nondeterministic-buchi");
  GuessingAutomaton a;
  a.signals = SignalSet(name_list(doc.get("bool_signals")));
  a.registers = name_list(doc.get("registers"));
  a.states = name_list(doc.get("states"));
  a.initial = index_in(a.states, doc.get("initial"), doc.line_of("initial"), "state");
  a.accepting = state_list(doc, "accepting", a.states);
  if (doc.has("inequalities")) {
    const auto& ineq = doc.get("inequalities");
    for (const auto& item : ineq == "-" ? std::vector<std::string>{} : split(ineq, ',')) {
      const auto ne = item.find("!=");
      if (ne == std::string::npos)
        fail(doc.line_of("inequalities"), "expected 'r != s', got '" + item + "'");
      const int x = index_in(a.registers, trim(item.substr(0, ne)), doc.line_of("inequalities"),
                             "register");
      const int y = index_in(a.registers, trim(item.substr(ne + 2)), doc.line_of("inequalities"),
                             "register");
      a.inequalities.emplace_back(x, y);
    }
  }
  const auto k = a.registers.size();
  for (const auto& r : doc.records) {
    expect_no_section(r);
    expect_fields(r, 5);
    GaTransition t;
    t.src = index_in(a.states, r.fields[0], r.line, "state");
    t.letter = letter_at(r.fields[1], a.signals, r.line);
    t.guard.in = parse_bits(r.fields[2], k, true, r.line, "i-guard");
    t.guard.out = parse_bits(r.fields[3], k, true, r.line, "o-guard");
    t.dst = index_in(a.states, r.fields[4], r.line, "state");
    a.transitions.push_back(t);
  }
  return a;
}

std::string format_guessing_automaton(const GuessingAutomaton& a)
{
  std::ostringstream os;
  const auto k = a.num_registers();
  os << kFormatHeader << "\n";
  os << "mode: nondeterministic-buchi\n";
  os << "bool_signals: " << list_or_dash(a.signals.names()) << "\n";
  os << "registers: " << list_or_dash(a.registers) << "\n";
  std::vector<std::string> ineq;
  for (auto [x, y] : a.inequalities)
    ineq.push_back(a.registers.at(x) + " != " + a.registers.at(y));
  os << "inequalities: " << list_or_dash(ineq) << "\n";
  os << "states: " << list_or_dash(a.states) << "\n";
  os << "initial: " << a.states.at(a.initial) << "\n";
  std::vector<std::string> acc;
  for (int q : a.accepting)
    acc.push_back(a.states.at(q));
  os << "accepting: " << list_or_dash(acc) << "\n";
  for (const auto& t : a.transitions)
    os << a.states.at(t.src) << " | " << format_letter(t.letter, a.signals) << " | "
       << bits_or_dash(t.guard.in, k) << " | " << bits_or_dash(t.guard.out, k) << " | "
       << a.states.at(t.dst) << "\n";
  return os.str();
}

std::string to_dot(const RegisterAutomaton& a)
{
  std::ostringstream os;
  const auto acc = a.accepting_mask();
  os << "digraph automaton {\n  rankdir=LR;\n  init [shape=point];\n";
  for (std::size_t q = 0; q < a.states.size(); ++q)
    os << "  n" << q << " [label=\"" << escape(a.states[q]) << "\", shape="
       << (acc[q] ? "doublecircle" : "circle") << "];\n";
  os << "  init -> n" << a.initial << ";\n";
  for (const auto& t : a.transitions) {
    std::string label = format_letter(t.letter, a.signals);
    const auto g = guard_label(t.guard, a.registers);
    if (g != "true")
      label += " ; " + g;
    const auto st = store_label(t.store, a.registers);
    if (!st.empty())
      label += " / " + st;
    os << "  n" << t.src << " -> n" << t.dst << " [label=\"" << escape(label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const BooleanAutomaton& a)
{
  std::ostringstream os;
  const auto acc = a.accepting_mask();
  os << "digraph automaton {\n  rankdir=LR;\n  init [shape=point];\n";
  for (std::size_t q = 0; q < a.states.size(); ++q)
    os << "  n" << q << " [label=\"" << escape(a.states[q]) << "\", shape="
       << (acc[q] ? "doublecircle" : "circle") << "];\n";
  os << "  init -> n" << a.initial << ";\n";
  for (const auto& t : a.transitions)
    os << "  n" << t.src << " -> n" << t.dst << " [label=\""
       << escape(format_letter(t.label, a.signals)) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const RegisterTransducer& t)
{
  std::ostringstream os;
  const auto k = t.num_registers();
  os << "digraph transducer {\n  rankdir=LR;\n  init [shape=point];\n";
  for (std::size_t s = 0; s < t.states.size(); ++s)
    os << "  n" << s << " [label=\"" << escape(t.states[s]) << "\", shape=circle];\n";
  os << "  init -> n" << t.initial << ";\n";
  for (std::size_t s = 0; s < t.states.size(); ++s)
    for (Letter l = 0; l < (Letter{1} << t.inputs.size()); ++l)
      for (std::uint64_t g = 0; g < (std::uint64_t{1} << k); ++g) {
        const auto& m = t.move(static_cast<int>(s), l, g);
        Guard guard{Cube::exact(g, k), {}};
        std::string label = format_letter(l, t.inputs) + " ; " + guard_label(guard, t.registers) +
                            " / " + format_letter(m.outputs, t.outputs) + ", o=" +
                            t.registers[m.out_reg];
        const auto st = store_label(m.store, t.registers);
        if (!st.empty())
          label += ", " + st;
        os << "  n" << s << " -> n" << m.dst << " [label=\"" << escape(label) << "\"];\n";
      }
  os << "}\n";
  return os.str();
}

std::string to_dot(const BooleanTransducer& t)
{
  std::ostringstream os;
  os << "digraph mealy {\n  rankdir=LR;\n  init [shape=point];\n";
  for (std::size_t s = 0; s < t.states.size(); ++s)
    os << "  n" << s << " [label=\"" << escape(t.states[s]) << "\", shape=circle];\n";
  os << "  init -> n" << t.initial << ";\n";
  for (std::size_t s = 0; s < t.states.size(); ++s)
    for (Letter l = 0; l < (Letter{1} << t.inputs.size()); ++l) {
      const auto& m = t.move(static_cast<int>(s), l);
      os << "  n" << s << " -> n" << m.dst << " [label=\""
         << escape(format_letter(l, t.inputs) + " / " + format_letter(m.outputs, t.outputs))
         << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace regsynth
