#include "regsynth/ltleq.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "regsynth/associate.hpp"
#include "regsynth/modelcheck.hpp"
#include "regsynth/semantics.hpp"

namespace regsynth {

namespace {

NodePtr node(NodeKind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr)
{
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

}  // namespace

NodePtr make_true() { return node(NodeKind::True); }

NodePtr make_prop(std::string name)
{
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Prop;
  n->prop = std::move(name);
  return n;
}

NodePtr make_in_eq(int var)
{
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::InEq;
  n->var = var;
  return n;
}

NodePtr make_out_eq(int var)
{
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::OutEq;
  n->var = var;
  return n;
}

NodePtr make_not(NodePtr a) { return node(NodeKind::Not, std::move(a)); }
NodePtr make_and(NodePtr a, NodePtr b) { return node(NodeKind::And, std::move(a), std::move(b)); }
NodePtr make_until(NodePtr a, NodePtr b)
{
  return node(NodeKind::Until, std::move(a), std::move(b));
}
NodePtr make_next(NodePtr a) { return node(NodeKind::Next, std::move(a)); }

namespace {

NodePtr make_or(NodePtr a, NodePtr b)
{
  return make_not(make_and(make_not(std::move(a)), make_not(std::move(b))));
}
NodePtr make_implies(NodePtr a, NodePtr b) { return make_or(make_not(std::move(a)), std::move(b)); }
NodePtr make_eventually(NodePtr a) { return make_until(make_true(), std::move(a)); }
NodePtr make_always(NodePtr a) { return make_not(make_eventually(make_not(std::move(a)))); }

void collect_props(const NodePtr& n, std::vector<std::string>& out)
{
  if (!n)
    return;
  if (n->kind == NodeKind::Prop && std::find(out.begin(), out.end(), n->prop) == out.end())
    out.push_back(n->prop);
  collect_props(n->lhs, out);
  collect_props(n->rhs, out);
}

}  // namespace

std::vector<std::string> LtlEqFormula::props() const
{
  std::vector<std::string> out;
  collect_props(body, out);
  return out;
}

ParseError::ParseError(int line_, int column_, const std::string& msg)
    : Error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg),
      line(line_),
      column(column_)
{
}

namespace {

struct Token {
  enum Kind { Ident, Sym, End } kind = End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view s)
{
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t j = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t m = 0; m < n; ++m, ++j) {
      if (s[j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (j < s.size()) {
    const char c = s[j];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (j < s.size() && s[j] != '\n')
        advance(1);
      continue;
    }
    Token t{Token::Sym, "", line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t e = j;
      while (e < s.size() && (std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_'))
        ++e;
      t.kind = Token::Ident;
      t.text = std::string(s.substr(j, e - j));
      advance(e - j);
      out.push_back(t);
      continue;
    }
    for (const char* sym : {"<->", "->", "!=", "(", ")", ".", "!", "=", "&", "|"}) {
      const std::string_view sv(sym);
      if (s.substr(j, sv.size()) == sv) {
        t.text = sym;
        break;
      }
    }
    if (t.text.empty())
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    advance(t.text.size());
    out.push_back(t);
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

const std::set<std::string> kKeywords{"forall", "exists", "true", "false", "X", "F",
                                      "G",      "U",      "i",    "o"};

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  LtlEqFormula spec()
  {
    LtlEqFormula f;
    const auto& q = peek();
    if (is("forall"))
      f.quantifier = Quantifier::Forall;
    else if (is("exists"))
      f.quantifier = Quantifier::Exists;
    else
      fail(q, "expected 'forall' or 'exists'");
    next();
    while (peek().kind == Token::Ident) {
      const auto& v = next();
      if (kKeywords.count(v.text))
        fail(v, "'" + v.text + "' cannot be a data variable");
      if (std::find(f.vars.begin(), f.vars.end(), v.text) != f.vars.end())
        fail(v, "data variable '" + v.text + "' is quantified twice");
      f.vars.push_back(v.text);
    }
    if (f.vars.empty())
      fail(peek(), "expected at least one data variable");
    vars_ = &f.vars;
    expect(".");
    if (is("true")) {
      next();
    } else {
      while (true) {
        const int x = variable();
        expect("!=");
        const int y = variable();
        if (x == y)
          fail(toks_[pos_ - 1], "a variable cannot differ from itself");
        f.cond.emplace_back(std::min(x, y), std::max(x, y));
        if (!is("&"))
          break;
        next();
      }
      std::sort(f.cond.begin(), f.cond.end());
      f.cond.erase(std::unique(f.cond.begin(), f.cond.end()), f.cond.end());
    }
    expect(".");
    f.body = formula();
    if (peek().kind != Token::End)
      fail(peek(), "unexpected '" + peek().text + "' after the formula");
    return f;
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* vars_ = nullptr;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool is(const std::string& text) const
  {
    return peek().kind != Token::End && peek().text == text;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const
  {
    throw ParseError(t.line, t.column, msg);
  }
  void expect(const std::string& text)
  {
    if (!is(text))
      fail(peek(), "expected '" + text + "'" +
                       (peek().kind == Token::End ? " before end of input"
                                                  : ", got '" + peek().text + "'"));
    next();
  }
  int variable()
  {
    const auto& t = peek();
    if (t.kind != Token::Ident)
      fail(t, "expected a data variable");
    next();
    auto it = std::find(vars_->begin(), vars_->end(), t.text);
    if (it == vars_->end())
      fail(t, "unbound data variable '" + t.text + "'");
    return static_cast<int>(it - vars_->begin());
  }

  NodePtr formula()
  {
    auto a = implication();
    while (is("<->")) {
      next();
      auto b = implication();
      a = make_and(make_implies(a, b), make_implies(b, a));
    }
    return a;
  }
  NodePtr implication()
  {
    auto a = disjunction();
    if (is("->")) {
      next();
      return make_implies(a, implication());
    }
    return a;
  }
  NodePtr disjunction()
  {
    auto a = conjunction();
    while (is("|")) {
      next();
      a = make_or(a, conjunction());
    }
    return a;
  }
  NodePtr conjunction()
  {
    auto a = until();
    while (is("&")) {
      next();
      a = make_and(a, until());
    }
    return a;
  }
  NodePtr until()
  {
    auto a = unary();
    if (is("U")) {
      next();
      return make_until(a, until());
    }
    return a;
  }
  NodePtr unary()
  {
    if (is("!")) {
      next();
      return make_not(unary());
    }
    if (is("X")) {
      next();
      return make_next(unary());
    }
    if (is("F")) {
      next();
      return make_eventually(unary());
    }
    if (is("G")) {
      next();
      return make_always(unary());
    }
    return atom();
  }
  NodePtr atom()
  {
    const auto& t = peek();
    if (t.kind == Token::End)
      fail(t, "unexpected end of input");
    if (is("(")) {
      next();
      auto a = formula();
      expect(")");
      return a;
    }
    if (t.kind != Token::Ident)
      fail(t, "unexpected '" + t.text + "'");
    next();
    if (t.text == "true")
      return make_true();
    if (t.text == "false")
      return make_not(make_true());
    if (t.text == "i" || t.text == "o") {
      bool negated = false;
      if (is("!=")) {
        negated = true;
      } else if (!is("=")) {
        fail(peek(), "expected '=' or '!=' after '" + t.text + "'");
      }
      next();
      const int v = variable();
      auto a = t.text == "i" ? make_in_eq(v) : make_out_eq(v);
      return negated ? make_not(a) : a;
    }
    if (kKeywords.count(t.text))
      fail(t, "unexpected '" + t.text + "'");
    return make_prop(t.text);
  }
};

std::string print(const NodePtr& n, const std::vector<std::string>& vars)
{
  switch (n->kind) {
  case NodeKind::True:
    return "true";
  case NodeKind::Prop:
    return n->prop;
  case NodeKind::InEq:
    return "i = " + vars.at(n->var);
  case NodeKind::OutEq:
    return "o = " + vars.at(n->var);
  case NodeKind::Not: {
    const auto& a = n->lhs;
    if (a->kind == NodeKind::True)
      return "false";
    if (a->kind == NodeKind::InEq)
      return "i != " + vars.at(a->var);
    if (a->kind == NodeKind::OutEq)
      return "o != " + vars.at(a->var);
    if (a->kind == NodeKind::Until && a->lhs->kind == NodeKind::True &&
        a->rhs->kind == NodeKind::Not)
      return "G " + print(a->rhs->lhs, vars);
    if (a->kind == NodeKind::Not)
      return "!" + print(a, vars);
    if (a->kind == NodeKind::And && a->lhs->kind == NodeKind::Not &&
        a->lhs->lhs->kind == NodeKind::Not && a->rhs->kind == NodeKind::Not)
      return "(" + print(a->lhs->lhs->lhs, vars) + " -> " + print(a->rhs->lhs, vars) + ")";
    if (a->kind == NodeKind::And && a->lhs->kind == NodeKind::Not &&
        a->rhs->kind == NodeKind::Not)
      return "(" + print(a->lhs->lhs, vars) + " | " + print(a->rhs->lhs, vars) + ")";
    if (a->kind == NodeKind::And && a->rhs->kind == NodeKind::Not)
      return "(" + print(a->lhs, vars) + " -> " + print(a->rhs->lhs, vars) + ")";
    return "!" + print(a, vars);
  }
  case NodeKind::And:
    return "(" + print(n->lhs, vars) + " & " + print(n->rhs, vars) + ")";
  case NodeKind::Until:
    if (n->lhs->kind == NodeKind::True)
      return "F " + print(n->rhs, vars);
    return "(" + print(n->lhs, vars) + " U " + print(n->rhs, vars) + ")";
  case NodeKind::Next:
    return "X " + print(n->lhs, vars);
  }
  return "";
}

using Truth = std::vector<char>;

Truth evaluate(const NodePtr& n, const DataWord& w, const std::vector<DataValue>& val)
{
  const auto len = w.length();
  Truth r(len, 0);
  switch (n->kind) {
  case NodeKind::True:
    r.assign(len, 1);
    break;
  case NodeKind::Prop: {
    const int j = w.signals.index_of(n->prop);
    if (j < 0)
      throw Error("the word has no signal '" + n->prop + "'");
    for (std::size_t p = 0; p < len; ++p)
      r[p] = test_bit(w.at(p).signals, j);
    break;
  }
  case NodeKind::InEq:
    for (std::size_t p = 0; p < len; ++p)
      r[p] = w.at(p).in == val[n->var];
    break;
  case NodeKind::OutEq:
    for (std::size_t p = 0; p < len; ++p)
      r[p] = w.at(p).out == val[n->var];
    break;
  case NodeKind::Not: {
    auto a = evaluate(n->lhs, w, val);
    for (std::size_t p = 0; p < len; ++p)
      r[p] = !a[p];
    break;
  }
  case NodeKind::And: {
    auto a = evaluate(n->lhs, w, val), b = evaluate(n->rhs, w, val);
    for (std::size_t p = 0; p < len; ++p)
      r[p] = a[p] && b[p];
    break;
  }
  case NodeKind::Next: {
    auto a = evaluate(n->lhs, w, val);
    for (std::size_t p = 0; p < len; ++p)
      r[p] = a[w.next(p)];
    break;
  }
  case NodeKind::Until: {
    auto a = evaluate(n->lhs, w, val), b = evaluate(n->rhs, w, val);
    r = b;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t p = len; p-- > 0;)
        if (!r[p] && a[p] && r[w.next(p)]) {
          r[p] = 1;
          changed = true;
        }
    }
    break;
  }
  }
  return r;
}

NodePtr substitute_atoms(const NodePtr& n, const std::vector<std::string>& vars)
{
  switch (n->kind) {
  case NodeKind::InEq:
    return make_prop(signal_names::g_in(vars.at(n->var)));
  case NodeKind::OutEq:
    return make_prop(signal_names::g_out(vars.at(n->var)));
  case NodeKind::True:
  case NodeKind::Prop:
    return n;
  default: {
    auto m = std::make_shared<Node>(*n);
    m->lhs = n->lhs ? substitute_atoms(n->lhs, vars) : nullptr;
    m->rhs = n->rhs ? substitute_atoms(n->rhs, vars) : nullptr;
    return m;
  }
  }
}

}  // namespace

LtlEqFormula parse_formula(std::string_view text)
{
  return Parser(text).spec();
}

std::string to_string(const LtlEqFormula& f)
{
  std::string s = f.quantifier == Quantifier::Forall ? "forall" : "exists";
  for (const auto& v : f.vars)
    s += " " + v;
  s += " . ";
  if (f.cond.empty()) {
    s += "true";
  } else {
    std::vector<std::string> parts;
    for (auto [x, y] : f.cond)
      parts.push_back(f.vars.at(x) + " != " + f.vars.at(y));
    s += join(parts, " & ");
  }
  return s + " . " + print(f.body, f.vars);
}

bool eval_formula(const LtlEqFormula& f, const DataWord& w)
{
  if (w.loop.empty())
    throw Error("a lasso word needs a non-empty loop");
  std::set<DataValue> seen;
  for (std::size_t p = 0; p < w.length(); ++p) {
    seen.insert(w.at(p).in);
    seen.insert(w.at(p).out);
  }
  std::vector<DataValue> candidates(seen.begin(), seen.end());
  const DataValue top = seen.empty() ? 0 : *seen.rbegin() + 1;
  const auto k = f.vars.size();
  for (std::size_t j = 0; j < k; ++j)
    candidates.push_back(top + static_cast<DataValue>(j));

  std::vector<std::size_t> digit(k, 0);
  std::vector<DataValue> val(k);
  const bool exists = f.quantifier == Quantifier::Exists;
  while (true) {
    for (std::size_t j = 0; j < k; ++j)
      val[j] = candidates[digit[j]];
    bool cond = true;
    for (auto [x, y] : f.cond)
      cond = cond && val[x] != val[y];
    if (cond) {
      const bool holds = evaluate(f.body, w, val)[0] != 0;
      if (exists && holds)
        return true;
      if (!exists && !holds)
        return false;
    }
    std::size_t j = 0;
    while (j < k && ++digit[j] == candidates.size())
      digit[j++] = 0;
    if (j == k)
      break;
  }
  return !exists;
}

LtlEqFormula negate(const LtlEqFormula& f)
{
  LtlEqFormula g = f;
  g.quantifier = f.quantifier == Quantifier::Forall ? Quantifier::Exists : Quantifier::Forall;
  g.body = f.body->kind == NodeKind::Not ? f.body->lhs : make_not(f.body);
  return g;
}

BooleanAutomaton conversion1_nbw(const LtlEqFormula& f, const std::optional<SignalSet>& signals)
{
  const SignalSet sig = signals ? *signals : SignalSet(f.props());
  check_user_signals(sig);
  for (const auto& p : f.props())
    if (!sig.contains(p))
      throw Error("formula signal '" + p + "' is not declared");
  std::vector<std::string> names = sig.names();
  for (const auto& v : f.vars)
    names.push_back(signal_names::g_in(v));
  for (const auto& v : f.vars)
    names.push_back(signal_names::g_out(v));
  return ltl_to_nbw(substitute_atoms(f.body, f.vars), SignalSet(names));
}

GuessingAutomaton conversion1(const LtlEqFormula& f, const std::optional<SignalSet>& signals)
{
  if (f.quantifier != Quantifier::Exists)
    throw Error("conversion-1 expects an existential formula");
  const SignalSet sig = signals ? *signals : SignalSet(f.props());
  const auto nbw = conversion1_nbw(f, sig);
  const auto p = sig.size();
  const auto k = f.vars.size();

  GuessingAutomaton g;
  g.signals = sig;
  g.registers = f.vars;
  g.states = nbw.states;
  g.initial = nbw.initial;
  g.accepting = nbw.accepting;
  g.inequalities = f.cond;
  for (const auto& t : nbw.transitions) {
    GaTransition gt;
    gt.src = t.src;
    gt.dst = t.dst;
    gt.letter = {t.label.care & low_mask(p), t.label.value & low_mask(p)};
    gt.guard.in = {(t.label.care >> p) & low_mask(k), (t.label.value >> p) & low_mask(k)};
    gt.guard.out = {(t.label.care >> (p + k)) & low_mask(k),
                    (t.label.value >> (p + k)) & low_mask(k)};
    g.transitions.push_back(gt);
  }
  std::sort(g.transitions.begin(), g.transitions.end());
  return g;
}

std::variant<RegisterAutomaton, Abort> formula_to_spec(const LtlEqFormula& f,
                                                       const std::optional<SignalSet>& signals)
{
  if (f.quantifier != Quantifier::Forall)
    throw Error("a specification formula must be universally quantified");
  auto result = conversion2(conversion1(negate(f), signals));
  if (auto* abort = std::get_if<Abort>(&result))
    return *abort;
  return dualize(std::get<RegisterAutomaton>(result));
}

}  // namespace regsynth
