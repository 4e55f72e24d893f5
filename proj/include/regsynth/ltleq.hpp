#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "regsynth/automata.hpp"
#include "regsynth/guessing.hpp"

namespace regsynth {

/// Core connectives; the parser desugars G, F, |, ->, <->, false and != into
/// these.
enum class NodeKind { True, Prop, InEq, OutEq, Not, And, Until, Next };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind = NodeKind::True;
  std::string prop;  // Prop
  int var = -1;      // InEq, OutEq
  NodePtr lhs;       // Not, And, Until, Next
  NodePtr rhs;       // And, Until
};

NodePtr make_true();
NodePtr make_prop(std::string name);
NodePtr make_in_eq(int var);
NodePtr make_out_eq(int var);
NodePtr make_not(NodePtr a);
NodePtr make_and(NodePtr a, NodePtr b);
NodePtr make_until(NodePtr a, NodePtr b);
NodePtr make_next(NodePtr a);

enum class Quantifier { Forall, Exists };

/// Q x1..xk . cond . body with cond a set of inequalities x_m != x_n.
struct LtlEqFormula {
  Quantifier quantifier = Quantifier::Forall;
  std::vector<std::string> vars;
  std::vector<std::pair<int, int>> cond;
  NodePtr body;

  /// Boolean signals in order of first occurrence.
  std::vector<std::string> props() const;
};

/// Syntax error with a 1-based position.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& msg);
  int line;
  int column;
};

/// Surface syntax:
///
///     spec    := ('forall' | 'exists') ident+ '.' cond '.' formula
///     cond    := 'true' | ident '!=' ident ('&' ident '!=' ident)*
///     formula := imp ('<->' imp)*
///     imp     := or ('->' imp)?
///     or      := and ('|' and)*
///     and     := until ('&' until)*
///     until   := unary ('U' until)?
///     unary   := ('!' | 'X' | 'F' | 'G') unary | atom
///     atom    := 'true' | 'false' | '(' formula ')' | ('i'|'o') ('='|'!=') ident | ident
///
/// `#` starts a comment that runs to the end of the line.
LtlEqFormula parse_formula(std::string_view text);

/// Prints the core formula in surface syntax.
std::string to_string(const LtlEqFormula& f);

/// Satisfaction on a lasso word. Quantified variables range over the values
/// of w plus k fresh values.
bool eval_formula(const LtlEqFormula& f, const DataWord& w);

/// Flips the quantifier and negates the body.
LtlEqFormula negate(const LtlEqFormula& f);

/// Propositional LTL to nondeterministic Buchi automaton (tableau with
/// transition-based generalized acceptance, then degeneralization). Variables
/// of atoms i = x / o = x must not occur; props are resolved in `signals`.
BooleanAutomaton ltl_to_nbw(const NodePtr& body, const SignalSet& signals);

/// The body with i = x and o = x read as signals g_i@x and g_o@x, as an NBW
/// over signals ++ g_i@.. ++ g_o@.. (the quantifier is ignored).
BooleanAutomaton conversion1_nbw(const LtlEqFormula& f,
                                 const std::optional<SignalSet>& signals = std::nullopt);

/// Existential formula to register-guessing automaton. Registers carry the
/// variable names; `signals` defaults to the formula's props.
GuessingAutomaton conversion1(const LtlEqFormula& f,
                              const std::optional<SignalSet>& signals = std::nullopt);

/// Universal formula to universal co-Buchi register automaton by negation,
/// conversion-1, conversion-2 and dualization.
std::variant<RegisterAutomaton, Abort> formula_to_spec(
    const LtlEqFormula& f, const std::optional<SignalSet>& signals = std::nullopt);

}  // namespace regsynth
