#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "regsynth/ltleq.hpp"

namespace regsynth {

namespace {

// Negation normal form over propositions given by signal index.
enum class Nnf { True, False, Lit, And, Or, Next, Until, Release };

struct NnfNode {
  Nnf kind;
  int a = -1;  // operand, or signal index for Lit
  int b = -1;  // operand, or polarity for Lit
  auto operator<=>(const NnfNode&) const = default;
};

class Pool {
public:
  int make(Nnf kind, int a = -1, int b = -1)
  {
    if (kind == Nnf::And) {
      if (a == f() || b == f())
        return f();
      if (a == t())
        return b;
      if (b == t())
        return a;
      if (a == b)
        return a;
      if (a > b)
        std::swap(a, b);
    }
    if (kind == Nnf::Or) {
      if (a == t() || b == t())
        return t();
      if (a == f())
        return b;
      if (b == f())
        return a;
      if (a == b)
        return a;
      if (a > b)
        std::swap(a, b);
    }
    const NnfNode n{kind, a, b};
    auto [it, fresh] = index_.try_emplace(n, static_cast<int>(nodes_.size()));
    if (fresh)
      nodes_.push_back(n);
    return it->second;
  }
  int t() { return ensure(Nnf::True, t_); }
  int f() { return ensure(Nnf::False, f_); }
  const NnfNode& operator[](int j) const { return nodes_[j]; }
  std::size_t size() const { return nodes_.size(); }

private:
  int ensure(Nnf kind, int& slot)
  {
    if (slot < 0) {
      slot = static_cast<int>(nodes_.size());
      nodes_.push_back({kind});
      index_.emplace(nodes_.back(), slot);
    }
    return slot;
  }
  std::vector<NnfNode> nodes_;
  std::map<NnfNode, int> index_;
  int t_ = -1;
  int f_ = -1;
};

int to_nnf(const NodePtr& n, bool neg, Pool& pool, const SignalSet& signals)
{
  switch (n->kind) {
  case NodeKind::True:
    return neg ? pool.f() : pool.t();
  case NodeKind::Prop: {
    const int j = signals.index_of(n->prop);
    if (j < 0)
      throw Error("unknown signal '" + n->prop + "'");
    return pool.make(Nnf::Lit, j, neg ? 0 : 1);
  }
  case NodeKind::InEq:
  case NodeKind::OutEq:
    throw Error("data atoms must be replaced by propositions before the tableau");
  case NodeKind::Not:
    return to_nnf(n->lhs, !neg, pool, signals);
  case NodeKind::And: {
    const int a = to_nnf(n->lhs, neg, pool, signals), b = to_nnf(n->rhs, neg, pool, signals);
    return pool.make(neg ? Nnf::Or : Nnf::And, a, b);
  }
  case NodeKind::Next:
    return pool.make(Nnf::Next, to_nnf(n->lhs, neg, pool, signals));
  case NodeKind::Until: {
    const int a = to_nnf(n->lhs, neg, pool, signals), b = to_nnf(n->rhs, neg, pool, signals);
    return pool.make(neg ? Nnf::Release : Nnf::Until, a, b);
  }
  }
  return pool.f();
}

using StateSet = std::vector<int>;  // sorted obligations for the next position

struct Step {
  Cube letter;
  StateSet next;
  std::uint64_t postponed = 0;  // bit u: until #u was deferred
};

class Expander {
public:
  Expander(Pool& pool, const std::map<int, int>& until_index)
      : pool_(pool), until_index_(until_index)
  {
  }

  std::vector<Step> expand(const StateSet& s)
  {
    out_.clear();
    go(std::vector<int>(s.begin(), s.end()), {}, {}, 0);
    return out_;
  }

private:
  Pool& pool_;
  const std::map<int, int>& until_index_;
  std::vector<Step> out_;

  void go(std::vector<int> todo, Cube letter, StateSet next, std::uint64_t postponed)
  {
    while (!todo.empty()) {
      const int f = todo.back();
      todo.pop_back();
      const auto n = pool_[f];
      switch (n.kind) {
      case Nnf::True:
        break;
      case Nnf::False:
        return;
      case Nnf::Lit: {
        auto c = letter.intersect(Cube{}.with(n.a, n.b == 1));
        if (!c)
          return;
        letter = *c;
        break;
      }
      case Nnf::And:
        todo.push_back(n.a);
        todo.push_back(n.b);
        break;
      case Nnf::Or: {
        auto left = todo;
        left.push_back(n.a);
        go(std::move(left), letter, next, postponed);
        todo.push_back(n.b);
        break;
      }
      case Nnf::Next:
        next.push_back(n.a);
        break;
      case Nnf::Until: {
        auto now = todo;
        now.push_back(n.b);
        go(std::move(now), letter, next, postponed);
        todo.push_back(n.a);
        next.push_back(f);
        postponed |= std::uint64_t{1} << until_index_.at(f);
        break;
      }
      case Nnf::Release: {
        auto now = todo;
        now.push_back(n.a);
        now.push_back(n.b);
        go(std::move(now), letter, next, postponed);
        todo.push_back(n.b);
        next.push_back(f);
        break;
      }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out_.push_back({letter, std::move(next), postponed});
  }
};

}  // namespace

BooleanAutomaton ltl_to_nbw(const NodePtr& body, const SignalSet& signals)
{
  Pool pool;
  const int root = to_nnf(body, false, pool, signals);
  std::map<int, int> until_index;
  for (std::size_t j = 0; j < pool.size(); ++j)
    if (pool[static_cast<int>(j)].kind == Nnf::Until)
      until_index.emplace(static_cast<int>(j), static_cast<int>(until_index.size()));
  if (until_index.size() > 63)
    throw Error("formula has too many until subformulas for the tableau");
  const int n = static_cast<int>(until_index.size());
  Expander expander(pool, until_index);

  BooleanAutomaton a;
  a.mode = Acceptance::NondeterministicBuchi;
  a.signals = signals;
  std::map<StateSet, int> set_index;
  std::vector<StateSet> sets;
  std::vector<std::vector<Step>> steps;
  auto set_of = [&](const StateSet& s) {
    auto [it, fresh] = set_index.try_emplace(s, static_cast<int>(sets.size()));
    if (fresh) {
      sets.push_back(s);
      steps.push_back(expander.expand(s));
    }
    return it->second;
  };

  // Degeneralized states (set, level); level n is accepting.
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> states;
  std::deque<int> queue;
  auto intern = [&](int s, int level) {
    auto [it, fresh] = index.try_emplace({s, level}, static_cast<int>(states.size()));
    if (fresh) {
      states.emplace_back(s, level);
      a.states.push_back("s" + std::to_string(s) + "." + std::to_string(level));
      if (level == n)
        a.accepting.push_back(it->second);
      queue.push_back(it->second);
    }
    return it->second;
  };
  a.initial = intern(set_of({root}), 0);
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    const auto [s, level] = states[q];
    const auto current = steps[s];
    for (const auto& step : current) {
      int next_level = level == n ? 0 : level;
      while (next_level < n && !test_bit(step.postponed, next_level))
        ++next_level;
      const int dst = intern(set_of(step.next), next_level);
      a.transitions.push_back({q, step.letter, dst});
    }
  }
  a.normalize();
  return a;
}

}  // namespace regsynth
