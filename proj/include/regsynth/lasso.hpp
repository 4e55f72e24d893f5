#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

namespace regsynth {

/// Edge labels of an infinite path `prefix . loop^omega`; `seed` is the state
/// at which the loop starts and ends.
template <class State, class Label>
struct Lasso {
  std::vector<Label> prefix;
  std::vector<Label> loop;
  State seed;
};

/// Nested depth-first search for a reachable cycle through an accepting state
/// of the implicit graph given by `successors`, which maps a state to a vector
/// of (label, state) pairs. Iterative so deep graphs do not exhaust the stack.
template <class State, class Label, class Hash = std::hash<State>, class Successors,
          class Accepting>
std::optional<Lasso<State, Label>> find_accepting_lasso(const State& init,
                                                        Successors&& successors,
                                                        Accepting&& accepting)
{
  using Edges = std::vector<std::pair<Label, State>>;
  struct Frame {
    State state;
    Edges edges;
    std::size_t next = 0;
    std::optional<Label> via;
  };

  std::unordered_set<State, Hash> outer_seen;
  std::unordered_set<State, Hash> inner_seen;

  auto inner = [&](const State& seed) -> std::optional<std::vector<Label>> {
    std::vector<Frame> stack;
    stack.push_back(Frame{seed, successors(seed), 0, std::nullopt});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == top.edges.size()) {
        stack.pop_back();
        continue;
      }
      auto [label, target] = top.edges[top.next++];
      if (target == seed) {
        std::vector<Label> loop;
        for (std::size_t j = 1; j < stack.size(); ++j)
          loop.push_back(*stack[j].via);
        loop.push_back(label);
        return loop;
      }
      if (inner_seen.insert(target).second) {
        auto edges = successors(target);
        stack.push_back(Frame{std::move(target), std::move(edges), 0, std::move(label)});
      }
    }
    return std::nullopt;
  };

  std::vector<Frame> stack;
  outer_seen.insert(init);
  stack.push_back(Frame{init, successors(init), 0, std::nullopt});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next < top.edges.size()) {
      auto [label, target] = top.edges[top.next++];
      if (outer_seen.insert(target).second) {
        auto edges = successors(target);
        stack.push_back(Frame{std::move(target), std::move(edges), 0, std::move(label)});
      }
      continue;
    }
    if (accepting(top.state)) {
      if (auto loop = inner(top.state)) {
        Lasso<State, Label> lasso{{}, std::move(*loop), top.state};
        for (std::size_t j = 1; j < stack.size(); ++j)
          lasso.prefix.push_back(*stack[j].via);
        return lasso;
      }
    }
    stack.pop_back();
  }
  return std::nullopt;
}

}  // namespace regsynth
