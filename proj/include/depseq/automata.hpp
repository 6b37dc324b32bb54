#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "depseq/error.hpp"
#include "depseq/symbol.hpp"
#include "depseq/violation.hpp"

namespace depseq {

using StateId = std::size_t;

/// Outgoing transitions of one state, keyed by label. Determinism per
/// (state, symbol) is structural.
using TransitionMap = std::map<Symbol, StateId>;

/// A DFA that emits symbols on its own by walking its transitions.
struct Producer {
  std::vector<std::string> states;
  Alphabet alphabet;
  std::vector<TransitionMap> transitions;  // indexed by StateId
  StateId initial = 0;

  std::size_t size() const noexcept { return states.size(); }
  bool operator==(const Producer&) const = default;
};

enum class StateKind { Input, Output };

/// A DFA whose states either read one input symbol or emit one output symbol.
struct Transducer {
  std::vector<std::string> states;
  std::vector<StateKind> kinds;  // indexed by StateId
  Alphabet input_alphabet;
  Alphabet output_alphabet;
  std::vector<TransitionMap> transitions;
  StateId initial = 0;
  // Every output state must then have exactly one outgoing transition.
  bool deterministic = false;

  std::size_t size() const noexcept { return states.size(); }
  bool is_input(StateId s) const { return kinds.at(s) == StateKind::Input; }
  std::vector<StateId> input_states() const;
  std::vector<StateId> output_states() const;

  bool operator==(const Transducer&) const = default;
};

template <class A>
concept TransitionSystem = requires(const A& a) {
  { a.states } -> std::convertible_to<const std::vector<std::string>&>;
  { a.transitions } -> std::convertible_to<const std::vector<TransitionMap>&>;
  { a.initial } -> std::convertible_to<StateId>;
};

template <TransitionSystem A>
StateId step(const A& automaton, StateId state, const Symbol& symbol) {
  const auto& out = automaton.transitions.at(state);
  const auto it = out.find(symbol);
  if (it == out.end()) throw NoTransition(automaton.states.at(state), symbol);
  return it->second;
}

/// Least set containing the initial state and closed under transitions.
/// Targets outside the state range are ignored.
template <TransitionSystem A>
std::set<StateId> reachable_states(const A& automaton) {
  std::set<StateId> seen;
  const std::size_t n = automaton.states.size();
  if (automaton.initial >= n || automaton.transitions.size() != n) return seen;
  std::queue<StateId> frontier;
  frontier.push(automaton.initial);
  seen.insert(automaton.initial);
  while (!frontier.empty()) {
    const StateId s = frontier.front();
    frontier.pop();
    for (const auto& [symbol, target] : automaton.transitions[s]) {
      if (target < n && seen.insert(target).second) frontier.push(target);
    }
  }
  return seen;
}

Word projection(std::span<const Symbol> word, const Alphabet& alphabet);

std::vector<Violation> validate_producer(const Producer& p);
std::vector<Violation> validate_transducer(const Transducer& t);

/// One cycle through input states only (in traversal order), if any exists.
std::optional<std::vector<StateId>> find_input_only_cycle(const Transducer& t);

/// True when every output state has exactly one outgoing transition.
bool is_deterministic(const Transducer& t);

std::size_t transition_count(const std::vector<TransitionMap>& transitions);

}  // namespace depseq
