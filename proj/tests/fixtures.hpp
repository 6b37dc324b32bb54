#pragma once

// Hand-built automata and brute-force oracles shared by the unit tests.
// Nothing here calls the generators or the BFS under test.

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "depseq/automata.hpp"
#include "depseq/rng.hpp"

namespace depseq::testing {

struct EdgeSpec {
  std::string from;
  char symbol;
  std::string to;
};

inline Producer make_producer(std::vector<std::string> states, const std::string& alphabet,
                              const std::vector<EdgeSpec>& edges, std::size_t initial = 0) {
  Producer p;
  std::map<std::string, StateId> index;
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = i;
  p.states = std::move(states);
  for (char c : alphabet) p.alphabet.insert(Symbol(c));
  p.transitions.resize(p.states.size());
  for (const auto& e : edges) p.transitions[index.at(e.from)][Symbol(e.symbol)] = index.at(e.to);
  p.initial = initial;
  return p;
}

// Kinds are inferred from the state names: "i..." input, anything else output.
inline Transducer make_transducer(std::vector<std::string> states, const std::string& inputs,
                                  const std::string& outputs, const std::vector<EdgeSpec>& edges,
                                  std::size_t initial = 0, bool deterministic = true) {
  Transducer t;
  std::map<std::string, StateId> index;
  for (std::size_t i = 0; i < states.size(); ++i) {
    index[states[i]] = i;
    t.kinds.push_back(states[i][0] == 'i' ? StateKind::Input : StateKind::Output);
  }
  t.states = std::move(states);
  for (char c : inputs) t.input_alphabet.insert(Symbol(c));
  for (char c : outputs) t.output_alphabet.insert(Symbol(c));
  t.transitions.resize(t.states.size());
  for (const auto& e : edges) t.transitions[index.at(e.from)][Symbol(e.symbol)] = index.at(e.to);
  t.initial = initial;
  t.deterministic = deterministic;
  return t;
}

/// {q0 --a--> q0}
inline Producer self_loop_producer() { return make_producer({"q_0"}, "a", {{"q_0", 'a', "q_0"}}); }

/// {o0 --z--> i0; i0 --a--> o0; i0 --b--> o0}, initial o0.
inline Transducer two_state_transducer() {
  return make_transducer({"o_0", "i_0"}, "ab", "z",
                         {{"o_0", 'z', "i_0"}, {"i_0", 'a', "o_0"}, {"i_0", 'b', "o_0"}});
}

/// States visited by some run of length <= |Q| from the initial state, found by
/// enumerating every path rather than by a closure.
template <TransitionSystem A>
std::set<StateId> enumerate_run_states(const A& a) {
  std::set<StateId> seen;
  const std::size_t n = a.states.size();
  std::vector<std::pair<StateId, std::size_t>> stack{{a.initial, 0}};
  while (!stack.empty()) {
    auto [s, depth] = stack.back();
    stack.pop_back();
    seen.insert(s);
    if (depth == n) continue;
    for (const auto& [symbol, target] : a.transitions[s]) stack.emplace_back(target, depth + 1);
  }
  return seen;
}

/// Replays a word through a producer with step(); false on any missing transition.
inline bool replays(const Producer& p, const Word& word) {
  StateId s = p.initial;
  for (const auto& symbol : word) {
    const auto& row = p.transitions[s];
    auto it = row.find(symbol);
    if (it == row.end()) return false;
    s = it->second;
  }
  return true;
}

/// Unrepaired random producer over `alphabet`, possibly with unreachable states.
inline Producer raw_random_producer(Rng& rng, std::size_t n, const std::string& alphabet) {
  Producer p;
  for (std::size_t i = 0; i < n; ++i) p.states.push_back("q_" + std::to_string(i));
  for (char c : alphabet) p.alphabet.insert(Symbol(c));
  p.transitions.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (char c : alphabet) {
      if (rng.bernoulli(0.4)) p.transitions[s][Symbol(c)] = rng.uniform_index(n);
    }
    if (p.transitions[s].empty()) p.transitions[s][Symbol(alphabet[0])] = rng.uniform_index(n);
  }
  return p;
}

}  // namespace depseq::testing
