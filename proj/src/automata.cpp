#include "depseq/automata.hpp"

#include <algorithm>
#include <unordered_set>

namespace depseq {
namespace {

Violation at_state(ViolationKind kind, const std::string& state) { return {kind, {state}, {}}; }

Violation at_edge(ViolationKind kind, const std::string& state, const Symbol& symbol) {
  return {kind, {state}, symbol};
}

// Shared structural checks. Returns false when the shape is too broken for
// the per-state checks to make sense.
bool check_shape(const std::vector<std::string>& states, std::size_t transition_rows,
                 StateId initial, std::vector<Violation>& out) {
  if (states.empty()) {
    out.push_back({ViolationKind::EmptyAutomaton, {}, {}});
    return false;
  }
  if (transition_rows != states.size()) {
    out.push_back({ViolationKind::ShapeMismatch, {}, {}});
    return false;
  }
  if (initial >= states.size()) {
    out.push_back({ViolationKind::BadInitial, {"#" + std::to_string(initial)}, {}});
  }
  std::unordered_set<std::string> names;
  for (const auto& name : states) {
    if (!names.insert(name).second) out.push_back(at_state(ViolationKind::DuplicateStateName, name));
  }
  return true;
}

template <TransitionSystem A>
void check_targets_and_reachability(const A& a, std::vector<Violation>& out) {
  const std::size_t n = a.states.size();
  for (StateId s = 0; s < n; ++s) {
    for (const auto& [symbol, target] : a.transitions[s]) {
      if (target >= n) {
        out.push_back({ViolationKind::UnknownState, {a.states[s], "#" + std::to_string(target)}, symbol});
      }
    }
  }
  if (a.initial >= n) return;
  const auto reached = reachable_states(a);
  for (StateId s = 0; s < n; ++s) {
    if (!reached.contains(s)) out.push_back(at_state(ViolationKind::Unreachable, a.states[s]));
  }
}

}  // namespace

std::vector<StateId> Transducer::input_states() const {
  std::vector<StateId> out;
  for (StateId s = 0; s < kinds.size(); ++s) {
    if (kinds[s] == StateKind::Input) out.push_back(s);
  }
  return out;
}

std::vector<StateId> Transducer::output_states() const {
  std::vector<StateId> out;
  for (StateId s = 0; s < kinds.size(); ++s) {
    if (kinds[s] == StateKind::Output) out.push_back(s);
  }
  return out;
}

Word projection(std::span<const Symbol> word, const Alphabet& alphabet) {
  Word out;
  for (const auto& symbol : word) {
    if (alphabet.contains(symbol)) out.push_back(symbol);
  }
  return out;
}

std::vector<Violation> validate_producer(const Producer& p) {
  std::vector<Violation> out;
  if (!check_shape(p.states, p.transitions.size(), p.initial, out)) return out;
  for (StateId s = 0; s < p.size(); ++s) {
    if (p.transitions[s].empty()) out.push_back(at_state(ViolationKind::DeadEnd, p.states[s]));
    for (const auto& [symbol, target] : p.transitions[s]) {
      if (!p.alphabet.contains(symbol)) {
        out.push_back(at_edge(ViolationKind::UnknownSymbol, p.states[s], symbol));
      }
    }
  }
  check_targets_and_reachability(p, out);
  return out;
}

std::vector<Violation> validate_transducer(const Transducer& t) {
  std::vector<Violation> out;
  if (!check_shape(t.states, t.transitions.size(), t.initial, out)) return out;
  if (t.kinds.size() != t.size()) {
    out.push_back({ViolationKind::ShapeMismatch, {}, {}});
    return out;
  }
  for (const auto& symbol : t.input_alphabet) {
    if (t.output_alphabet.contains(symbol)) out.push_back({ViolationKind::AlphabetOverlap, {}, symbol});
  }

  bool has_output = false;
  for (StateId s = 0; s < t.size(); ++s) {
    const auto& name = t.states[s];
    const auto& row = t.transitions[s];
    if (row.empty()) out.push_back(at_state(ViolationKind::DeadEnd, name));

    const bool input = t.kinds[s] == StateKind::Input;
    const Alphabet& own = input ? t.input_alphabet : t.output_alphabet;
    const Alphabet& other = input ? t.output_alphabet : t.input_alphabet;
    for (const auto& [symbol, target] : row) {
      if (own.contains(symbol)) continue;
      out.push_back(at_edge(other.contains(symbol) ? ViolationKind::WrongLabelClass
                                                   : ViolationKind::UnknownSymbol,
                            name, symbol));
    }
    if (input) {
      for (const auto& symbol : t.input_alphabet) {
        if (!row.contains(symbol)) out.push_back(at_edge(ViolationKind::NotReceptive, name, symbol));
      }
    } else {
      has_output = true;
      if (t.deterministic && row.size() > 1) {
        out.push_back(at_state(ViolationKind::NondeterministicOutput, name));
      }
    }
  }
  if (!has_output) out.push_back({ViolationKind::NoOutputState, {}, {}});

  if (auto cycle = find_input_only_cycle(t)) {
    Violation v{ViolationKind::InputOnlyCycle, {}, {}};
    for (StateId s : *cycle) v.states.push_back(t.states[s]);
    out.push_back(std::move(v));
  }
  check_targets_and_reachability(t, out);
  return out;
}

std::optional<std::vector<StateId>> find_input_only_cycle(const Transducer& t) {
  const std::size_t n = t.size();
  if (t.kinds.size() != n || t.transitions.size() != n) return std::nullopt;

  enum class Color { White, Gray, Black };
  std::vector<Color> color(n, Color::White);

  // Successors of s inside the input-state subgraph, in label order.
  auto successors = [&](StateId s) {
    std::vector<StateId> next;
    for (const auto& [symbol, target] : t.transitions[s]) {
      if (target < n && t.kinds[target] == StateKind::Input) next.push_back(target);
    }
    return next;
  };

  struct Frame {
    StateId state;
    std::vector<StateId> next;
    std::size_t cursor = 0;
  };

  for (StateId root = 0; root < n; ++root) {
    if (t.kinds[root] != StateKind::Input || color[root] != Color::White) continue;
    std::vector<Frame> stack;
    stack.push_back({root, successors(root)});
    color[root] = Color::Gray;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.cursor == top.next.size()) {
        color[top.state] = Color::Black;
        stack.pop_back();
        continue;
      }
      const StateId v = top.next[top.cursor++];
      if (color[v] == Color::Gray) {
        auto it = std::find_if(stack.begin(), stack.end(),
                               [v](const Frame& f) { return f.state == v; });
        std::vector<StateId> cycle;
        for (; it != stack.end(); ++it) cycle.push_back(it->state);
        return cycle;
      }
      if (color[v] == Color::White) {
        color[v] = Color::Gray;
        stack.push_back({v, successors(v)});
      }
    }
  }
  return std::nullopt;
}

bool is_deterministic(const Transducer& t) {
  for (StateId s = 0; s < t.size(); ++s) {
    if (t.kinds[s] == StateKind::Output && t.transitions[s].size() != 1) return false;
  }
  return true;
}

std::size_t transition_count(const std::vector<TransitionMap>& transitions) {
  std::size_t total = 0;
  for (const auto& row : transitions) total += row.size();
  return total;
}

}  // namespace depseq
