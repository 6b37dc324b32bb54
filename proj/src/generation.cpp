#include "depseq/generation.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <queue>
#include <sstream>

namespace depseq {
namespace {

void check_range(const char* name, long long value, long long lo, long long hi) {
  if (value < lo || value > hi) {
    throw InvalidParams(std::string(name) + " = " + std::to_string(value) + " is outside [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

void check_skew(const char* name, const SamplerSpec& spec) {
  if (std::isnan(spec.skewness)) throw InvalidParams(std::string(name) + " must not be NaN");
}

void check_structure(const SamplerSpec& states, const SamplerSpec& alphabet,
                     const SamplerSpec& transitions) {
  check_range("min_states", states.min, 1, kMinStatesLimit);
  check_range("max_states", states.max, states.min, kMaxStatesLimit);
  check_skew("skw_states", states);
  check_range("min_alphabet", alphabet.min, 1, kAlphabetLimit);
  check_range("max_alphabet", alphabet.max, alphabet.min, kAlphabetLimit);
  check_skew("skw_alphabet", alphabet);
  check_range("min_transitions", transitions.min, 1, alphabet.max);
  check_range("max_transitions", transitions.max, 1, alphabet.max);
  if (transitions.min > transitions.max) {
    throw InvalidParams("min_transitions = " + std::to_string(transitions.min) +
                        " exceeds max_transitions = " + std::to_string(transitions.max));
  }
  check_skew("skw_transitions", transitions);
}

// Transition bounds re-clamped to the alphabet size actually drawn.
SamplerSpec clamp_to_alphabet(SamplerSpec spec, int alphabet_size) {
  spec.max = std::min(spec.max, alphabet_size);
  spec.min = std::min(spec.min, spec.max);
  return spec;
}

std::vector<Symbol> letters(char first) {
  std::vector<Symbol> out;
  for (int i = 0; i < kAlphabetLimit; ++i) out.emplace_back(static_cast<char>(first + i));
  return out;
}

// (state, symbol) pairs forming a breadth-first spanning tree of the reachable
// part, plus the reachable mask.
struct SpanningTree {
  std::vector<bool> reached;
  std::set<std::pair<StateId, Symbol>> edges;
};

template <TransitionSystem A>
SpanningTree spanning_tree(const A& a) {
  SpanningTree tree;
  tree.reached.assign(a.states.size(), false);
  std::queue<StateId> frontier;
  frontier.push(a.initial);
  tree.reached[a.initial] = true;
  while (!frontier.empty()) {
    const StateId s = frontier.front();
    frontier.pop();
    for (const auto& [symbol, target] : a.transitions[s]) {
      if (!tree.reached[target]) {
        tree.reached[target] = true;
        tree.edges.emplace(s, symbol);
        frontier.push(target);
      }
    }
  }
  return tree;
}

template <TransitionSystem A>
A repair_reachability_impl(A a, Rng& rng) {
  const std::size_t n = a.states.size();
  if (n == 0 || a.initial >= n || a.transitions.size() != n) {
    throw RepairFailed("automaton is not structurally well-formed");
  }
  for (const auto& row : a.transitions) {
    for (const auto& [symbol, target] : row) {
      if (target >= n) throw RepairFailed("transition target out of range");
    }
  }
  for (;;) {
    const SpanningTree tree = spanning_tree(a);
    std::vector<StateId> unreachable;
    for (StateId s = 0; s < a.states.size(); ++s) {
      if (!tree.reached[s]) unreachable.push_back(s);
    }
    if (unreachable.empty()) return a;

    std::vector<std::pair<StateId, Symbol>> candidates;
    for (StateId s = 0; s < a.states.size(); ++s) {
      if (!tree.reached[s]) continue;
      for (const auto& [symbol, target] : a.transitions[s]) {
        if (!tree.edges.contains({s, symbol})) candidates.emplace_back(s, symbol);
      }
    }
    if (candidates.empty()) throw RepairFailed("no retargetable transition in the reachable part");

    const auto& [source, symbol] = candidates[rng.uniform_index(candidates.size())];
    a.transitions[source][symbol] = unreachable[rng.uniform_index(unreachable.size())];
  }
}

void log_line(bool verbose, const std::string& line) {
  if (verbose) std::clog << "[depseq] " << line << '\n';
}

std::string describe_degrees(const std::vector<TransitionMap>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i].size();
  return os.str();
}

Producer producer_attempt(const ProducerParams& params, Rng& rng) {
  const int n = sample_count(params.states, rng);
  const int m = sample_count(params.alphabet, rng);

  Producer p;
  for (int i = 0; i < n; ++i) p.states.push_back(params.symbol_prefix + std::to_string(i));
  const auto chosen = rng.choose(letters('a'), static_cast<std::size_t>(m));
  p.alphabet = Alphabet(chosen.begin(), chosen.end());
  const std::vector<Symbol> sigma(p.alphabet.begin(), p.alphabet.end());

  const SamplerSpec degree = clamp_to_alphabet(params.transitions, m);
  p.transitions.resize(n);
  for (int s = 0; s < n; ++s) {
    const int d = sample_count(degree, rng);
    for (const auto& label : rng.choose(sigma, static_cast<std::size_t>(d))) {
      p.transitions[s][label] = rng.uniform_index(static_cast<std::size_t>(n));
    }
  }
  p.initial = 0;
  log_line(params.verbose, "producer: states=" + std::to_string(n) + " alphabet=" +
                               format_alphabet(p.alphabet) +
                               " out-degrees=" + describe_degrees(p.transitions));
  return repair_reachability(std::move(p), rng);
}

Alphabet pick_output_alphabet(const Alphabet& input, int m, Rng& rng) {
  std::vector<Symbol> lower;
  std::vector<Symbol> upper;
  for (const auto& s : letters('a')) {
    if (!input.contains(s)) lower.push_back(s);
  }
  for (const auto& s : letters('A')) {
    if (!input.contains(s)) upper.push_back(s);
  }
  const auto want = static_cast<std::size_t>(m);
  if (lower.size() + upper.size() < want) {
    throw AlphabetExhausted("cannot pick " + std::to_string(m) +
                            " output symbols disjoint from the input alphabet");
  }
  std::vector<Symbol> picked;
  if (lower.size() >= want) {
    picked = rng.choose(std::move(lower), want);
  } else {
    picked = lower;
    for (auto& s : rng.choose(std::move(upper), want - lower.size())) picked.push_back(s);
  }
  return Alphabet(picked.begin(), picked.end());
}

std::vector<StateKind> assign_classes(int n, double ratio, Rng& rng) {
  std::vector<StateKind> kinds(n);
  for (auto& k : kinds) k = rng.bernoulli(ratio) ? StateKind::Input : StateKind::Output;

  auto indices_of = [&](StateKind kind) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      if (kinds[i] == kind) out.push_back(i);
    }
    return out;
  };
  if (auto inputs = indices_of(StateKind::Input); inputs.size() == kinds.size()) {
    kinds[inputs[rng.uniform_index(inputs.size())]] = StateKind::Output;
  }
  if (ratio > 0.0 && n >= 2) {
    if (auto outputs = indices_of(StateKind::Output); outputs.size() == kinds.size()) {
      kinds[outputs[rng.uniform_index(outputs.size())]] = StateKind::Input;
    }
  }
  return kinds;
}

Transducer transducer_attempt(const TransducerParams& params, Rng& rng) {
  const int n = sample_count(params.states, rng);
  Transducer t;
  t.kinds = assign_classes(n, params.ratio_i_o, rng);
  int inputs = 0;
  int outputs = 0;
  for (auto kind : t.kinds) {
    t.states.push_back(kind == StateKind::Input
                           ? params.symbol_prefix + "i_" + std::to_string(inputs++)
                           : params.symbol_prefix + "o_" + std::to_string(outputs++));
  }

  const int m = sample_count(params.alphabet, rng);
  t.input_alphabet = params.read_input_alphabet;
  t.output_alphabet = pick_output_alphabet(t.input_alphabet, m, rng);
  const std::vector<Symbol> sigma_out(t.output_alphabet.begin(), t.output_alphabet.end());
  t.initial = rng.uniform_index(static_cast<std::size_t>(n));

  const SamplerSpec degree = clamp_to_alphabet(params.transitions, m);
  t.deterministic = degree.max == 1;
  t.transitions.resize(n);
  for (int s = 0; s < n; ++s) {
    if (t.kinds[s] == StateKind::Input) {
      for (const auto& symbol : t.input_alphabet) {
        t.transitions[s][symbol] = rng.uniform_index(static_cast<std::size_t>(n));
      }
    } else {
      const int d = sample_count(degree, rng);
      for (const auto& label : rng.choose(sigma_out, static_cast<std::size_t>(d))) {
        t.transitions[s][label] = rng.uniform_index(static_cast<std::size_t>(n));
      }
    }
  }
  log_line(params.verbose, "transducer: states=" + std::to_string(n) + " inputs=" +
                               std::to_string(inputs) + " outputs=" + std::to_string(outputs) +
                               " input_alphabet=" + format_alphabet(t.input_alphabet) +
                               " output_alphabet=" + format_alphabet(t.output_alphabet) +
                               " initial=" + t.states[t.initial] +
                               " out-degrees=" + describe_degrees(t.transitions));
  return break_input_only_cycles(repair_reachability(std::move(t), rng), rng);
}

}  // namespace

void validate_params(const ProducerParams& params) {
  check_structure(params.states, params.alphabet, params.transitions);
  if (params.symbol_prefix.empty()) throw InvalidParams("symbol_prefix must be non-empty");
}

void validate_params(const TransducerParams& params) {
  check_structure(params.states, params.alphabet, params.transitions);
  if (params.read_input_alphabet.empty()) {
    throw InvalidParams("read_input_alphabet must be non-empty");
  }
  if (!(params.ratio_i_o >= 0.0 && params.ratio_i_o <= 1.0)) {
    throw InvalidParams("ratio_i_o = " + std::to_string(params.ratio_i_o) +
                        " is outside [0, 1]");
  }
}

Producer generate_random_producer(const ProducerParams& params, Rng& rng) {
  validate_params(params);
  std::vector<Violation> last;
  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    try {
      Producer p = producer_attempt(params, rng);
      last = validate_producer(p);
      if (last.empty()) return p;
    } catch (const RepairFailed&) {
    }
    log_line(params.verbose, "producer attempt " + std::to_string(attempt) + " rejected");
  }
  throw GenerationFailed("no valid producer after " + std::to_string(kGenerationAttempts) +
                         " attempts: " + describe(last));
}

Transducer generate_random_transducer(const TransducerParams& params, Rng& rng) {
  validate_params(params);
  std::vector<Violation> last;
  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    try {
      Transducer t = transducer_attempt(params, rng);
      last = validate_transducer(t);
      if (last.empty()) return t;
    } catch (const RepairFailed&) {
    }
    log_line(params.verbose, "transducer attempt " + std::to_string(attempt) + " rejected");
  }
  throw GenerationFailed("no valid transducer after " + std::to_string(kGenerationAttempts) +
                         " attempts: " + describe(last));
}

Producer repair_reachability(Producer p, Rng& rng) {
  return repair_reachability_impl(std::move(p), rng);
}

Transducer repair_reachability(Transducer t, Rng& rng) {
  return repair_reachability_impl(std::move(t), rng);
}

Transducer break_input_only_cycles(Transducer t, Rng& rng) {
  const auto outputs = t.output_states();
  while (auto cycle = find_input_only_cycle(t)) {
    if (outputs.empty()) throw RepairFailed("input-only cycle but no output state to retarget to");
    const SpanningTree tree = spanning_tree(t);

    std::vector<std::pair<StateId, Symbol>> on_cycle;
    std::vector<std::pair<StateId, Symbol>> off_tree;
    for (std::size_t k = 0; k < cycle->size(); ++k) {
      const StateId from = (*cycle)[k];
      const StateId to = (*cycle)[(k + 1) % cycle->size()];
      for (const auto& [symbol, target] : t.transitions[from]) {
        if (target != to) continue;
        on_cycle.emplace_back(from, symbol);
        if (!tree.edges.contains({from, symbol})) off_tree.emplace_back(from, symbol);
      }
    }
    const auto& pool = off_tree.empty() ? on_cycle : off_tree;
    const auto& [source, symbol] = pool[rng.uniform_index(pool.size())];
    t.transitions[source][symbol] = outputs[rng.uniform_index(outputs.size())];
  }
  return t;
}

}  // namespace depseq
