#include "depseq/word_engine.hpp"

#include <iterator>

namespace depseq {
namespace {

void require_valid(const Producer& p) {
  if (auto v = validate_producer(p); !v.empty()) throw InvalidAutomaton("invalid producer", std::move(v));
}

void require_valid(const Transducer& t) {
  if (auto v = validate_transducer(t); !v.empty()) {
    throw InvalidAutomaton("invalid transducer", std::move(v));
  }
}

// Uniform choice among a state's outgoing transitions.
std::pair<Symbol, StateId> choose_transition(const TransitionMap& row, Rng& rng) {
  auto it = row.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(rng.uniform_index(row.size())));
  return *it;
}

}  // namespace

Word Interleaving::word() const {
  Word out;
  out.reserve(events.size());
  for (const auto& e : events) out.push_back(e.symbol);
  return out;
}

Word random_word_from_producer(const Producer& p, std::size_t output_length, Rng& rng) {
  if (output_length == 0) throw InvalidLength("output_length must be at least 1");
  require_valid(p);
  Word word;
  word.reserve(output_length);
  StateId state = p.initial;
  while (word.size() < output_length) {
    auto [symbol, target] = choose_transition(p.transitions[state], rng);
    state = target;
    word.push_back(std::move(symbol));
  }
  return word;
}

TransductionResult random_word_from_transducer(const Transducer& t,
                                               std::span<const Symbol> input_word,
                                               std::size_t output_length, bool return_order,
                                               Rng& rng) {
  if (output_length == 0) throw InvalidLength("output_length must be at least 1");
  require_valid(t);
  for (const auto& symbol : input_word) {
    if (!t.input_alphabet.contains(symbol)) {
      throw InvalidSymbol("input symbol '" + symbol.token() + "' is not in the input alphabet");
    }
  }

  TransductionResult result;
  if (return_order) result.interleaving.emplace();
  StateId state = t.initial;
  while (result.output.size() < output_length) {
    const StateId before = state;
    Symbol symbol = [&] {
      if (t.kinds[state] == StateKind::Input) {
        if (result.consumed == input_word.size()) {
          throw InputExhausted(std::move(result.output), result.consumed, output_length);
        }
        const Symbol& read = input_word[result.consumed++];
        state = step(t, state, read);
        return read;
      }
      auto [emitted, target] = choose_transition(t.transitions[state], rng);
      state = target;
      result.output.push_back(emitted);
      return emitted;
    }();
    if (return_order) {
      result.interleaving->events.push_back({t.kinds[before], std::move(symbol), before, state});
    }
  }
  result.final_state = state;
  return result;
}

Word SymbolSource::take(std::size_t n) {
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(next());
  return out;
}

ProducerStream::ProducerStream(Producer p, Rng rng)
    : producer_(std::move(p)), rng_(std::move(rng)) {
  require_valid(producer_);
  state_ = producer_.initial;
}

Symbol ProducerStream::next() {
  auto [symbol, target] = choose_transition(producer_.transitions[state_], rng_);
  state_ = target;
  transcript_.push_back(symbol);
  return symbol;
}

TransducerStream::TransducerStream(Transducer t, SymbolSource& upstream, Rng rng)
    : transducer_(std::move(t)), upstream_(&upstream), rng_(std::move(rng)) {
  require_valid(transducer_);
  state_ = transducer_.initial;
}

Symbol TransducerStream::next() {
  // Terminates: with no input-only cycle an output state is hit within
  // |input states| reads.
  while (transducer_.kinds[state_] == StateKind::Input) {
    const Word& upstream = upstream_->transcript();
    const Symbol read = consumed_ < upstream.size() ? upstream[consumed_] : upstream_->next();
    ++consumed_;
    if (!transducer_.input_alphabet.contains(read)) {
      throw InvalidSymbol("upstream symbol '" + read.token() + "' is not in the input alphabet");
    }
    state_ = step(transducer_, state_, read);
  }
  auto [symbol, target] = choose_transition(transducer_.transitions[state_], rng_);
  state_ = target;
  transcript_.push_back(symbol);
  return symbol;
}

ProducerStream stream_from_producer(const Producer& p, Rng rng) {
  return ProducerStream(p, std::move(rng));
}

}  // namespace depseq
