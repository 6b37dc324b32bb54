#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "depseq/automata.hpp"
#include "depseq/rng.hpp"

namespace depseq {

struct InterleavingEvent {
  StateKind kind;
  Symbol symbol;
  StateId state_before;
  StateId state_after;

  bool operator==(const InterleavingEvent&) const = default;
};

/// The run word of a transduction: reads and emissions in the order they happened.
struct Interleaving {
  std::vector<InterleavingEvent> events;

  Word word() const;
  bool operator==(const Interleaving&) const = default;
};

struct TransductionResult {
  Word output;
  std::size_t consumed = 0;
  std::optional<Interleaving> interleaving;
  StateId final_state = 0;
};

/// Random walk of the given length from the initial state, choosing uniformly
/// among each state's outgoing transitions.
Word random_word_from_producer(const Producer& p, std::size_t output_length, Rng& rng);

/// Runs t on input_word until output_length symbols have been emitted.
/// Throws InputExhausted (with the partial output) if input runs out first.
TransductionResult random_word_from_transducer(const Transducer& t,
                                               std::span<const Symbol> input_word,
                                               std::size_t output_length,
                                               bool return_order, Rng& rng);

/// Pull-based symbol stream that records everything it has emitted.
class SymbolSource {
 public:
  virtual ~SymbolSource() = default;

  virtual Symbol next() = 0;

  Word take(std::size_t n);
  const Word& transcript() const noexcept { return transcript_; }

 protected:
  Word transcript_;
};

class ProducerStream final : public SymbolSource {
 public:
  /// Throws InvalidAutomaton if p fails validation.
  ProducerStream(Producer p, Rng rng);

  Symbol next() override;
  StateId state() const noexcept { return state_; }

 private:
  Producer producer_;
  Rng rng_;
  StateId state_;
};

/// Transducer driven lazily by an upstream source. Reads the upstream
/// transcript first and pulls new symbols only when it runs past its end.
class TransducerStream final : public SymbolSource {
 public:
  TransducerStream(Transducer t, SymbolSource& upstream, Rng rng);

  Symbol next() override;
  std::size_t consumed() const noexcept { return consumed_; }
  StateId state() const noexcept { return state_; }

 private:
  Transducer transducer_;
  SymbolSource* upstream_;
  Rng rng_;
  StateId state_;
  std::size_t consumed_ = 0;
};

ProducerStream stream_from_producer(const Producer& p, Rng rng);

}  // namespace depseq
