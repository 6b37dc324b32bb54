#pragma once

#include <optional>
#include <string>

#include "depseq/automata.hpp"
#include "depseq/rng.hpp"
#include "depseq/sampling.hpp"

namespace depseq {

// Legal bounds for generator parameters.
inline constexpr int kMinStatesLimit = 30;
inline constexpr int kMaxStatesLimit = 50;
inline constexpr int kAlphabetLimit = 26;
inline constexpr int kGenerationAttempts = 100;

struct ProducerParams {
  SamplerSpec states{.min = 1, .max = 6};
  SamplerSpec alphabet{.min = 1, .max = 8};
  SamplerSpec transitions{.min = 1, .max = 4};
  std::string symbol_prefix = "q_";
  bool verbose = false;

  bool operator==(const ProducerParams&) const = default;
};

struct TransducerParams {
  Alphabet read_input_alphabet;
  double ratio_i_o = 0.3;
  SamplerSpec states{.min = 1, .max = 6};
  SamplerSpec alphabet{.min = 1, .max = 8};
  SamplerSpec transitions{.min = 1, .max = 1};
  // Prepended to the class-based names i_k / o_k.
  std::string symbol_prefix;
  bool verbose = false;

  bool operator==(const TransducerParams&) const = default;
};

/// Throws InvalidParams naming the first out-of-range parameter.
void validate_params(const ProducerParams& params);
void validate_params(const TransducerParams& params);

Producer generate_random_producer(const ProducerParams& params, Rng& rng);
Transducer generate_random_transducer(const TransducerParams& params, Rng& rng);

/// Makes every state reachable by retargeting transitions that are not on a
/// breadth-first spanning tree of the reachable part. Labels and out-degrees
/// are untouched.
Producer repair_reachability(Producer p, Rng& rng);
Transducer repair_reachability(Transducer t, Rng& rng);

/// Retargets one transition per input-only cycle to a uniformly chosen output
/// state until none remain. Reachability is preserved.
Transducer break_input_only_cycles(Transducer t, Rng& rng);

}  // namespace depseq
