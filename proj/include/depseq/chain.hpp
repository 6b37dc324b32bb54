#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "depseq/automata.hpp"
#include "depseq/generation.hpp"
#include "depseq/noise.hpp"

namespace depseq {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Regime { Clean, Observational, Propagated };

std::string_view to_string(Regime regime);
Regime parse_regime(std::string_view text);

/// Recipe for a linear chain X1 -> X2 -> ... -> Xn.
struct ChainSpec {
  std::size_t n_nodes = 2;
  ProducerParams producer;
  // One template per link, a single template for every link, or empty for
  // defaults. read_input_alphabet is filled in per link.
  std::vector<TransducerParams> transducers;
  std::vector<std::size_t> lengths;
  // Empty, or one entry per node. Each spec's alphabet is replaced by the
  // node's own alphabet.
  std::vector<std::optional<NoiseSpec>> noise;
  Regime regime = Regime::Clean;
  std::uint64_t seed = 0;

  bool operator==(const ChainSpec&) const = default;
};

void validate_spec(const ChainSpec& spec);

struct Chain {
  Producer producer;
  std::vector<Transducer> transducers;  // transducer k reads node k's alphabet
  std::vector<std::string> node_ids;

  const Alphabet& node_alphabet(std::size_t node) const;
};

using Edge = std::pair<std::string, std::string>;

struct NoiseRecord {
  NoiseKind kind = NoiseKind::InsertOrDelete;
  std::size_t requested = 0;
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::size_t skipped_deletions = 0;
  std::size_t replacements = 0;

  bool operator==(const NoiseRecord&) const = default;
};

struct NodeRecord {
  std::string id;
  Alphabet alphabet;
  Word sequence;  // as observed
  std::optional<Word> clean_sequence;  // present when noise was applied
  std::optional<NoiseRecord> noise_record;

  const Word& clean() const { return clean_sequence ? *clean_sequence : sequence; }
  bool operator==(const NodeRecord&) const = default;
};

struct ChainDataset {
  std::uint64_t seed = 0;
  ChainSpec spec;
  std::string tool_version = kToolVersion;
  std::vector<NodeRecord> nodes;
  std::vector<Edge> edges;

  bool operator==(const ChainDataset&) const = default;
};

/// Random-stream purposes; each node gets one substream per purpose.
enum class StreamPurpose : std::uint64_t { Structure = 0, Words = 1, Noise = 2 };

Rng node_stream(std::uint64_t root_seed, std::size_t node, StreamPurpose purpose);

Chain build_chain(const ChainSpec& spec);
ChainDataset generate_dataset(const Chain& chain, const ChainSpec& spec);
std::vector<Edge> export_ground_truth(const Chain& chain);

}  // namespace depseq
