#include "depseq/chain.hpp"

#include <memory>

#include "depseq/word_engine.hpp"

namespace depseq {
namespace {

const TransducerParams& template_for(const ChainSpec& spec, std::size_t link,
                                     const TransducerParams& fallback) {
  if (spec.transducers.empty()) return fallback;
  if (spec.transducers.size() == 1) return spec.transducers.front();
  return spec.transducers[link];
}

const std::optional<NoiseSpec>& noise_for(const ChainSpec& spec, std::size_t node) {
  static const std::optional<NoiseSpec> none;
  return spec.noise.empty() ? none : spec.noise[node];
}

NoiseRecord record_of(NoiseKind kind, const NoiseOutcome& outcome) {
  return {kind, outcome.requested, outcome.insertions, outcome.deletions,
          outcome.skipped_deletions, outcome.replacements};
}

// Applies the node's noise spec (if any) to its clean sequence.
void apply_node_noise(NodeRecord& node, const ChainSpec& spec, std::size_t index) {
  const auto& noise = noise_for(spec, index);
  if (!noise) return;
  NoiseSpec bound = *noise;
  bound.alphabet = node.alphabet;
  Rng rng = node_stream(spec.seed, index, StreamPurpose::Noise);
  NoiseOutcome outcome = apply_noise(node.sequence, bound, rng);
  node.clean_sequence = std::move(node.sequence);
  node.sequence = std::move(outcome.word);
  node.noise_record = record_of(bound.kind, outcome);
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Clean: return "clean";
    case Regime::Observational: return "observational";
    case Regime::Propagated: return "propagated";
  }
  return "clean";
}

Regime parse_regime(std::string_view text) {
  if (text == "clean") return Regime::Clean;
  if (text == "observational") return Regime::Observational;
  if (text == "propagated") return Regime::Propagated;
  throw InvalidParams("unknown regime '" + std::string(text) + "'");
}

void validate_spec(const ChainSpec& spec) {
  if (spec.n_nodes < 1) throw InvalidParams("n_nodes must be at least 1");
  if (spec.lengths.size() != spec.n_nodes) {
    throw InvalidParams("expected " + std::to_string(spec.n_nodes) + " lengths, got " +
                        std::to_string(spec.lengths.size()));
  }
  for (std::size_t len : spec.lengths) {
    if (len < 1) throw InvalidParams("every node length must be at least 1");
  }
  const std::size_t links = spec.n_nodes - 1;
  if (!spec.transducers.empty() && spec.transducers.size() != 1 &&
      spec.transducers.size() != links) {
    throw InvalidParams("expected 0, 1 or " + std::to_string(links) + " transducer templates");
  }
  if (!spec.noise.empty() && spec.noise.size() != spec.n_nodes) {
    throw InvalidParams("expected 0 or " + std::to_string(spec.n_nodes) + " noise entries");
  }
  validate_params(spec.producer);
  for (TransducerParams t : spec.transducers) {
    // The real input alphabet is only known at build time.
    if (t.read_input_alphabet.empty()) t.read_input_alphabet = {Symbol('a')};
    validate_params(t);
  }
  for (const auto& noise : spec.noise) {
    if (!noise) continue;
    if (!(noise->noise_level >= 0.0 && noise->noise_level <= 1.0)) {
      throw InvalidParams("noise_level must lie in [0, 1]");
    }
    if (!(noise->prob_insert >= 0.0 && noise->prob_insert <= 1.0)) {
      throw InvalidParams("prob_insert must lie in [0, 1]");
    }
  }
}

const Alphabet& Chain::node_alphabet(std::size_t node) const {
  return node == 0 ? producer.alphabet : transducers.at(node - 1).output_alphabet;
}

Rng node_stream(std::uint64_t root_seed, std::size_t node, StreamPurpose purpose) {
  return Rng(root_seed).substream({static_cast<std::uint64_t>(node),
                                   static_cast<std::uint64_t>(purpose)});
}

Chain build_chain(const ChainSpec& spec) {
  validate_spec(spec);
  Chain chain;
  Rng structure = node_stream(spec.seed, 0, StreamPurpose::Structure);
  chain.producer = generate_random_producer(spec.producer, structure);
  chain.node_ids.push_back("X1");

  const TransducerParams defaults;
  for (std::size_t node = 1; node < spec.n_nodes; ++node) {
    TransducerParams params = template_for(spec, node - 1, defaults);
    params.read_input_alphabet = chain.node_alphabet(node - 1);
    Rng rng = node_stream(spec.seed, node, StreamPurpose::Structure);
    chain.transducers.push_back(generate_random_transducer(params, rng));
    chain.node_ids.push_back("X" + std::to_string(node + 1));
  }
  return chain;
}

std::vector<Edge> export_ground_truth(const Chain& chain) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k + 1 < chain.node_ids.size(); ++k) {
    edges.emplace_back(chain.node_ids[k], chain.node_ids[k + 1]);
  }
  return edges;
}

ChainDataset generate_dataset(const Chain& chain, const ChainSpec& spec) {
  validate_spec(spec);
  if (chain.node_ids.size() != spec.n_nodes) {
    throw InvalidParams("chain has " + std::to_string(chain.node_ids.size()) +
                        " nodes but the spec asks for " + std::to_string(spec.n_nodes));
  }
  const std::size_t n = spec.n_nodes;

  ChainDataset dataset;
  dataset.seed = spec.seed;
  dataset.spec = spec;
  dataset.edges = export_ground_truth(chain);
  dataset.nodes.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    dataset.nodes[k].id = chain.node_ids[k];
    dataset.nodes[k].alphabet = chain.node_alphabet(k);
  }

  if (spec.regime == Regime::Propagated) {
    Rng words = node_stream(spec.seed, 0, StreamPurpose::Words);
    dataset.nodes[0].sequence = random_word_from_producer(chain.producer, spec.lengths[0], words);
    apply_node_noise(dataset.nodes[0], spec, 0);
    for (std::size_t k = 1; k < n; ++k) {
      const Word& feed = dataset.nodes[k - 1].sequence;
      Rng rng = node_stream(spec.seed, k, StreamPurpose::Words);
      try {
        dataset.nodes[k].sequence =
            random_word_from_transducer(chain.transducers[k - 1], feed, spec.lengths[k], false, rng)
                .output;
      } catch (const InputExhausted& e) {
        throw InputExhausted(
            "node " + chain.node_ids[k] + " produced " + std::to_string(e.partial_output().size()) +
                " of " + std::to_string(spec.lengths[k]) + " symbols (shortfall " +
                std::to_string(e.shortfall()) + ") after reading all " +
                std::to_string(e.consumed()) + " observed symbols of upstream node " +
                chain.node_ids[k - 1] + "; increase the length of " + chain.node_ids[k - 1],
            e.partial_output(), e.consumed(), e.requested());
      }
      apply_node_noise(dataset.nodes[k], spec, k);
    }
    return dataset;
  }

  // Lazy realization: pulling a node extends its upstream on demand, so each
  // recorded upstream sequence may exceed its configured length.
  std::vector<std::unique_ptr<SymbolSource>> sources;
  sources.push_back(std::make_unique<ProducerStream>(
      chain.producer, node_stream(spec.seed, 0, StreamPurpose::Words)));
  for (std::size_t k = 1; k < n; ++k) {
    sources.push_back(std::make_unique<TransducerStream>(
        chain.transducers[k - 1], *sources[k - 1], node_stream(spec.seed, k, StreamPurpose::Words)));
  }
  for (std::size_t k = 0; k < n; ++k) {
    while (sources[k]->transcript().size() < spec.lengths[k]) sources[k]->next();
  }
  for (std::size_t k = 0; k < n; ++k) {
    dataset.nodes[k].sequence = sources[k]->transcript();
    if (spec.regime == Regime::Observational) apply_node_noise(dataset.nodes[k], spec, k);
  }
  return dataset;
}

}  // namespace depseq
