#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "depseq/rng.hpp"
#include "depseq/symbol.hpp"

namespace depseq {

enum class NoiseKind { InsertOrDelete, Replacement };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::InsertOrDelete;
  // Overrides noise_level when set.
  std::optional<std::size_t> n_symbols_change;
  double noise_level = 0.1;
  double prob_insert = 0.5;  // InsertOrDelete only
  Alphabet alphabet;

  bool operator==(const NoiseSpec&) const = default;
};

/// What a noise pass actually did.
struct NoiseOutcome {
  Word word;
  std::size_t requested = 0;
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::size_t skipped_deletions = 0;
  std::size_t replacements = 0;
};

/// n_symbols_change if given, else noise_level * length rounded half-to-even.
/// Throws InvalidSpec for out-of-range values.
std::size_t noise_operation_count(const NoiseSpec& spec, std::size_t word_length);

Word introduce_insert_or_delete_noise(std::span<const Symbol> word, const NoiseSpec& spec,
                                      Rng& rng);
Word introduce_replacement_noise(std::span<const Symbol> word, const NoiseSpec& spec, Rng& rng);

/// Dispatches on spec.kind and reports the operations applied.
NoiseOutcome apply_noise(std::span<const Symbol> word, const NoiseSpec& spec, Rng& rng);

}  // namespace depseq
