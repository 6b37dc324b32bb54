#include "depseq/noise.hpp"

#include <cmath>
#include <numeric>

#include "depseq/error.hpp"

namespace depseq {
namespace {

void check_spec(std::span<const Symbol> word, const NoiseSpec& spec) {
  if (spec.alphabet.empty()) throw InvalidSpec("noise alphabet must be non-empty");
  if (!(spec.noise_level >= 0.0 && spec.noise_level <= 1.0)) {
    throw InvalidSpec("noise_level = " + std::to_string(spec.noise_level) + " is outside [0, 1]");
  }
  if (!(spec.prob_insert >= 0.0 && spec.prob_insert <= 1.0)) {
    throw InvalidSpec("prob_insert = " + std::to_string(spec.prob_insert) + " is outside [0, 1]");
  }
  for (const auto& symbol : word) {
    if (!spec.alphabet.contains(symbol)) {
      throw InvalidSpec("word symbol '" + symbol.token() + "' is not in the noise alphabet");
    }
  }
}

NoiseOutcome insert_or_delete(std::span<const Symbol> word, const NoiseSpec& spec, Rng& rng) {
  check_spec(word, spec);
  NoiseOutcome outcome;
  outcome.requested = noise_operation_count(spec, word.size());
  outcome.word.assign(word.begin(), word.end());
  const std::vector<Symbol> alphabet(spec.alphabet.begin(), spec.alphabet.end());
  Word& w = outcome.word;
  for (std::size_t op = 0; op < outcome.requested; ++op) {
    if (rng.bernoulli(spec.prob_insert)) {
      const std::size_t pos = rng.uniform_index(w.size() + 1);
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos),
               alphabet[rng.uniform_index(alphabet.size())]);
      ++outcome.insertions;
    } else if (w.empty()) {
      ++outcome.skipped_deletions;
    } else {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(rng.uniform_index(w.size())));
      ++outcome.deletions;
    }
  }
  return outcome;
}

NoiseOutcome replace(std::span<const Symbol> word, const NoiseSpec& spec, Rng& rng) {
  check_spec(word, spec);
  NoiseOutcome outcome;
  outcome.requested = noise_operation_count(spec, word.size());
  outcome.word.assign(word.begin(), word.end());
  if (outcome.requested == 0) return outcome;
  if (spec.alphabet.size() < 2) {
    throw AlphabetTooSmall("replacement noise needs at least two symbols in the alphabet");
  }

  std::vector<std::size_t> positions(word.size());
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  for (std::size_t pos : rng.choose(std::move(positions), outcome.requested)) {
    std::vector<Symbol> others;
    for (const auto& s : spec.alphabet) {
      if (s != outcome.word[pos]) others.push_back(s);
    }
    outcome.word[pos] = others[rng.uniform_index(others.size())];
    ++outcome.replacements;
  }
  return outcome;
}

}  // namespace

std::size_t noise_operation_count(const NoiseSpec& spec, std::size_t word_length) {
  if (spec.n_symbols_change) {
    if (*spec.n_symbols_change > word_length) {
      throw InvalidSpec("n_symbols_change = " + std::to_string(*spec.n_symbols_change) +
                        " exceeds the word length " + std::to_string(word_length));
    }
    return *spec.n_symbols_change;
  }
  if (!(spec.noise_level >= 0.0 && spec.noise_level <= 1.0)) {
    throw InvalidSpec("noise_level = " + std::to_string(spec.noise_level) + " is outside [0, 1]");
  }
  // nearbyint rounds half-to-even under the default rounding mode.
  const auto n = static_cast<std::size_t>(std::nearbyint(spec.noise_level * static_cast<double>(word_length)));
  return std::min(n, word_length);
}

Word introduce_insert_or_delete_noise(std::span<const Symbol> word, const NoiseSpec& spec,
                                      Rng& rng) {
  if (spec.kind != NoiseKind::InsertOrDelete) throw InvalidSpec("expected an insert/delete spec");
  return insert_or_delete(word, spec, rng).word;
}

Word introduce_replacement_noise(std::span<const Symbol> word, const NoiseSpec& spec, Rng& rng) {
  if (spec.kind != NoiseKind::Replacement) throw InvalidSpec("expected a replacement spec");
  return replace(word, spec, rng).word;
}

NoiseOutcome apply_noise(std::span<const Symbol> word, const NoiseSpec& spec, Rng& rng) {
  return spec.kind == NoiseKind::InsertOrDelete ? insert_or_delete(word, spec, rng)
                                                : replace(word, spec, rng);
}

}  // namespace depseq
