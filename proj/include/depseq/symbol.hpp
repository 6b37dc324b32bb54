#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace depseq {

/// An event label. Usually a single character, but any non-empty token works.
class Symbol {
 public:
  explicit Symbol(std::string token);
  explicit Symbol(char c) : token_(1, c) {}

  const std::string& token() const noexcept { return token_; }

  auto operator<=>(const Symbol&) const = default;
  bool operator==(const Symbol&) const = default;

 private:
  std::string token_;
};

using Word = std::vector<Symbol>;
using Alphabet = std::set<Symbol>;

/// Splits on whitespace/commas when present, otherwise one symbol per character.
Word parse_word(std::string_view text);

/// Concatenates single-character tokens; falls back to space separation otherwise.
std::string format_word(std::span<const Symbol> word);

Alphabet parse_alphabet(std::string_view text);
std::string format_alphabet(const Alphabet& alphabet);

/// Distinct symbols of a word. Loses any alphabet symbol the word never uses.
Alphabet infer_alphabet(std::span<const Symbol> word);

}  // namespace depseq
