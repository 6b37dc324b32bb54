#include "depseq/symbol.hpp"

#include <algorithm>
#include <stdexcept>

namespace depseq {
namespace {

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  if (std::none_of(text.begin(), text.end(), is_separator)) {
    for (char c : text) tokens.emplace_back(1, c);
    return tokens;
  }
  std::string current;
  for (char c : text) {
    if (is_separator(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace

Symbol::Symbol(std::string token) : token_(std::move(token)) {
  if (token_.empty()) throw std::invalid_argument("symbol token must be non-empty");
}

Word parse_word(std::string_view text) {
  Word word;
  for (auto& token : tokenize(text)) word.emplace_back(std::move(token));
  return word;
}

std::string format_word(std::span<const Symbol> word) {
  const bool single = std::all_of(word.begin(), word.end(),
                                  [](const Symbol& s) { return s.token().size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single && i > 0) out.push_back(' ');
    out += word[i].token();
  }
  return out;
}

Alphabet parse_alphabet(std::string_view text) {
  Alphabet alphabet;
  for (auto& token : tokenize(text)) alphabet.emplace(std::move(token));
  return alphabet;
}

std::string format_alphabet(const Alphabet& alphabet) {
  std::string out;
  for (const auto& s : alphabet) {
    if (!out.empty()) out.push_back(',');
    out += s.token();
  }
  return out;
}

Alphabet infer_alphabet(std::span<const Symbol> word) {
  return Alphabet(word.begin(), word.end());
}

}  // namespace depseq
