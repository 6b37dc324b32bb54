#include "depseq/error.hpp"

namespace depseq {

NoTransition::NoTransition(std::string state, Symbol symbol)
    : Error("no transition from state '" + state + "' on symbol '" + symbol.token() + "'"),
      state_(std::move(state)),
      symbol_(std::move(symbol)) {}

ViolationError::ViolationError(const std::string& what, std::vector<Violation> violations)
    : Error(what + ": " + describe(violations)), violations_(std::move(violations)) {}

ParseError::ParseError(std::size_t position, const std::string& reason)
    : Error("parse error at byte " + std::to_string(position) + ": " + reason),
      position_(position) {}

namespace {

std::string exhausted_message(std::size_t produced, std::size_t consumed, std::size_t requested) {
  return "input exhausted after " + std::to_string(consumed) + " symbols with " +
         std::to_string(produced) + " of " + std::to_string(requested) + " output symbols produced";
}

}  // namespace

InputExhausted::InputExhausted(Word partial, std::size_t consumed, std::size_t requested)
    : Error(exhausted_message(partial.size(), consumed, requested)),
      partial_(std::move(partial)),
      consumed_(consumed),
      requested_(requested) {}

InputExhausted::InputExhausted(const std::string& what, Word partial, std::size_t consumed,
                               std::size_t requested)
    : Error(what), partial_(std::move(partial)), consumed_(consumed), requested_(requested) {}

}  // namespace depseq
