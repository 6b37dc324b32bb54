#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "depseq/symbol.hpp"
#include "depseq/violation.hpp"

namespace depseq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generator or pipeline parameters outside their legal range.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Malformed sampler or noise specification.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class InvalidLength : public Error {
 public:
  using Error::Error;
};

class InvalidSymbol : public Error {
 public:
  using Error::Error;
};

class NoTransition : public Error {
 public:
  NoTransition(std::string state, Symbol symbol);
  const std::string& state() const noexcept { return state_; }
  const Symbol& symbol() const noexcept { return symbol_; }

 private:
  std::string state_;
  Symbol symbol_;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

class RepairFailed : public Error {
 public:
  using Error::Error;
};

class AlphabetExhausted : public Error {
 public:
  using Error::Error;
};

class AlphabetTooSmall : public Error {
 public:
  using Error::Error;
};

/// Base for errors that carry a violation list.
class ViolationError : public Error {
 public:
  ViolationError(const std::string& what, std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// An automaton handed to the word engine failed its validator.
class InvalidAutomaton : public ViolationError {
 public:
  using ViolationError::ViolationError;
};

/// A parsed document describes an automaton that fails its validator.
class ValidationError : public ViolationError {
 public:
  using ViolationError::ViolationError;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& reason);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// The transducer needed more input than was available. Keeps the work done so far.
class InputExhausted : public Error {
 public:
  InputExhausted(Word partial, std::size_t consumed, std::size_t requested);
  InputExhausted(const std::string& what, Word partial, std::size_t consumed,
                 std::size_t requested);

  const Word& partial_output() const noexcept { return partial_; }
  std::size_t consumed() const noexcept { return consumed_; }
  std::size_t requested() const noexcept { return requested_; }
  std::size_t shortfall() const noexcept { return requested_ - partial_.size(); }

 private:
  Word partial_;
  std::size_t consumed_;
  std::size_t requested_;
};

}  // namespace depseq
