#pragma once

#include <optional>
#include <string>
#include <vector>

#include "depseq/symbol.hpp"

namespace depseq {

enum class ViolationKind {
  EmptyAutomaton,
  BadInitial,
  ShapeMismatch,
  UnknownState,
  DuplicateStateName,
  DuplicateTransition,
  UnknownSymbol,
  DeadEnd,
  Unreachable,
  AlphabetOverlap,
  NotReceptive,
  WrongLabelClass,
  InputOnlyCycle,
  NondeterministicOutput,
  NoOutputState,
};

std::string_view to_string(ViolationKind kind);

/// One breached automaton invariant, naming the states (and symbol) involved.
struct Violation {
  ViolationKind kind;
  std::vector<std::string> states;
  std::optional<Symbol> symbol;

  std::string describe() const;
  bool operator==(const Violation&) const = default;
};

std::string describe(const std::vector<Violation>& violations);

}  // namespace depseq
