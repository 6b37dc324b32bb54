#include "depseq/violation.hpp"

namespace depseq {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::EmptyAutomaton: return "EmptyAutomaton";
    case ViolationKind::BadInitial: return "BadInitial";
    case ViolationKind::ShapeMismatch: return "ShapeMismatch";
    case ViolationKind::UnknownState: return "UnknownState";
    case ViolationKind::DuplicateStateName: return "DuplicateStateName";
    case ViolationKind::DuplicateTransition: return "DuplicateTransition";
    case ViolationKind::UnknownSymbol: return "UnknownSymbol";
    case ViolationKind::DeadEnd: return "DeadEnd";
    case ViolationKind::Unreachable: return "Unreachable";
    case ViolationKind::AlphabetOverlap: return "AlphabetOverlap";
    case ViolationKind::NotReceptive: return "NotReceptive";
    case ViolationKind::WrongLabelClass: return "WrongLabelClass";
    case ViolationKind::InputOnlyCycle: return "InputOnlyCycle";
    case ViolationKind::NondeterministicOutput: return "NondeterministicOutput";
    case ViolationKind::NoOutputState: return "NoOutputState";
  }
  return "Unknown";
}

std::string Violation::describe() const {
  std::string out(to_string(kind));
  out.push_back('(');
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i > 0) out += ", ";
    out += states[i];
  }
  if (symbol) {
    if (!states.empty()) out += ", ";
    out += symbol->token();
  }
  out.push_back(')');
  return out;
}

std::string describe(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.describe();
  }
  return out.empty() ? "no violations" : out;
}

}  // namespace depseq
