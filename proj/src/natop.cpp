#include "veritab/natop.hpp"

namespace veritab {

std::string natop_code(NatOp op) {
  switch (op) {
    case NatOp::Equivalence: return "EQ";
    case NatOp::ForwardEntailment: return "FE";
    case NatOp::ReverseEntailment: return "RE";
    case NatOp::Negation: return "NEG";
    case NatOp::Alternation: return "ALT";
    case NatOp::Cover: return "IND";
    case NatOp::Independence: return "IND";
  }
  return "IND";
}

std::optional<NatOp> natop_from_code(const std::string& code) {
  if (code == "EQ") return NatOp::Equivalence;
  if (code == "FE") return NatOp::ForwardEntailment;
  if (code == "RE") return NatOp::ReverseEntailment;
  if (code == "NEG") return NatOp::Negation;
  if (code == "ALT") return NatOp::Alternation;
  if (code == "IND") return NatOp::Independence;
  return std::nullopt;
}

std::string natop_symbol(NatOp op) {
  switch (op) {
    case NatOp::Equivalence: return "=";
    case NatOp::ForwardEntailment: return "<";
    case NatOp::ReverseEntailment: return ">";
    case NatOp::Negation: return "!";
    case NatOp::Alternation: return "|";
    case NatOp::Cover: return "~";
    case NatOp::Independence: return "#";
  }
  return "#";
}

}  // namespace veritab
