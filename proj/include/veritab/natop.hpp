#pragma once

// The seven natural-logic operators. Cover is accepted by projection tables
// but collapses to Independence when proofs are assembled, mirroring the
// three-state verdict automaton which has no distinct Cover transitions.

#include <optional>
#include <string>

namespace veritab {

enum class NatOp { Equivalence, ForwardEntailment, ReverseEntailment, Negation, Alternation, Cover, Independence };

// Serialization codes: EQ | FE | RE | NEG | ALT | IND (Cover has no code;
// collapse it before serializing).
std::string natop_code(NatOp op);
std::optional<NatOp> natop_from_code(const std::string& code);

// Display symbols (=, <, >, !, |, ~, #).
std::string natop_symbol(NatOp op);

inline NatOp collapse_cover(NatOp op) {
  return op == NatOp::Cover ? NatOp::Independence : op;
}

}  // namespace veritab
