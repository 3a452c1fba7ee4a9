#pragma once

// Proofs and their deterministic execution: the three-state veracity
// automaton, NatOp assignment for individual steps, span alignment into
// proof skeletons, and selection among proof candidates of different
// granularity.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "veritab/arith.hpp"
#include "veritab/natop.hpp"
#include "veritab/numerals.hpp"

namespace veritab {

enum class Verdict { Supported, Refuted, NEI };
enum class DfaState { S, R, N };

std::string verdict_name(Verdict v);
std::optional<Verdict> verdict_from_name(const std::string& name);
std::string dfa_state_name(DfaState s);

// One transition of the veracity automaton. Cover behaves as Independence.
DfaState dfa_step(DfaState state, NatOp op);

struct ExecutionResult {
  Verdict verdict = Verdict::Supported;
  std::vector<DfaState> trace;  // state after each step
};

// Runs the automaton from Supported over the operator sequence. An empty
// sequence stays Supported.
ExecutionResult execute_proof(const std::vector<NatOp>& ops);

struct ProofStep {
  std::string claim_span;  // c_i
  std::string evidence;    // e_i: extraction sentence or answer payload
  std::string question;    // q_i: empty for residual spans
  std::string answer;      // a_i: rendered answer, aligned text, or N/A
  NatOp op = NatOp::Independence;
  std::string note;  // set when a normalized (non-verbatim) match decided op
};

struct Proof {
  std::string subclaim;
  std::vector<ProofStep> steps;
  std::vector<DfaState> trace;
  Verdict verdict = Verdict::Supported;
};

Proof make_proof(const std::string& subclaim, std::vector<ProofStep> steps);

nlohmann::json proof_to_json(const Proof& proof);
// Requires subclaim + steps with valid op codes; trace and verdict are
// recomputed so a loaded proof is always internally consistent.
Proof proof_from_json(const nlohmann::json& j);

// Extra inputs for NatOp assignment. The fallback is consulted when the
// deterministic tiers cannot decide (typically a generation backend asked to
// pick an operator); absent or failing fallback yields Independence.
struct AssignContext {
  HaloPolicy halo;
  std::function<std::optional<NatOp>(const std::string& claim_span, const std::string& evidence)>
      fallback;
};

// Evidence is an executed answer: numeric answers go through the quantity
// comparison, textual payloads through the lexical tiers (list containment,
// normalized match, token subset).
NatOp assign_natop(const std::string& claim_span, const ArithAnswer& answer,
                   const MonotoneEnv& env, const AssignContext& ctx,
                   std::string* note = nullptr);

// Evidence is plain aligned text (residual spans). Empty text means N/A.
NatOp assign_natop(const std::string& claim_span, const std::string& evidence_text,
                   const MonotoneEnv& env, const AssignContext& ctx,
                   std::string* note = nullptr);

struct TargetedSpan {
  std::string question;
  std::string span_text;
  ArithAnswer answer;
  std::string answer_surface;  // rendered answer line as produced
  std::string extraction;
};

struct SpanPiece {
  size_t begin = 0, end = 0;  // char range within the subclaim
  bool targeted = false;
  int target_index = -1;          // into the targets vector
  std::string aligned_extraction;  // residual pieces; empty = N/A
};

// Splits an enumeration payload into items: comma-separated, corporate-style
// suffixes rejoined ("Asiacom Philippines, Inc."), a leading "and" stripped,
// and a bare "X and Y" treated as two members.
std::vector<std::string> split_list_items(const std::string& payload);

// Anchors each targeted span at its first unused occurrence, splits the
// residual gaps into chunks (new chunk at phrase-opening prepositions), and
// aligns each residual chunk to the best-overlapping extraction. The pieces
// partition the subclaim in order.
std::vector<SpanPiece> align_spans(const std::string& subclaim,
                                   const std::vector<TargetedSpan>& targets,
                                   const std::vector<std::string>& extractions);

// Picks among candidate step sequences: fewest Independence ops, then a
// decisive verdict (Supported or Refuted), then more steps, then first.
Proof select_proof(const std::string& subclaim,
                   const std::vector<std::vector<ProofStep>>& candidates);

}  // namespace veritab
