#pragma once

// The end-to-end verification pipeline: decompose a claim into subclaims,
// generate question/span pairs per subclaim, answer each with an executable
// arithmetic step, align the remaining words, assign operators, and pick the
// best proof among coarser and finer segmentations of the same subclaim.

#include <string>
#include <vector>

#include "veritab/gateway.hpp"
#include "veritab/natlog.hpp"
#include "veritab/numerals.hpp"
#include "veritab/tables.hpp"

namespace veritab {

struct PipelineConfig {
  HaloPolicy halo;
  bool decompose = true;
};

struct VerdictReport {
  Verdict verdict = Verdict::NEI;
  std::vector<std::string> subclaims;
  std::vector<Proof> proofs;  // one per subclaim
  // False when some subclaim fell back to a single vacuous step because no
  // valid question set could be generated.
  bool execution_found = true;
  std::vector<GenerationTrace> traces;
};

// Linearized evidence for prompting: one block per table.
std::string evidence_text(const std::vector<Table>& tables);

// Refuted dominates, full support is required for Supported, anything else is
// not enough information. Throws std::invalid_argument on an empty list.
Verdict aggregate_verdicts(const std::vector<Verdict>& verdicts);

// Splits a claim into independently checkable subclaims. Falls back to the
// whole claim when generation fails or produces nothing.
std::vector<std::string> decompose_into_subclaims(Gateway& gateway, const std::string& evidence,
                                                  const std::string& claim,
                                                  std::vector<GenerationTrace>* traces = nullptr);

// Produces the selected proof for one subclaim. degraded (when given) is set
// if no question set could be generated and the proof is the vacuous
// single-step fallback.
Proof verify_subclaim(Gateway& gateway, const std::vector<Table>& tables,
                      const std::string& subclaim, const PipelineConfig& config = {},
                      std::vector<GenerationTrace>* traces = nullptr, bool* degraded = nullptr);

VerdictReport verify_claim(Gateway& gateway, const std::vector<Table>& tables,
                           const std::string& claim, const PipelineConfig& config = {});

}  // namespace veritab
