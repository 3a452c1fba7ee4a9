#include "veritab/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "veritab/textnorm.hpp"

namespace veritab {

std::string evidence_text(const std::vector<Table>& tables) {
  std::string out;
  for (size_t i = 0; i < tables.size(); ++i) {
    if (i) out += "\n\n";
    out += linearize(tables[i]);
  }
  return out;
}

Verdict aggregate_verdicts(const std::vector<Verdict>& verdicts) {
  if (verdicts.empty()) throw std::invalid_argument("no verdicts to aggregate");
  bool all_supported = true;
  for (Verdict v : verdicts) {
    if (v == Verdict::Refuted) return Verdict::Refuted;
    if (v != Verdict::Supported) all_supported = false;
  }
  return all_supported ? Verdict::Supported : Verdict::NEI;
}

std::vector<std::string> decompose_into_subclaims(Gateway& gateway, const std::string& evidence,
                                                  const std::string& claim,
                                                  std::vector<GenerationTrace>* traces) {
  DecomposeResult result = gateway.decompose_claim(evidence, claim);
  if (traces) traces->push_back(result.trace);
  if (!result.trace.success || result.subclaims.empty()) return {claim};
  return result.subclaims;
}

namespace {

// Polarity context for a span: the span plus up to three preceding tokens, so
// cues like "never" scope over the span they precede.
MonotoneEnv env_for(const std::string& subclaim, size_t begin, size_t end) {
  size_t i = begin;
  for (int t = 0; t < 3 && i > 0; ++t) {
    while (i > 0 && std::isspace(static_cast<unsigned char>(subclaim[i - 1]))) --i;
    while (i > 0 && !std::isspace(static_cast<unsigned char>(subclaim[i - 1]))) --i;
  }
  return detect_env(subclaim.substr(i, end - i));
}

struct Group {
  std::vector<size_t> pieces;  // indices into the aligned pieces, ascending
  int target_index = -1;       // -1 for an unmerged residual chunk
};

int nearest_target_piece(const std::vector<SpanPiece>& pieces, size_t i) {
  int best = -1;
  size_t best_dist = pieces.size() + 1;
  for (size_t j = 0; j < pieces.size(); ++j) {
    if (!pieces[j].targeted) continue;
    size_t dist = i > j ? i - j : j - i;
    if (dist < best_dist || (dist == best_dist && j > i)) {
      best = static_cast<int>(j);
      best_dist = dist;
    }
  }
  return best;
}

bool groups_equal(const std::vector<Group>& a, const std::vector<Group>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].target_index != b[i].target_index || a[i].pieces != b[i].pieces) return false;
  return true;
}

}  // namespace

Proof verify_subclaim(Gateway& gateway, const std::vector<Table>& tables,
                      const std::string& subclaim, const PipelineConfig& config,
                      std::vector<GenerationTrace>* traces, bool* degraded) {
  if (degraded) *degraded = false;
  std::string evidence = evidence_text(tables);
  NumberInventory inventory = NumberInventory::build(tables);

  QgResult qg = gateway.generate_questions(evidence, subclaim);
  if (traces) traces->push_back(qg.trace);
  if (!qg.trace.success || qg.items.empty()) {
    if (degraded) *degraded = true;
    ProofStep step;
    step.claim_span = subclaim;
    step.answer = "N/A";
    step.op = NatOp::Independence;
    return make_proof(subclaim, {std::move(step)});
  }

  std::vector<TargetedSpan> targets;
  std::vector<std::string> extractions;
  for (const QgItem& item : qg.items) {
    QaResult qa = gateway.answer_question(evidence, item.span, item.question, inventory);
    if (traces) traces->push_back(qa.trace);
    TargetedSpan target;
    target.question = item.question;
    target.span_text = item.span;
    target.answer = qa.answer;
    if (qa.na) {
      target.answer_surface = "N/A";
    } else {
      target.answer_surface = qa.corrected ? render_answer(qa.answer) : qa.answer_line;
      target.extraction = qa.extraction;
    }
    extractions.push_back(target.extraction);
    targets.push_back(std::move(target));
  }

  std::vector<SpanPiece> pieces = align_spans(subclaim, targets, extractions);
  bool has_targets = std::any_of(pieces.begin(), pieces.end(),
                                 [](const SpanPiece& p) { return p.targeted; });

  std::map<std::pair<std::string, std::string>, std::optional<NatOp>> natop_cache;
  auto fallback_for = [&](std::string surface) {
    return [&gateway, &natop_cache, traces, surface](
               const std::string& claim_span, const std::string&) -> std::optional<NatOp> {
      std::string payload = trim(surface);
      if (payload.empty() || payload == "N/A") return std::nullopt;
      auto key = std::make_pair(payload, claim_span);
      auto it = natop_cache.find(key);
      if (it != natop_cache.end()) return it->second;
      NatOpResult result = gateway.query_natop(payload, claim_span);
      if (traces) traces->push_back(result.trace);
      natop_cache.emplace(key, result.op);
      return result.op;
    };
  };

  auto coalesce = [&](const std::function<bool(size_t)>& merge_piece) {
    std::map<size_t, Group> by_owner;
    for (size_t i = 0; i < pieces.size(); ++i) {
      size_t owner = i;
      if (!pieces[i].targeted && has_targets && merge_piece(i))
        owner = static_cast<size_t>(nearest_target_piece(pieces, i));
      by_owner[owner].pieces.push_back(i);
    }
    std::vector<Group> groups;
    for (auto& [owner, group] : by_owner) {
      group.target_index = pieces[owner].targeted ? pieces[owner].target_index : -1;
      std::sort(group.pieces.begin(), group.pieces.end());
      groups.push_back(std::move(group));
    }
    std::sort(groups.begin(), groups.end(),
              [](const Group& a, const Group& b) { return a.pieces.front() < b.pieces.front(); });
    return groups;
  };

  auto build_steps = [&](const std::vector<Group>& groups) {
    std::vector<ProofStep> steps;
    for (const Group& group : groups) {
      size_t begin = subclaim.size(), end = 0;
      for (size_t idx : group.pieces) {
        begin = std::min(begin, pieces[idx].begin);
        end = std::max(end, pieces[idx].end);
      }
      std::string text = trim(subclaim.substr(begin, end - begin));
      MonotoneEnv env = env_for(subclaim, begin, end);
      ProofStep step;
      step.claim_span = text;
      if (group.target_index >= 0) {
        const TargetedSpan& target = targets[group.target_index];
        step.evidence = target.extraction;
        step.question = target.question;
        step.answer = target.answer_surface.empty() ? "N/A" : target.answer_surface;
        AssignContext ctx{config.halo, fallback_for(target.answer_surface)};
        step.op = assign_natop(text, target.answer, env, ctx, &step.note);
      } else {
        const SpanPiece& piece = pieces[group.pieces.front()];
        step.evidence = piece.aligned_extraction;
        step.answer = piece.aligned_extraction.empty() ? "N/A" : piece.aligned_extraction;
        AssignContext ctx{config.halo, fallback_for(piece.aligned_extraction)};
        step.op = assign_natop(text, piece.aligned_extraction, env, ctx, &step.note);
      }
      steps.push_back(std::move(step));
    }
    return steps;
  };

  // Chunks with no content words never stand alone.
  auto function_word_only = [&](size_t i) {
    return content_tokens(subclaim.substr(pieces[i].begin, pieces[i].end - pieces[i].begin))
        .empty();
  };

  std::vector<Group> fine = coalesce(function_word_only);
  std::vector<ProofStep> fine_steps = build_steps(fine);

  std::vector<std::vector<ProofStep>> candidates;
  candidates.push_back(fine_steps);

  // Coarser variant: residual chunks whose relation came out Independence are
  // folded into the nearest answered span.
  std::set<size_t> vacuous;
  for (size_t k = 0; k < fine.size(); ++k)
    if (fine[k].target_index < 0 && fine_steps[k].op == NatOp::Independence)
      vacuous.insert(fine[k].pieces.front());
  std::vector<Group> partial = coalesce(
      [&](size_t i) { return function_word_only(i) || vacuous.count(i) > 0; });
  if (!groups_equal(partial, fine)) candidates.push_back(build_steps(partial));

  // Coarsest variant: every residual chunk is folded in.
  std::vector<Group> coarse = coalesce([](size_t) { return true; });
  if (!groups_equal(coarse, partial) && !groups_equal(coarse, fine))
    candidates.push_back(build_steps(coarse));

  return select_proof(subclaim, candidates);
}

VerdictReport verify_claim(Gateway& gateway, const std::vector<Table>& tables,
                           const std::string& claim, const PipelineConfig& config) {
  VerdictReport report;
  std::string evidence = evidence_text(tables);
  if (config.decompose) {
    report.subclaims = decompose_into_subclaims(gateway, evidence, claim, &report.traces);
  } else {
    report.subclaims = {claim};
  }
  std::vector<Verdict> verdicts;
  for (const std::string& subclaim : report.subclaims) {
    bool degraded = false;
    Proof proof = verify_subclaim(gateway, tables, subclaim, config, &report.traces, &degraded);
    if (degraded) report.execution_found = false;
    verdicts.push_back(proof.verdict);
    report.proofs.push_back(std::move(proof));
  }
  report.verdict = aggregate_verdicts(verdicts);
  return report;
}

}  // namespace veritab
