#include "veritab/natlog.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "veritab/tables.hpp"
#include "veritab/textnorm.hpp"

namespace veritab {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Supported: return "Supported";
    case Verdict::Refuted: return "Refuted";
    case Verdict::NEI: return "NEI";
  }
  return "NEI";
}

std::optional<Verdict> verdict_from_name(const std::string& name) {
  std::string n = fold_text(trim(name));
  if (n == "supported" || n == "supports") return Verdict::Supported;
  if (n == "refuted" || n == "refutes") return Verdict::Refuted;
  if (n == "nei" || n == "not enough info" || n == "not enough information") return Verdict::NEI;
  return std::nullopt;
}

std::string dfa_state_name(DfaState s) {
  switch (s) {
    case DfaState::S: return "S";
    case DfaState::R: return "R";
    case DfaState::N: return "N";
  }
  return "N";
}

DfaState dfa_step(DfaState state, NatOp op) {
  op = collapse_cover(op);
  switch (state) {
    case DfaState::S:
      switch (op) {
        case NatOp::Equivalence:
        case NatOp::ForwardEntailment:
          return DfaState::S;
        case NatOp::Negation:
        case NatOp::Alternation:
          return DfaState::R;
        default:
          return DfaState::N;
      }
    case DfaState::R:
      switch (op) {
        case NatOp::Equivalence:
        case NatOp::ReverseEntailment:
          return DfaState::R;
        case NatOp::Negation:
          return DfaState::S;
        default:
          return DfaState::N;
      }
    case DfaState::N:
      return DfaState::N;
  }
  return DfaState::N;
}

ExecutionResult execute_proof(const std::vector<NatOp>& ops) {
  ExecutionResult out;
  DfaState state = DfaState::S;
  for (NatOp op : ops) {
    state = dfa_step(state, op);
    out.trace.push_back(state);
  }
  switch (state) {
    case DfaState::S: out.verdict = Verdict::Supported; break;
    case DfaState::R: out.verdict = Verdict::Refuted; break;
    case DfaState::N: out.verdict = Verdict::NEI; break;
  }
  return out;
}

Proof make_proof(const std::string& subclaim, std::vector<ProofStep> steps) {
  Proof p;
  p.subclaim = subclaim;
  p.steps = std::move(steps);
  std::vector<NatOp> ops;
  for (auto& s : p.steps) ops.push_back(s.op);
  ExecutionResult exec = execute_proof(ops);
  p.trace = std::move(exec.trace);
  p.verdict = exec.verdict;
  return p;
}

nlohmann::json proof_to_json(const Proof& proof) {
  nlohmann::json steps = nlohmann::json::array();
  for (auto& s : proof.steps) {
    nlohmann::json step{{"c", s.claim_span},
                        {"e", s.evidence},
                        {"q", s.question},
                        {"a", s.answer},
                        {"op", natop_code(s.op)}};
    if (!s.note.empty()) step["note"] = s.note;
    steps.push_back(std::move(step));
  }
  nlohmann::json trace = nlohmann::json::array();
  for (auto& t : proof.trace) trace.push_back(dfa_state_name(t));
  return nlohmann::json{{"subclaim", proof.subclaim},
                        {"steps", std::move(steps)},
                        {"trace", std::move(trace)},
                        {"verdict", verdict_name(proof.verdict)}};
}

Proof proof_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("subclaim") || !j.contains("steps"))
    throw std::invalid_argument("proof requires subclaim and steps");
  std::vector<ProofStep> steps;
  for (auto& js : j.at("steps")) {
    ProofStep s;
    s.claim_span = js.value("c", "");
    s.evidence = js.value("e", "");
    s.question = js.value("q", "");
    s.answer = js.value("a", "");
    s.note = js.value("note", "");
    auto op = natop_from_code(js.value("op", ""));
    if (!op) throw std::invalid_argument("unknown op code: " + js.value("op", ""));
    s.op = *op;
    steps.push_back(std::move(s));
  }
  return make_proof(j.at("subclaim").get<std::string>(), std::move(steps));
}

std::vector<std::string> split_list_items(const std::string& payload) {
  auto digit = [&](size_t i) {
    return i < payload.size() && std::isdigit(static_cast<unsigned char>(payload[i]));
  };
  // A comma between a digit and exactly three digits is a thousands
  // separator, not a list delimiter.
  auto grouping_comma = [&](size_t i) {
    return i > 0 && digit(i - 1) && digit(i + 1) && digit(i + 2) && digit(i + 3) &&
           !digit(i + 4);
  };
  std::vector<std::string> rough;
  std::string cur;
  for (size_t i = 0; i < payload.size(); ++i) {
    if (payload[i] == ',' && !grouping_comma(i)) {
      rough.push_back(cur);
      cur.clear();
    } else {
      cur += payload[i];
    }
  }
  rough.push_back(cur);
  std::vector<std::string> items;
  static const std::set<std::string> kSuffixes = {"inc", "ltd", "llc", "co", "corp", "jr", "sr"};
  for (auto& piece : rough) {
    std::string t = trim(piece);
    if (t.empty()) continue;
    std::string n = normalize_text(t);
    if (!items.empty() && kSuffixes.count(n)) {
      items.back() += ", " + t;
      continue;
    }
    if (n.rfind("and ", 0) == 0) t = trim(t.substr(t.find(' ') + 1));
    if (!t.empty()) items.push_back(t);
  }
  // A trailing "X and Y" item is two members.
  std::vector<std::string> out;
  for (auto& item : items) {
    std::string n = normalize_text(item);
    size_t pos = n.find(" and ");
    if (pos != std::string::npos && items.size() == 1) {
      // Only split a bare two-item list; embedded "and" inside longer lists
      // was already handled by the comma pass.
      std::string folded = fold_text(item);
      size_t raw_pos = folded.find(" and ");
      if (raw_pos != std::string::npos) {
        out.push_back(trim(item.substr(0, raw_pos)));
        out.push_back(trim(item.substr(raw_pos + 5)));
        continue;
      }
    }
    out.push_back(item);
  }
  return out;
}

namespace {

std::optional<NatOp> list_relation(const std::string& claim_span, const std::string& payload,
                                   std::string* note) {
  auto items = split_list_items(payload);
  if (items.size() < 2) return std::nullopt;
  std::string claim_n = normalize_text(claim_span);
  std::vector<std::string> item_n;
  for (auto& it : items) item_n.push_back(normalize_text(it));
  auto strip_plural = [](const std::string& s) {
    std::string out;
    std::istringstream iss(s);
    std::string t;
    while (iss >> t) {
      if (t.size() > 3 && t.back() == 's' && !std::isdigit(static_cast<unsigned char>(t[0])))
        t.pop_back();
      if (!out.empty()) out += ' ';
      out += t;
    }
    return out;
  };
  std::string claim_p = strip_plural(claim_n);
  for (size_t i = 0; i < items.size(); ++i) {
    if (strip_plural(item_n[i]) == claim_p) {
      if (note) *note = "member of listed answer: " + items[i];
      return NatOp::ForwardEntailment;
    }
  }
  // Claim naming every member is equivalent to the list.
  auto claim_items = split_list_items(claim_span);
  if (claim_items.size() >= 2) {
    std::multiset<std::string> a, b;
    for (auto& it : claim_items) a.insert(strip_plural(normalize_text(it)));
    for (auto& it : items) b.insert(strip_plural(normalize_text(it)));
    if (a == b) return NatOp::Equivalence;
    bool subset = std::includes(b.begin(), b.end(), a.begin(), a.end());
    if (subset && !a.empty()) return NatOp::ForwardEntailment;
  }
  return std::nullopt;
}

const std::vector<std::pair<std::string, std::string>>& antonym_pairs() {
  static const std::vector<std::pair<std::string, std::string>> kPairs = {
      {"win", "lose"},   {"won", "lost"},     {"increase", "decrease"},
      {"more", "fewer"}, {"more", "less"},    {"higher", "lower"},
      {"most", "least"}, {"first", "last"},   {"best", "worst"},
      {"highest", "lowest"},
  };
  return kPairs;
}

bool negation_token(const std::string& t) {
  return t == "not" || t == "never" || t == "no" || t == "none" || t == "without";
}

// Lexical tiers shared by both evidence forms. Returns nullopt when no tier
// can decide.
std::optional<NatOp> lexical_relation(const std::string& claim_span, const std::string& evidence,
                                      std::string* note) {
  std::string cn = normalize_text(claim_span);
  std::string en = normalize_text(evidence);
  if (cn.empty() || en.empty()) return std::nullopt;
  auto ctoks = normalize_tokens(claim_span);
  auto etoks = normalize_tokens(evidence);
  auto joined = [](const std::vector<std::string>& v) {
    std::string s;
    for (auto& t : v) {
      if (!s.empty()) s += ' ';
      s += t;
    }
    return s;
  };
  if (joined(ctoks) == joined(etoks)) {
    if (note && cn != en) *note = "normalized match: " + trim(evidence);
    return NatOp::Equivalence;
  }
  if (content_run_match(claim_span, evidence)) {
    if (note) *note = "stated in evidence: " + trim(evidence);
    return NatOp::Equivalence;
  }
  if (content_subset(claim_span, evidence)) return NatOp::ForwardEntailment;
  if (content_subset(evidence, claim_span)) return NatOp::ReverseEntailment;

  // Negation asymmetry: one side carries an explicit negation cue and the
  // sides otherwise match.
  auto strip_neg = [](const std::vector<std::string>& toks, bool* had) {
    std::vector<std::string> out;
    for (auto& t : toks) {
      if (negation_token(t)) {
        *had = true;
        continue;
      }
      out.push_back(t);
    }
    return out;
  };
  bool cneg = false, eneg = false;
  auto cbase = strip_neg(ctoks, &cneg);
  auto ebase = strip_neg(etoks, &eneg);
  if (cneg != eneg) {
    if (joined(cbase) == joined(ebase)) return NatOp::Negation;
    std::string cb = joined(cbase), eb = joined(ebase);
    if (content_subset(cb, eb) || content_subset(eb, cb)) return NatOp::Alternation;
  }

  // Antonym swap with agreeing remainder.
  std::multiset<std::string> cset(ctoks.begin(), ctoks.end());
  std::multiset<std::string> eset(etoks.begin(), etoks.end());
  for (auto& [a, b] : antonym_pairs()) {
    auto swap_check = [&](const std::string& x, const std::string& y) {
      if (!cset.count(x) || !eset.count(y)) return false;
      auto cs = cset, es = eset;
      cs.erase(cs.find(x));
      es.erase(es.find(y));
      return cs == es;
    };
    if (swap_check(a, b) || swap_check(b, a)) return NatOp::Alternation;
  }
  return std::nullopt;
}

}  // namespace

NatOp assign_natop(const std::string& claim_span, const ArithAnswer& answer,
                   const MonotoneEnv& env, const AssignContext& ctx, std::string* note) {
  if (answer.is_na()) return NatOp::Independence;
  if (answer.is_numeric()) {
    if (auto op = compare_answer(answer, claim_span, env, ctx.halo)) return *op;
    // Numeric payload the claim offers nothing numeric for: try the lexical
    // tiers against the rendered value.
    std::string payload = answer.value->render(true) + (answer.percent ? "%" : "");
    if (auto op = lexical_relation(claim_span, payload, note))
      return project(env, *op);
    if (ctx.fallback) {
      if (auto op = ctx.fallback(claim_span, render_answer(answer))) return project(env, *op);
    }
    return NatOp::Independence;
  }
  // Textual payload (COPY/FILTER/SUPER).
  if (auto op = list_relation(claim_span, answer.text, note)) return project(env, *op);
  if (auto op = lexical_relation(claim_span, answer.text, note)) return project(env, *op);
  if (ctx.fallback) {
    if (auto op = ctx.fallback(claim_span, render_answer(answer))) return project(env, *op);
  }
  return NatOp::Independence;
}

NatOp assign_natop(const std::string& claim_span, const std::string& evidence_text,
                   const MonotoneEnv& env, const AssignContext& ctx, std::string* note) {
  std::string ev = trim(evidence_text);
  if (ev.empty() || ev == "N/A") return NatOp::Independence;
  if (auto op = lexical_relation(claim_span, ev, note)) return project(env, *op);
  auto cq = parse_quantity(claim_span);
  auto eq = parse_quantity(ev);
  if (cq && eq) return compare(*eq, *cq, env, ctx.halo);
  if (ctx.fallback) {
    if (auto op = ctx.fallback(claim_span, ev)) return project(env, *op);
  }
  return NatOp::Independence;
}

std::vector<SpanPiece> align_spans(const std::string& subclaim,
                                   const std::vector<TargetedSpan>& targets,
                                   const std::vector<std::string>& extractions) {
  std::vector<std::pair<size_t, size_t>> used;  // targeted char ranges
  std::vector<int> order;                       // target index per used entry
  for (size_t t = 0; t < targets.size(); ++t) {
    const std::string& needle = targets[t].span_text;
    if (needle.empty()) continue;
    size_t from = 0;
    while (true) {
      size_t pos = subclaim.find(needle, from);
      if (pos == std::string::npos) break;
      bool overlaps = false;
      for (auto& [b, e] : used)
        if (pos < e && pos + needle.size() > b) overlaps = true;
      if (!overlaps) {
        used.emplace_back(pos, pos + needle.size());
        order.push_back(static_cast<int>(t));
        break;
      }
      from = pos + 1;
    }
  }
  std::vector<size_t> idx(used.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return used[a] < used[b]; });

  std::vector<SpanPiece> pieces;
  auto add_residuals = [&](size_t begin, size_t end) {
    // Chunk a residual gap: new chunk opens at a phrase-opening preposition.
    static const std::set<std::string> kSplit = {"of", "in", "at", "on",   "for",   "from",
                                                 "to", "by", "with", "during", "within"};
    size_t i = begin;
    std::vector<std::pair<size_t, size_t>> words;
    while (i < end) {
      while (i < end && std::isspace(static_cast<unsigned char>(subclaim[i]))) ++i;
      size_t w = i;
      while (i < end && !std::isspace(static_cast<unsigned char>(subclaim[i]))) ++i;
      if (i > w) words.emplace_back(w, i);
    }
    if (words.empty()) return;
    std::vector<std::pair<size_t, size_t>> chunks;
    size_t cb = words[0].first, ce = words[0].second;
    for (size_t w = 1; w < words.size(); ++w) {
      std::string token = fold_text(normalize_text(
          subclaim.substr(words[w].first, words[w].second - words[w].first)));
      if (kSplit.count(token)) {
        chunks.emplace_back(cb, ce);
        cb = words[w].first;
      }
      ce = words[w].second;
    }
    chunks.emplace_back(cb, ce);
    for (auto& [b, e] : chunks) {
      SpanPiece piece;
      piece.begin = b;
      piece.end = e;
      piece.targeted = false;
      std::string text = subclaim.substr(b, e - b);
      size_t best = 0, best_score = 0;
      for (size_t x = 0; x < extractions.size(); ++x) {
        size_t score = content_overlap(text, extractions[x]);
        if (score > best_score) {
          best_score = score;
          best = x;
        }
      }
      if (best_score > 0) piece.aligned_extraction = extractions[best];
      pieces.push_back(std::move(piece));
    }
  };

  size_t cursor = 0;
  for (size_t k : idx) {
    auto [b, e] = used[k];
    if (b > cursor) add_residuals(cursor, b);
    SpanPiece piece;
    piece.begin = b;
    piece.end = e;
    piece.targeted = true;
    piece.target_index = order[k];
    pieces.push_back(piece);
    cursor = e;
  }
  if (cursor < subclaim.size()) add_residuals(cursor, subclaim.size());
  return pieces;
}

Proof select_proof(const std::string& subclaim,
                   const std::vector<std::vector<ProofStep>>& candidates) {
  if (candidates.empty()) throw std::invalid_argument("no proof candidates");
  struct Scored {
    Proof proof;
    size_t ind_count = 0;
    bool decisive = false;
  };
  std::vector<Scored> scored;
  for (auto& steps : candidates) {
    Scored s;
    s.proof = make_proof(subclaim, steps);
    for (auto& st : s.proof.steps)
      if (collapse_cover(st.op) == NatOp::Independence) ++s.ind_count;
    s.decisive = s.proof.verdict != Verdict::NEI;
    scored.push_back(std::move(s));
  }
  size_t best = 0;
  for (size_t i = 1; i < scored.size(); ++i) {
    const Scored &a = scored[i], &b = scored[best];
    if (a.ind_count != b.ind_count) {
      if (a.ind_count < b.ind_count) best = i;
      continue;
    }
    if (a.decisive != b.decisive) {
      if (a.decisive) best = i;
      continue;
    }
    if (a.proof.steps.size() > b.proof.steps.size()) best = i;
  }
  return scored[best].proof;
}

}  // namespace veritab
