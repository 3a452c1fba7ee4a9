// Release gates for the verification engine, one pass/fail line per check.
// Everything runs offline: the deterministic core plus the canned-response
// backend, with the bundled recorded traces as end-to-end input.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "municipal.hpp"
#include "veritab/dataset.hpp"
#include "veritab/metrics.hpp"
#include "veritab/natlog.hpp"
#include "veritab/numerals.hpp"
#include "veritab/pipeline.hpp"
#include "veritab/probe.hpp"
#include "veritab/tables.hpp"
#include "veritab/textnorm.hpp"

using namespace veritab;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

template <typename T>
void expect_eq(const T& got, const T& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream msg;
    msg << what << " (got " << got << ", want " << want << ")";
    throw Failure(msg.str());
  }
}

// Literal edge table kept independent of the production automaton.
DfaState walker_step(DfaState state, NatOp op) {
  if (state == DfaState::N) return DfaState::N;
  std::string code = natop_code(collapse_cover(op));
  static const std::map<std::pair<DfaState, std::string>, DfaState> edges = {
      {{DfaState::S, "EQ"}, DfaState::S},  {{DfaState::S, "FE"}, DfaState::S},
      {{DfaState::S, "RE"}, DfaState::N},  {{DfaState::S, "NEG"}, DfaState::R},
      {{DfaState::S, "ALT"}, DfaState::R}, {{DfaState::S, "IND"}, DfaState::N},
      {{DfaState::R, "EQ"}, DfaState::R},  {{DfaState::R, "RE"}, DfaState::R},
      {{DfaState::R, "NEG"}, DfaState::S}, {{DfaState::R, "FE"}, DfaState::N},
      {{DfaState::R, "ALT"}, DfaState::N}, {{DfaState::R, "IND"}, DfaState::N},
  };
  return edges.at({state, code});
}

Verdict walker_verdict(DfaState state) {
  switch (state) {
    case DfaState::S: return Verdict::Supported;
    case DfaState::R: return Verdict::Refuted;
    default: return Verdict::NEI;
  }
}

Num oracle_round(const Num& x, RoundnessBase base) {
  Num b = roundness_base_value(base);
  std::vector<Num> candidates;
  for (Num scale(1); !(b * scale > x * Num(100)); scale = scale * Num(10)) {
    for (long long k = 1; k <= 9; ++k) {
      Num c = Num(k) * b * scale;
      if (c.is_integer()) candidates.push_back(c);
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Num& p, const Num& q) { return p < q; });
  Num best = candidates.front();
  for (const Num& c : candidates)
    if ((c - x).abs() < (best - x).abs()) best = c;
  return best;
}

double oracle_accuracy(const std::vector<std::string>& preds,
                       const std::vector<std::string>& golds) {
  size_t hit = 0;
  for (size_t i = 0; i < preds.size(); ++i)
    if (preds[i] == golds[i]) ++hit;
  return static_cast<double>(hit) / preds.size();
}

double oracle_macro_f1(const std::vector<std::string>& preds,
                       const std::vector<std::string>& golds) {
  std::set<std::string> labels(golds.begin(), golds.end());
  double sum = 0.0;
  for (const std::string& label : labels) {
    size_t tp = 0, pred_n = 0, gold_n = 0;
    for (size_t i = 0; i < preds.size(); ++i) {
      if (preds[i] == label) ++pred_n;
      if (golds[i] == label) ++gold_n;
      if (preds[i] == label && golds[i] == label) ++tp;
    }
    double p = pred_n ? static_cast<double>(tp) / pred_n : 0.0;
    double r = gold_n ? static_cast<double>(tp) / gold_n : 0.0;
    sum += (p + r) > 0 ? 2.0 * p * r / (p + r) : 0.0;
  }
  return sum / labels.size();
}

bool close(double a, double b) { return std::abs(a - b) < 1e-9; }

Quantity exact(long long v) {
  Quantity q;
  q.value = Num(v);
  return q;
}

ArithAnswer numeric_answer(ArithFunction fn, long long v) {
  ArithAnswer a;
  a.fn = fn;
  a.value = Num(v);
  return a;
}

const std::vector<NatOp>& all_ops() {
  static const std::vector<NatOp> ops = {
      NatOp::Equivalence, NatOp::ForwardEntailment, NatOp::ReverseEntailment,
      NatOp::Negation,    NatOp::Alternation,       NatOp::Cover,
      NatOp::Independence};
  return ops;
}

void check_walker_agreement() {
  auto started = std::chrono::steady_clock::now();
  size_t checked = 0;
  std::vector<NatOp> ops;
  std::function<void()> recurse = [&]() {
    ExecutionResult result = execute_proof(ops);
    DfaState state = DfaState::S;
    expect(result.trace.size() == ops.size(), "trace length mismatch");
    for (size_t i = 0; i < ops.size(); ++i) {
      state = walker_step(state, ops[i]);
      expect(result.trace[i] == state, "trace prefix diverges from the walker");
    }
    expect(result.verdict == walker_verdict(state), "verdict diverges from the walker");
    ++checked;
    if (ops.size() == 4) return;
    for (NatOp op : all_ops()) {
      ops.push_back(op);
      recurse();
      ops.pop_back();
    }
  };
  recurse();
  expect_eq(checked, size_t{2801}, "sequence count");
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  expect(elapsed < 1000, "walker sweep exceeded one second");
}

void check_transition_edges() {
  auto step = [](DfaState s, NatOp op) { return dfa_step(s, op); };
  expect(step(DfaState::S, NatOp::Equivalence) == DfaState::S, "S =");
  expect(step(DfaState::S, NatOp::ForwardEntailment) == DfaState::S, "S <");
  expect(step(DfaState::S, NatOp::ReverseEntailment) == DfaState::N, "S >");
  expect(step(DfaState::S, NatOp::Negation) == DfaState::R, "S !");
  expect(step(DfaState::S, NatOp::Alternation) == DfaState::R, "S |");
  expect(step(DfaState::S, NatOp::Independence) == DfaState::N, "S #");
  expect(step(DfaState::R, NatOp::Equivalence) == DfaState::R, "R =");
  expect(step(DfaState::R, NatOp::ReverseEntailment) == DfaState::R, "R >");
  expect(step(DfaState::R, NatOp::Negation) == DfaState::S, "R !");
  expect(step(DfaState::R, NatOp::ForwardEntailment) == DfaState::N, "R <");
  expect(step(DfaState::R, NatOp::Alternation) == DfaState::N, "R |");
  expect(step(DfaState::R, NatOp::Independence) == DfaState::N, "R #");
  for (NatOp op : all_ops())
    expect(step(DfaState::N, op) == DfaState::N, "rejection state must absorb");
  for (DfaState s : {DfaState::S, DfaState::R, DfaState::N})
    expect(step(s, NatOp::Cover) == step(s, NatOp::Independence),
           "Cover must transition like Independence");
}

void check_worked_example() {
  ExecutionResult undecomposed = execute_proof(
      {NatOp::Equivalence, NatOp::Equivalence, NatOp::Alternation,
       NatOp::ForwardEntailment});
  expect(undecomposed.verdict == Verdict::NEI,
         "conjunctive claim without decomposition must stay undecided");
  std::vector<DfaState> want = {DfaState::S, DfaState::S, DfaState::R, DfaState::N};
  expect(undecomposed.trace == want, "undecomposed trace");

  expect(aggregate_verdicts({Verdict::Refuted, Verdict::Supported}) == Verdict::Refuted,
         "refutation must dominate");
  expect(aggregate_verdicts({Verdict::Supported, Verdict::Supported}) ==
             Verdict::Supported,
         "full support");
  expect(aggregate_verdicts({Verdict::Supported, Verdict::NEI}) == Verdict::NEI,
         "partial support is not enough");

  Gateway gateway(municipal::backend());
  VerdictReport report = verify_claim(gateway, {municipal::table()}, municipal::claim());
  expect(report.verdict == Verdict::Refuted, "worked example verdict");
  expect(report.execution_found, "worked example execution");
  expect(report.subclaims.size() == 2, "worked example subclaim count");
  expect(report.proofs[0].verdict == Verdict::Refuted, "count subclaim verdict");
  expect(report.proofs[1].verdict == Verdict::Supported, "population subclaim verdict");
}

void check_comparison_panels() {
  HaloPolicy policy;
  MonotoneEnv up;

  expect(compare(exact(3), *parse_quantity("three goals"), up, policy) ==
             NatOp::Equivalence,
         "matching counts must be equivalent");
  expect(compare(exact(99), *parse_quantity("scored about a hundred goals"), up,
                 policy) == NatOp::ForwardEntailment,
         "a value inside the approximation must entail the claim");
  expect(compare(*parse_quantity("2+ goals"), exact(3), up, policy) ==
             NatOp::ReverseEntailment,
         "an at-least bound must be entailed by the exact count");
  expect(compare(exact(5), *parse_quantity("has scored two goals"), up, policy) ==
             NatOp::Alternation,
         "disjoint exact values must alternate");

  MonotoneEnv never = detect_env("never scored three goals");
  expect(never.negation_cue, "negation cue detection");
  expect(compare(exact(3), *parse_quantity("three goals"), never, policy) ==
             NatOp::Negation,
         "a negated match must come out as negation");
  expect(compare(exact(2), *parse_quantity("three goals"), never, policy) ==
             NatOp::ForwardEntailment,
         "a negated mismatch must entail the complement");
}

void check_projection_table() {
  const NatOp ops[] = {NatOp::Equivalence,  NatOp::ForwardEntailment,
                       NatOp::ReverseEntailment, NatOp::Negation,
                       NatOp::Alternation,  NatOp::Independence};
  MonotoneEnv up;
  MonotoneEnv down;
  down.polarity = Polarity::Downward;
  MonotoneEnv one;
  one.polarity = Polarity::ExactlyOne;

  for (NatOp op : ops) {
    expect(project(up, op) == op, "general upward row");
    expect(project(up, op, ProjectionDomain::Numeral) == op, "numeral upward row");
    expect(project(one, op) ==
               (op == NatOp::Equivalence ? NatOp::Equivalence : NatOp::Independence),
           "exactly-one row");
  }

  const NatOp general_down[] = {NatOp::Equivalence, NatOp::ReverseEntailment,
                                NatOp::ForwardEntailment, NatOp::Negation,
                                NatOp::Cover, NatOp::Independence};
  for (size_t i = 0; i < 6; ++i)
    expect(project(down, ops[i]) == general_down[i], "general downward row");

  const NatOp numeral_down[] = {NatOp::ForwardEntailment, NatOp::ReverseEntailment,
                                NatOp::ForwardEntailment, NatOp::Cover,
                                NatOp::Independence, NatOp::Independence};
  const NatOp columns[] = {NatOp::Equivalence, NatOp::ForwardEntailment,
                           NatOp::ReverseEntailment, NatOp::Negation,
                           NatOp::Independence, NatOp::Cover};
  for (size_t i = 0; i < 5; ++i)
    expect(project(down, columns[i], ProjectionDomain::Numeral) == numeral_down[i],
           "numeral downward row");
  Num low(2), high(3);
  expect(project(down, NatOp::Alternation, ProjectionDomain::Numeral, &low, &high) ==
             NatOp::ReverseEntailment,
         "numeral downward alternation, evidence below claim");
  expect(project(down, NatOp::Alternation, ProjectionDomain::Numeral, &high, &low) ==
             NatOp::ForwardEntailment,
         "numeral downward alternation, evidence above claim");
}

void check_arithmetic() {
  ArithExpr sum;
  sum.fn = ArithFunction::Sum;
  for (long long v : {3945, 1126, 1363, 5804}) sum.args.push_back(Num(v));
  ArithAnswer total = eval_expr(sum);
  expect(*total.value == Num(12238), "population sum");
  expect_eq(render_answer(total), std::string("SUM 12,238"), "sum rendering");

  ArithExpr count;
  count.fn = ArithFunction::Count;
  for (const char* name : {"Carino", "Cerdido", "Manon", "Ortigueira"})
    count.args.push_back(std::string(name));
  expect(*eval_expr(count).value == Num(4), "municipality count");

  ArithExpr comp;
  comp.fn = ArithFunction::Comp;
  comp.args = {Num(8), Num(16)};
  ArithAnswer diff = eval_expr(comp);
  expect_eq(render_answer(diff), std::string("COMP -8"), "signed difference");

  ArithExpr super;
  super.fn = ArithFunction::Super;
  super.args = {LabeledValue{Num(3945), "Carino"}, LabeledValue{Num(5804), "Ortigueira"}};
  expect_eq(eval_expr(super).text, std::string("Ortigueira"), "superlative label");

  ArithExpr avg;
  avg.fn = ArithFunction::Average;
  avg.args = {Num(2), Num(3), Num(4)};
  expect(*eval_expr(avg).value == Num(3), "average");

  auto filt = parse_arith_answer("FILTER 50.85%");
  expect(filt && filt->percent && filt->fn == ArithFunction::Copy,
         "FILTER alias parses as a percentage payload");
  auto na = parse_arith_answer("N/A");
  expect(na && na->is_na(), "N/A answer parses");
  expect(!parse_arith_answer("GUESS 4").has_value(), "unknown function rejected");

  std::mt19937 rng(6697);
  std::uniform_int_distribution<long long> value(-2000000000LL, 2000000000LL);
  for (int trial = 0; trial < 500; ++trial) {
    ArithAnswer a = numeric_answer(ArithFunction::Sum, value(rng));
    auto back = parse_arith_answer(render_answer(a));
    expect(back.has_value() && *back->value == *a.value && back->fn == a.fn,
           "rendered answers must reparse to the same value");
  }
}

void check_validators() {
  NumberInventory inventory = NumberInventory::build({municipal::table()});
  expect_eq(inventory.size(), size_t{10}, "inventory size");
  for (long long v : {2011, 2018, 4374, 3945, 1304, 1126, 1541, 1363, 6697, 5804})
    expect(inventory.permits(Num(v)), "inventory must hold every table value");
  expect(!inventory.permits(Num(12238)), "derived values are not in the inventory");
  expect(!inventory.permits(Num(3)), "absent values are not in the inventory");

  auto dec = validate_decompose_output("1. Alpha. 2. Beta.");
  expect(!dec.violation && dec.subclaims.size() == 2, "decompose enumeration");
  expect(validate_decompose_output("The claim is already atomic.").violation.has_value(),
         "unenumerated decompose output rejected");

  std::string claim = municipal::subclaim_count();
  auto qg = validate_qg_output("1. How many municipalities did Ortegal have? \"three,\"",
                               claim);
  expect(!qg.violation && qg.items.size() == 1 && qg.items[0].span == "three",
         "span repair trims edge punctuation");
  expect(validate_qg_output("1. How many? four", claim).violation.has_value(),
         "non-verbatim spans rejected");
  expect(validate_qg_output("1. the count is three", claim).violation.has_value(),
         "a question mark is required");

  auto qa = validate_qa_output(
      "Extraction: The municipalities are known.\n"
      "Compute: Counting Carino, Cerdido, Manon, Ortigueira = 3\n"
      "Answer: COUNT 3",
      inventory);
  expect(!qa.violation.has_value(), "count rationale accepted");
  expect(qa.corrected, "stated count must be marked corrected");
  expect(*qa.answer.value == Num(4), "recount must come from the listed items");

  auto bad_number = validate_qa_output(
      "Extraction: Carino had 9,999 residents.\n"
      "Compute: No computation is required.\n"
      "Answer: COPY 9,999",
      inventory);
  expect(bad_number.violation.has_value(),
         "extraction numbers outside the evidence rejected");

  auto mismatch = validate_qa_output(
      "Extraction: Both figures appear in the table.\n"
      "Compute: Adding 2011 + 2018 = 4029\n"
      "Answer: COUNT 4029",
      inventory);
  expect(mismatch.violation.has_value(), "answer function must match the trigger");

  auto not_applicable = validate_qa_output("Extraction: N/A", inventory);
  expect(!not_applicable.violation.has_value() && not_applicable.na,
         "N/A extraction short-circuits");

  expect(validate_natop_output("Alternation").op == NatOp::Alternation,
         "relation names parse");
  expect(validate_natop_output(" cover ").op == NatOp::Cover,
         "relation names fold case and whitespace");
  expect(validate_natop_output("perhaps").violation.has_value(),
         "non-relation output rejected");
}

void check_recorded_traces() {
  auto started = std::chrono::steady_clock::now();
  std::string root = VERITAB_SOURCE_DIR;
  auto backend = std::make_shared<MockBackend>(root + "/data/golden_fixtures");
  Dataset dataset =
      load_dataset(root + "/data/golden_traces.jsonl", DatasetFormat::FeverousJsonl);
  expect_eq(dataset.records.size(), size_t{2}, "recorded trace count");

  std::map<std::string, VerdictReport> reports;
  for (const ClaimRecord& record : dataset.records) {
    Gateway gateway(backend);
    reports[record.id] = verify_claim(gateway, record.tables, record.claim);
    expect(record.label == "Supported", "recorded gold labels");
  }
  for (const auto& [id, report] : reports) {
    expect(report.verdict == Verdict::Supported, id + " must verify as Supported");
    expect(report.execution_found, id + " must execute fully");
  }

  const VerdictReport& delegates = reports.at("golden-delegates");
  const ProofStep& comparison = delegates.proofs.at(1).steps.at(1);
  expect(comparison.claim_span == "eight fewer delegates than John McCain" &&
             comparison.answer == "COMP -8" && comparison.op == NatOp::Equivalence,
         "signed-difference step");

  const VerdictReport& shareholders = reports.at("golden-shareholders");
  const ProofStep& major = shareholders.proofs.at(0).steps.at(0);
  expect(major.claim_span == "Asiacom Philippine, Inc. stands as the major shareholder" &&
             major.op == NatOp::ForwardEntailment,
         "list-membership step");
  const ProofStep& holder = shareholders.proofs.at(1).steps.at(0);
  expect(holder.claim_span == "Asiacom Philippine, Inc. has" &&
             holder.op == NatOp::Equivalence,
         "normalized-surface step");

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  expect(elapsed < 5000, "recorded replay exceeded five seconds");
}

void check_probe() {
  for (long long v : {1, 7, 15, 16, 99, 454, 2500, 12238}) {
    for (RoundnessBase b :
         {RoundnessBase::Ten, RoundnessBase::Five, RoundnessBase::TwoFive})
      expect(round_to_class(Num(v), b) == oracle_round(Num(v), b),
             "rounding must match the exhaustive candidate search");
  }
  expect(round_to_class(Num(16), RoundnessBase::Ten) == Num(20), "round 16 to tens");
  expect(round_to_class(Num(12238), RoundnessBase::TwoFive) == Num(12500),
         "round 12238 to the 2.5 class");

  std::vector<ClaimRecord> records;
  for (int i = 0; i < 91; ++i) {
    ClaimRecord r;
    r.id = "b" + std::to_string(i);
    r.claim = "Team " + std::to_string(i) + " scored 16 goals.";
    r.label = "Supported";
    records.push_back(std::move(r));
  }
  auto bases = select_base_claims(records);
  expect_eq(bases.size(), size_t{91}, "base claim count");
  auto instances = build_probe(bases);
  expect_eq(instances.size(), size_t{1638}, "probe instance count");
  expect(instances[0].id == "b0" && instances[0].kind == 0, "original layout");
  expect(instances[1].id == "b0#1" && instances[1].class_name == "Inaccuracy +1",
         "mutation layout");
  expect(instances[18].id == "b1", "per-base block size");

  auto site = find_probe_numeral("Team 0 scored 16 goals in 1939.");
  expect(site.has_value(), "probe numeral location");
  auto variations = generate_variations("Team 0 scored 16 goals in 1939.", *site);
  expect_eq(variations.size(), size_t{17}, "variation count");
  std::map<int, std::string> spans;
  for (const Variation& v : variations) spans[v.kind] = v.mutated_span;
  expect(spans[1] == "17" && spans[6] == "20" && spans[11] == "About 20" &&
             spans[14] == "At most 14.40" && spans[15] == "At least 17.60",
         "variation surfaces");
  expect(variations[0].mutated_claim.find("1939") != std::string::npos,
         "year tokens are never probed");

  std::vector<ClaimRecord> trio(records.begin(), records.begin() + 3);
  auto small = build_probe(select_base_claims(trio));
  std::map<std::string, Verdict> predictions;
  predictions["b0"] = Verdict::Supported;
  predictions["b1"] = Verdict::Refuted;
  predictions["b2"] = Verdict::Supported;
  predictions["b0#1"] = Verdict::Supported;
  for (int k = 2; k <= 17; ++k) predictions["b0#" + std::to_string(k)] = Verdict::Refuted;
  for (int k = 1; k <= 17; ++k) predictions["b2#" + std::to_string(k)] = Verdict::Supported;
  ProbeScore score = score_probe(small, predictions);
  expect(score.defined && score.supported_bases == 2, "scoring denominator");
  expect(close(score.kind_retention.at(1), 1.0), "retention of the +1 kind");
  expect(close(score.kind_retention.at(2), 0.5), "retention of a failing kind");
  expect(close(score.class_retention.at("Inaccuracy +1"), 1.0), "class retention");
  expect(close(score.class_retention.at("Rounding"), 0.5), "class averaging");
  ProbeScore empty = score_probe(small, {});
  expect(!empty.defined, "no supported bases leaves the score undefined");
}

void check_aggregation_table() {
  auto oracle = [](const std::vector<Verdict>& vs) {
    bool all_supported = true;
    for (Verdict v : vs) {
      if (v == Verdict::Refuted) return Verdict::Refuted;
      all_supported = all_supported && v == Verdict::Supported;
    }
    return all_supported ? Verdict::Supported : Verdict::NEI;
  };
  const Verdict verdicts[] = {Verdict::Supported, Verdict::Refuted, Verdict::NEI};
  size_t checked = 0;
  for (Verdict a : verdicts) {
    expect(aggregate_verdicts({a}) == oracle({a}), "single verdict");
    ++checked;
    for (Verdict b : verdicts) {
      expect(aggregate_verdicts({a, b}) == oracle({a, b}), "verdict pair");
      ++checked;
      for (Verdict c : verdicts) {
        expect(aggregate_verdicts({a, b, c}) == oracle({a, b, c}), "verdict triple");
        ++checked;
      }
    }
  }
  expect_eq(checked, size_t{39}, "aggregation case count");
  bool threw = false;
  try {
    aggregate_verdicts({});
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  expect(threw, "empty aggregation must throw");
}

void check_metrics() {
  std::vector<std::string> golds = {"Supported", "Supported", "Refuted", "Refuted"};
  std::vector<std::string> preds = {"Supported", "Refuted", "Refuted", "Refuted"};
  MetricsReport m = compute_metrics(preds, golds, LabelSpace::ThreeWay);
  expect(close(m.accuracy, 0.75), "reference accuracy");
  expect(close(m.macro_f1, 11.0 / 15.0), "reference macro F1");

  std::mt19937 rng(1304);
  const std::vector<std::string> labels = {"Supported", "Refuted", "NEI"};
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> p, g;
    for (int i = 0; i < 30; ++i) {
      g.push_back(labels[pick(rng)]);
      p.push_back(pick(rng) == 0 ? g.back() : labels[pick(rng)]);
    }
    MetricsReport r = compute_metrics(p, g, LabelSpace::ThreeWay);
    expect(close(r.accuracy, oracle_accuracy(p, g)), "random accuracy");
    expect(close(r.macro_f1, oracle_macro_f1(p, g)), "random macro F1");
  }

  MetricsReport two = compute_metrics({"NEI", "Refuted", "Supported"},
                                      {"NOT SUPPORTED", "REFUTES", "SUPPORTS"},
                                      LabelSpace::TwoWay);
  expect(close(two.accuracy, 1.0), "two-way fold accepts NEI for non-supported golds");
  MetricsReport kept = compute_metrics({"Supported"}, {"NEI"}, LabelSpace::TwoWay);
  expect(close(kept.accuracy, 0.0), "supported predictions are never folded");
}

void check_halo_sensitivity() {
  HaloPolicy policy;
  MonotoneEnv up;
  NatOp bare = compare(exact(101), *parse_quantity("100 residents"), up, policy);
  expect(bare == NatOp::Alternation, "an exact claim read with no slack");
  expect(execute_proof({bare}).verdict == Verdict::Refuted,
         "the strict reading refutes");

  NatOp hedged = compare(exact(101), *parse_quantity("about 100 residents"), up, policy);
  expect(hedged == NatOp::ForwardEntailment, "an approximator licenses slack");
  expect(execute_proof({hedged}).verdict == Verdict::Supported,
         "the hedged reading supports");

  HaloPolicy relative;
  relative.mode = HaloMode::Relative;
  NatOp lenient = compare(exact(101), *parse_quantity("100 residents"), up, relative);
  expect(lenient == NatOp::ForwardEntailment,
         "a relative-width policy licenses the same slack without a modifier");
  expect(execute_proof({lenient}).verdict == Verdict::Supported,
         "the lenient policy supports");
}

}  // namespace

int main() {
  struct Gate {
    std::string name;
    std::function<void()> body;
  };
  const std::vector<Gate> gates = {
      {"deterministic execution matches a brute-force walker on all short proofs",
       check_walker_agreement},
      {"the veracity automaton has exactly the specified transition edges",
       check_transition_edges},
      {"the worked compound claim decomposes, executes and aggregates to Refuted",
       check_worked_example},
      {"set-theoretic numeral comparison yields the five core relations",
       check_comparison_panels},
      {"operator projection matches the thirty-cell context table",
       check_projection_table},
      {"arithmetic answers evaluate, render and reparse faithfully", check_arithmetic},
      {"rationale validators enforce the evidence-number and format contracts",
       check_validators},
      {"recorded reference claims replay offline to Supported verdicts",
       check_recorded_traces},
      {"the numeral-reading probe expands and scores mutation classes", check_probe},
      {"verdict aggregation matches its truth table over subclaim lists",
       check_aggregation_table},
      {"evaluation metrics reproduce reference scores and the two-way fold",
       check_metrics},
      {"approximation halos flip verdicts exactly when licensed",
       check_halo_sensitivity},
  };

  int failures = 0;
  for (size_t i = 0; i < gates.size(); ++i) {
    try {
      gates[i].body();
      std::cout << "PASS " << (i + 1) << ". " << gates[i].name << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL " << (i + 1) << ". " << gates[i].name << ": " << e.what()
                << "\n";
    }
  }
  if (failures) {
    std::cout << failures << " of " << gates.size() << " checks failed\n";
    return 1;
  }
  std::cout << "all " << gates.size() << " checks passed\n";
  return 0;
}
