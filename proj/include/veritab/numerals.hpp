#pragma once

// Numeral semantics: quantity parsing, pragmatic halos, monotonicity
// environments, projection, and the set-theoretic comparison that maps an
// evidence denotation against a claim denotation onto a natural-logic
// operator.

#include <optional>
#include <string>

#include "veritab/arith.hpp"
#include "veritab/interval.hpp"
#include "veritab/natop.hpp"
#include "veritab/num.hpp"

namespace veritab {

enum class Reading { Exact, AtLeast, AtMost, GreaterThan, LessThan, Approximate };
enum class QuantitySource { Digits, WordNumeral, SuffixPlus };
enum class CompDirection { None, Positive, Negative };

struct Quantity {
  Num value;
  Reading reading = Reading::Exact;
  QuantitySource source = QuantitySource::Digits;
  std::optional<std::string> modifier_text;  // surface approximator, when any
  bool percent = false;
  // Set when a comparative cue follows the numeral ("eight fewer ... than"),
  // which reads as a signed difference rather than a threshold.
  CompDirection comp_direction = CompDirection::None;
};

// First numeral in the span with its surrounding cues. Digits (with comma
// groups, decimals, %, trailing +) and a closed word-numeral lexicon
// (zero..twenty, tens, hundred/thousand/million, "a hundred"). Returns
// nullopt when the span carries no numeral.
std::optional<Quantity> parse_quantity(const std::string& span);

// Bare comparative cue anywhere in the span (used when the evidence is a
// signed difference but the span has no numeral).
CompDirection detect_comparative(const std::string& span);

enum class HaloMode { Empty, Relative, Roundness };

struct HaloPolicy {
  HaloMode mode = HaloMode::Empty;
  Num modifier_width = Num(mpq_class(1, 10));  // width for explicit approximators
  Num relative_epsilon = Num(mpq_class(1, 50));
  // Per-class relative widths for roundness mode; coarser classes get wider
  // halos (a round 100 licenses more slack than 101).
  Num width_tenness = Num(mpq_class(1, 20));
  Num width_fiveness = Num(mpq_class(1, 40));
  Num width_two_five_ness = Num(mpq_class(1, 80));
};

// Closed halo interval around the quantity's anchor value (degenerate point
// when the policy grants no width).
Interval halo(const Quantity& q, const HaloPolicy& policy);

// Claim-side denotation: reading set unioned with the halo. Evidence-side
// denotation: reading set only (asserted content carries no pragmatic slack).
IntervalSet denote_claim(const Quantity& q, const HaloPolicy& policy);
IntervalSet denote_evidence(const Quantity& q);

enum class Polarity { Upward, Downward, ExactlyOne };

struct MonotoneEnv {
  Polarity polarity = Polarity::Upward;
  std::string trigger;  // surface cue that fixed the polarity
  bool negation_cue = false;
};

// Heuristic cue scan over the span and its immediate context.
MonotoneEnv detect_env(const std::string& context);

enum class ProjectionDomain { General, Numeral };

// Projection of an operator through a monotonicity environment. The numeral
// domain's downward row resolves Alternation by value order when both values
// are supplied: evidence below claim projects to ReverseEntailment, otherwise
// ForwardEntailment.
NatOp project(const MonotoneEnv& env, NatOp op,
              ProjectionDomain domain = ProjectionDomain::General,
              const Num* evidence = nullptr, const Num* claim = nullptr);

// Relation between two denotations: equality, containment, disjointness
// (exhaustive -> Negation, else Alternation), otherwise Independence.
NatOp set_relation(const IntervalSet& evidence, const IntervalSet& claim);

// Full comparison: denote both sides, apply the set relation, and route the
// result through the environment. A negation cue complements the claim
// denotation within the naturals and is not projected again; cues the
// quantity grammar already consumed (cardinal determiners, approximators)
// likewise do not re-project.
NatOp compare(const Quantity& evidence, const Quantity& claim, const MonotoneEnv& env,
              const HaloPolicy& policy);

// Evidence given as an executed answer. Returns nullopt when the claim span
// offers nothing numeric to compare (no numeral and, for signed-difference
// evidence, no comparative cue).
std::optional<NatOp> compare_answer(const ArithAnswer& evidence, const std::string& claim_span,
                                    const MonotoneEnv& env, const HaloPolicy& policy);

// Roundness membership: v = k * base * 10^y for integer k in [1,9], y >= 0,
// with v integral. Bases are 10, 5, and 2.5.
bool is_round_member(const Num& v, const Num& base);

}  // namespace veritab
