#include "veritab/numerals.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "veritab/tables.hpp"
#include "veritab/textnorm.hpp"

namespace veritab {

namespace {

const std::map<std::string, long long>& small_numerals() {
  static const std::map<std::string, long long> m = {
      {"zero", 0},     {"one", 1},        {"two", 2},      {"three", 3},
      {"four", 4},     {"five", 5},       {"six", 6},      {"seven", 7},
      {"eight", 8},    {"nine", 9},       {"ten", 10},     {"eleven", 11},
      {"twelve", 12},  {"thirteen", 13},  {"fourteen", 14}, {"fifteen", 15},
      {"sixteen", 16}, {"seventeen", 17}, {"eighteen", 18}, {"nineteen", 19},
      {"twenty", 20},  {"thirty", 30},    {"forty", 40},   {"fifty", 50},
      {"sixty", 60},   {"seventy", 70},   {"eighty", 80},  {"ninety", 90},
  };
  return m;
}

const std::map<std::string, long long>& multipliers() {
  static const std::map<std::string, long long> m = {
      {"hundred", 100}, {"thousand", 1000}, {"million", 1000000}};
  return m;
}

std::string strip_token(const std::string& tok) {
  size_t b = 0, e = tok.size();
  auto keep_front = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '+';
  };
  auto keep_back = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '%' || c == '+';
  };
  while (b < e && !keep_front(tok[b])) ++b;
  while (e > b && !keep_back(tok[e - 1])) --e;
  return tok.substr(b, e - b);
}

std::string word_key(const std::string& tok) {
  std::string s = fold_text(strip_token(tok));
  while (!s.empty() && !std::isalpha(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

bool is_positive_cue(const std::string& w) {
  return w == "more" || w == "greater" || w == "larger" || w == "bigger" || w == "higher";
}

bool is_negative_cue(const std::string& w) {
  return w == "fewer" || w == "less" || w == "smaller" || w == "lower";
}

bool is_approximator(const std::string& w) {
  return w == "about" || w == "around" || w == "approximately";
}

}  // namespace

std::optional<Quantity> parse_quantity(const std::string& span) {
  std::vector<std::string> raw;
  {
    std::istringstream iss(span);
    std::string t;
    while (iss >> t) raw.push_back(t);
  }
  for (size_t i = 0; i < raw.size(); ++i) {
    Quantity q;
    size_t consumed = 0;
    std::string stripped = strip_token(raw[i]);
    if (auto n = parse_number_token(stripped)) {
      q.value = n->value;
      q.percent = n->percent;
      q.source = QuantitySource::Digits;
      if (n->plus_suffix) {
        q.reading = Reading::AtLeast;
        q.source = QuantitySource::SuffixPlus;
      }
      consumed = 1;
    } else {
      std::string w = word_key(raw[i]);
      auto small = small_numerals().find(w);
      auto mult = multipliers().find(w);
      long long value = 0;
      if (small != small_numerals().end()) {
        value = small->second;
        consumed = 1;
        if (i + 1 < raw.size()) {
          auto m2 = multipliers().find(word_key(raw[i + 1]));
          if (m2 != multipliers().end()) {
            value *= m2->second;
            consumed = 2;
          }
        }
      } else if (mult != multipliers().end()) {
        value = mult->second;
        consumed = 1;
      } else if ((w == "a" || w == "an") && i + 1 < raw.size()) {
        auto m2 = multipliers().find(word_key(raw[i + 1]));
        if (m2 != multipliers().end()) {
          value = m2->second;
          consumed = 2;
        }
      }
      if (consumed == 0) continue;
      q.value = Num(value);
      q.source = QuantitySource::WordNumeral;
    }

    auto word_at = [&](size_t idx) { return idx < raw.size() ? word_key(raw[idx]) : ""; };
    std::string p1 = i >= 1 ? word_at(i - 1) : "";
    std::string p2 = i >= 2 ? word_at(i - 2) : "";
    std::string p3 = i >= 3 ? word_at(i - 3) : "";

    if (p1 == "than" && is_positive_cue(p2)) {
      q.reading = Reading::GreaterThan;
    } else if (p1 == "than" && is_negative_cue(p2)) {
      q.reading = Reading::LessThan;
    } else if ((p2 == "at" && p1 == "least") || (p3 == "at" && p2 == "least")) {
      q.reading = Reading::AtLeast;
    } else if ((p2 == "at" && p1 == "most") || (p3 == "at" && p2 == "most")) {
      q.reading = Reading::AtMost;
    } else if (q.reading == Reading::Exact || q.reading == Reading::AtLeast) {
      for (std::string p : {p1, p2, p3}) {
        if (is_approximator(p)) {
          q.reading = Reading::Approximate;
          q.modifier_text = p;
          break;
        }
      }
    }

    std::string f1 = word_at(i + consumed);
    if (f1 == "percent") {
      q.percent = true;
      f1 = word_at(i + consumed + 1);
    }
    if (is_positive_cue(f1)) q.comp_direction = CompDirection::Positive;
    if (is_negative_cue(f1)) q.comp_direction = CompDirection::Negative;
    return q;
  }
  return std::nullopt;
}

CompDirection detect_comparative(const std::string& span) {
  std::istringstream iss(span);
  std::string t;
  while (iss >> t) {
    std::string w = word_key(t);
    if (is_positive_cue(w)) return CompDirection::Positive;
    if (is_negative_cue(w)) return CompDirection::Negative;
  }
  return CompDirection::None;
}

Interval halo(const Quantity& q, const HaloPolicy& policy) {
  Num width(0);
  bool approx = q.reading == Reading::Approximate || q.modifier_text.has_value();
  switch (policy.mode) {
    case HaloMode::Empty:
      width = approx ? policy.modifier_width : Num(0);
      break;
    case HaloMode::Relative:
      width = approx ? std::max(policy.modifier_width, policy.relative_epsilon)
                     : policy.relative_epsilon;
      break;
    case HaloMode::Roundness: {
      Num cls(0);
      if (is_round_member(q.value, Num(10)))
        cls = policy.width_tenness;
      else if (is_round_member(q.value, Num(5)))
        cls = policy.width_fiveness;
      else if (is_round_member(q.value, Num(mpq_class(5, 2))))
        cls = policy.width_two_five_ness;
      width = cls;
      if (approx && policy.modifier_width > width) width = policy.modifier_width;
      break;
    }
  }
  if (width == Num(0)) return Interval::point(q.value);
  Num slack = width * q.value.abs();
  return Interval::closed(q.value - slack, q.value + slack);
}

IntervalSet denote_claim(const Quantity& q, const HaloPolicy& policy) {
  Interval h = halo(q, policy);
  switch (q.reading) {
    case Reading::Exact:
    case Reading::Approximate:
      return IntervalSet(h);
    case Reading::AtLeast:
      return IntervalSet(Interval::at_least(*h.lo));
    case Reading::AtMost:
      return IntervalSet(Interval::at_most(*h.hi));
    case Reading::GreaterThan:
      return IntervalSet(Interval::greater_than(*h.lo));
    case Reading::LessThan:
      return IntervalSet(Interval::less_than(*h.hi));
  }
  return IntervalSet(h);
}

IntervalSet denote_evidence(const Quantity& q) {
  switch (q.reading) {
    case Reading::Exact:
    case Reading::Approximate:
      return IntervalSet(Interval::point(q.value));
    case Reading::AtLeast:
      return IntervalSet(Interval::at_least(q.value));
    case Reading::AtMost:
      return IntervalSet(Interval::at_most(q.value));
    case Reading::GreaterThan:
      return IntervalSet(Interval::greater_than(q.value));
    case Reading::LessThan:
      return IntervalSet(Interval::less_than(q.value));
  }
  return IntervalSet(Interval::point(q.value));
}

MonotoneEnv detect_env(const std::string& context) {
  MonotoneEnv env;
  std::string folded = fold_text(context);
  std::string norm = normalize_text(context);
  std::vector<std::string> toks;
  {
    std::istringstream iss(norm);
    std::string t;
    while (iss >> t) toks.push_back(t);
  }
  auto has = [&](const std::string& w) {
    return std::find(toks.begin(), toks.end(), w) != toks.end();
  };
  if (folded.find("n't") != std::string::npos || has("not") || has("never") || has("no") ||
      has("without") || has("none") || has("neither") || has("nor")) {
    env.polarity = Polarity::Downward;
    env.negation_cue = true;
    for (std::string w : {"not", "never", "no", "without", "none", "neither", "nor"})
      if (has(w)) {
        env.trigger = w;
        break;
      }
    if (env.trigger.empty()) env.trigger = "n't";
    return env;
  }
  if (norm.find("exactly one") != std::string::npos) {
    env.polarity = Polarity::ExactlyOne;
    env.trigger = "exactly one";
    return env;
  }
  if (norm.find("at most") != std::string::npos) {
    env.polarity = Polarity::Downward;
    env.trigger = "at most";
    return env;
  }
  if (has("if")) {
    env.polarity = Polarity::Downward;
    env.trigger = "if";
    return env;
  }
  for (std::string w : {"every", "all", "each"}) {
    if (has(w)) {
      env.polarity = Polarity::Downward;
      env.trigger = w;
      return env;
    }
  }
  return env;
}

NatOp project(const MonotoneEnv& env, NatOp op, ProjectionDomain domain, const Num* evidence,
              const Num* claim) {
  if (env.polarity == Polarity::Upward) return op;
  if (env.polarity == Polarity::ExactlyOne)
    return op == NatOp::Equivalence ? NatOp::Equivalence : NatOp::Independence;
  if (domain == ProjectionDomain::General) {
    switch (op) {
      case NatOp::Equivalence: return NatOp::Equivalence;
      case NatOp::ForwardEntailment: return NatOp::ReverseEntailment;
      case NatOp::ReverseEntailment: return NatOp::ForwardEntailment;
      case NatOp::Alternation: return NatOp::Cover;
      case NatOp::Negation: return NatOp::Negation;
      case NatOp::Cover: return NatOp::Alternation;
      case NatOp::Independence: return NatOp::Independence;
    }
    return op;
  }
  // Numeral domain, downward: numerals take an at-least reading.
  switch (op) {
    case NatOp::Equivalence: return NatOp::ForwardEntailment;
    case NatOp::ForwardEntailment: return NatOp::ReverseEntailment;
    case NatOp::ReverseEntailment: return NatOp::ForwardEntailment;
    case NatOp::Alternation:
      if (evidence && claim && *evidence < *claim) return NatOp::ReverseEntailment;
      return NatOp::ForwardEntailment;
    case NatOp::Negation: return NatOp::Cover;
    case NatOp::Cover: return NatOp::Cover;
    case NatOp::Independence: return NatOp::Independence;
  }
  return op;
}

NatOp set_relation(const IntervalSet& evidence, const IntervalSet& claim) {
  if (evidence == claim) return NatOp::Equivalence;
  if (evidence.subset_of(claim)) return NatOp::ForwardEntailment;
  if (claim.subset_of(evidence)) return NatOp::ReverseEntailment;
  if (evidence.disjoint_with(claim))
    return evidence.exhaustive_with(claim) ? NatOp::Negation : NatOp::Alternation;
  return NatOp::Independence;
}

namespace {

bool env_consumed_by_quantity(const MonotoneEnv& env, const Quantity& claim) {
  if (env.trigger == "at most" && claim.reading == Reading::AtMost) return true;
  if (env.trigger == "at least" && claim.reading == Reading::AtLeast) return true;
  if (claim.modifier_text && env.trigger == *claim.modifier_text) return true;
  return false;
}

}  // namespace

NatOp compare(const Quantity& evidence, const Quantity& claim, const MonotoneEnv& env,
              const HaloPolicy& policy) {
  IntervalSet de = denote_evidence(evidence);
  if (env.negation_cue) {
    IntervalSet dc = denote_claim(claim, policy).complement_in_naturals();
    return set_relation(de, dc);
  }
  NatOp rel = set_relation(de, denote_claim(claim, policy));
  if (env.polarity == Polarity::Upward || env_consumed_by_quantity(env, claim)) return rel;
  if (env.polarity == Polarity::ExactlyOne) return project(env, rel);
  return project(env, rel, ProjectionDomain::Numeral, &evidence.value, &claim.value);
}

std::optional<NatOp> compare_answer(const ArithAnswer& evidence, const std::string& claim_span,
                                    const MonotoneEnv& env, const HaloPolicy& policy) {
  if (evidence.is_na()) return NatOp::Independence;
  auto claim_q = parse_quantity(claim_span);
  if (!evidence.is_numeric()) return std::nullopt;
  Quantity ev_q;
  ev_q.value = *evidence.value;
  ev_q.percent = evidence.percent;

  if (evidence.fn == ArithFunction::Comp) {
    if (claim_q && claim_q->comp_direction != CompDirection::None) {
      Quantity target = *claim_q;
      if (claim_q->comp_direction == CompDirection::Negative) target.value = -target.value;
      return compare(ev_q, target, env, policy);
    }
    if (claim_q) {
      Quantity magnitude = ev_q;
      magnitude.value = magnitude.value.abs();
      return compare(magnitude, *claim_q, env, policy);
    }
    CompDirection dir = detect_comparative(claim_span);
    if (dir == CompDirection::None) return std::nullopt;
    IntervalSet dc(dir == CompDirection::Positive ? Interval::greater_than(Num(0))
                                                  : Interval::less_than(Num(0)));
    return set_relation(denote_evidence(ev_q), dc);
  }

  if (!claim_q) return std::nullopt;
  return compare(ev_q, *claim_q, env, policy);
}

bool is_round_member(const Num& v, const Num& base) {
  if (!v.is_integer() || v <= Num(0)) return false;
  Num denom = base;
  while (denom <= v) {
    Num q = v / denom;
    if (q.is_integer() && q >= Num(1) && q <= Num(9)) return true;
    denom = denom * Num(10);
  }
  return false;
}

}  // namespace veritab
