#pragma once

// Executable arithmetic answers: a small closed set of functions over table
// numbers, rendered as "<NAME> <result>" strings that travel inside proofs.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "veritab/num.hpp"

namespace veritab {

enum class ArithFunction { Count, Sum, Diff, Average, Min, Max, Comp, Super, Copy };

std::string arith_name(ArithFunction f);
// Accepts the canonical names plus the FILTER alias for COPY.
std::optional<ArithFunction> arith_from_name(const std::string& name);

// Trigger words that open a rationale compute line, e.g. "Adding" -> SUM.
// The no-computation phrase maps to COPY. Extensible via config; the
// registered sets stay pairwise disjoint.
class TriggerLexicon {
 public:
  static TriggerLexicon defaults();
  void add(const std::string& word, ArithFunction f);  // throws on collision
  std::optional<ArithFunction> lookup_word(const std::string& word) const;
  // Matches the leading trigger of a compute line; also recognizes the
  // no-computation phrase variants case-insensitively.
  std::optional<ArithFunction> match_compute_line(const std::string& line) const;
  const std::map<std::string, ArithFunction>& words() const { return words_; }

 private:
  std::map<std::string, ArithFunction> words_;  // folded word -> function
};

bool is_no_computation_phrase(const std::string& line);

struct ArithExpr;

struct LabeledValue {
  Num value;
  std::string label;
};

using ArithArg = std::variant<Num, std::string, LabeledValue, std::shared_ptr<ArithExpr>>;

struct ArithExpr {
  ArithFunction fn = ArithFunction::Copy;
  std::vector<ArithArg> args;
  bool super_max = true;  // SUPER direction: argmax when true, argmin otherwise
};

// Evaluation result: numeric for the computing functions, text for COPY/
// FILTER payloads and SUPER labels.
struct ArithAnswer {
  ArithFunction fn = ArithFunction::Copy;
  std::optional<Num> value;
  std::string text;       // textual payload when value is absent
  bool percent = false;   // render numeric result with a trailing %

  bool is_numeric() const { return value.has_value(); }
  bool is_na() const;
  static ArithAnswer na();
};

// Evaluates an expression tree. Numeric functions require numeric (or
// numeric-evaluating) arguments and throw std::invalid_argument otherwise;
// COUNT accepts anything and counts it. Composition keeps the outermost
// function's name on the rendered answer.
ArithAnswer eval_expr(const ArithExpr& expr);

// "<NAME> <result>" with thousands separators on the numeric result.
std::string render_answer(const ArithAnswer& answer);

// Parses a rendered answer ("SUM 12,238", "FILTER 50.85%", "COPY Ortegal",
// "N/A"). Unknown function names yield nullopt.
std::optional<ArithAnswer> parse_arith_answer(const std::string& text);

}  // namespace veritab
