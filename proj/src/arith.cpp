#include "veritab/arith.hpp"

#include <algorithm>
#include <stdexcept>

#include "veritab/tables.hpp"
#include "veritab/textnorm.hpp"

namespace veritab {

std::string arith_name(ArithFunction f) {
  switch (f) {
    case ArithFunction::Count: return "COUNT";
    case ArithFunction::Sum: return "SUM";
    case ArithFunction::Diff: return "DIFF";
    case ArithFunction::Average: return "AVERAGE";
    case ArithFunction::Min: return "MIN";
    case ArithFunction::Max: return "MAX";
    case ArithFunction::Comp: return "COMP";
    case ArithFunction::Super: return "SUPER";
    case ArithFunction::Copy: return "COPY";
  }
  return "COPY";
}

std::optional<ArithFunction> arith_from_name(const std::string& name) {
  if (name == "COUNT") return ArithFunction::Count;
  if (name == "SUM") return ArithFunction::Sum;
  if (name == "DIFF") return ArithFunction::Diff;
  if (name == "AVERAGE") return ArithFunction::Average;
  if (name == "MIN") return ArithFunction::Min;
  if (name == "MAX") return ArithFunction::Max;
  if (name == "COMP") return ArithFunction::Comp;
  if (name == "SUPER") return ArithFunction::Super;
  if (name == "COPY" || name == "FILTER") return ArithFunction::Copy;
  return std::nullopt;
}

bool is_no_computation_phrase(const std::string& line) {
  std::string n = normalize_text(line);
  return n == "no computation required" || n == "no computation is required";
}

TriggerLexicon TriggerLexicon::defaults() {
  TriggerLexicon lex;
  lex.add("Adding", ArithFunction::Sum);
  lex.add("Counting", ArithFunction::Count);
  lex.add("Subtracting", ArithFunction::Diff);
  lex.add("Comparing", ArithFunction::Comp);
  lex.add("Averaging", ArithFunction::Average);
  lex.add("Minimum", ArithFunction::Min);
  lex.add("Maximum", ArithFunction::Max);
  lex.add("Superlative", ArithFunction::Super);
  return lex;
}

void TriggerLexicon::add(const std::string& word, ArithFunction f) {
  std::string key = fold_text(trim(word));
  auto it = words_.find(key);
  if (it != words_.end() && it->second != f)
    throw std::invalid_argument("trigger word already registered: " + word);
  words_[key] = f;
}

std::optional<ArithFunction> TriggerLexicon::lookup_word(const std::string& word) const {
  auto it = words_.find(fold_text(trim(word)));
  if (it == words_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArithFunction> TriggerLexicon::match_compute_line(const std::string& line) const {
  std::string body = trim(line);
  if (is_no_computation_phrase(body)) return ArithFunction::Copy;
  size_t sp = body.find_first_of(" \t");
  std::string head = sp == std::string::npos ? body : body.substr(0, sp);
  while (!head.empty() && !std::isalnum(static_cast<unsigned char>(head.back()))) head.pop_back();
  if (head.empty()) return std::nullopt;
  return lookup_word(head);
}

bool ArithAnswer::is_na() const { return !value && text == "N/A"; }

ArithAnswer ArithAnswer::na() {
  ArithAnswer a;
  a.fn = ArithFunction::Copy;
  a.text = "N/A";
  return a;
}

namespace {

Num numeric_arg(const ArithArg& arg, ArithFunction fn) {
  if (std::holds_alternative<Num>(arg)) return std::get<Num>(arg);
  if (std::holds_alternative<LabeledValue>(arg)) return std::get<LabeledValue>(arg).value;
  if (std::holds_alternative<std::string>(arg)) {
    auto n = parse_number_token(trim(std::get<std::string>(arg)));
    if (n) return n->value;
    throw std::invalid_argument("non-numeric argument to " + arith_name(fn));
  }
  auto sub = eval_expr(*std::get<std::shared_ptr<ArithExpr>>(arg));
  if (!sub.is_numeric())
    throw std::invalid_argument("non-numeric subexpression argument to " + arith_name(fn));
  return *sub.value;
}

ArithAnswer numeric_answer(ArithFunction fn, const Num& v) {
  ArithAnswer a;
  a.fn = fn;
  a.value = v;
  return a;
}

}  // namespace

ArithAnswer eval_expr(const ArithExpr& expr) {
  switch (expr.fn) {
    case ArithFunction::Count:
      return numeric_answer(expr.fn, Num(static_cast<long long>(expr.args.size())));
    case ArithFunction::Sum: {
      Num acc;
      for (auto& a : expr.args) acc = acc + numeric_arg(a, expr.fn);
      return numeric_answer(expr.fn, acc);
    }
    case ArithFunction::Diff:
    case ArithFunction::Comp: {
      if (expr.args.empty()) throw std::invalid_argument("empty argument list");
      Num acc = numeric_arg(expr.args[0], expr.fn);
      for (size_t i = 1; i < expr.args.size(); ++i) acc = acc - numeric_arg(expr.args[i], expr.fn);
      return numeric_answer(expr.fn, acc);
    }
    case ArithFunction::Average: {
      if (expr.args.empty()) throw std::invalid_argument("empty argument list");
      Num acc;
      for (auto& a : expr.args) acc = acc + numeric_arg(a, expr.fn);
      return numeric_answer(expr.fn, acc / Num(static_cast<long long>(expr.args.size())));
    }
    case ArithFunction::Min:
    case ArithFunction::Max: {
      if (expr.args.empty()) throw std::invalid_argument("empty argument list");
      Num best = numeric_arg(expr.args[0], expr.fn);
      for (size_t i = 1; i < expr.args.size(); ++i) {
        Num v = numeric_arg(expr.args[i], expr.fn);
        if (expr.fn == ArithFunction::Min ? v < best : v > best) best = v;
      }
      return numeric_answer(expr.fn, best);
    }
    case ArithFunction::Super: {
      if (expr.args.empty()) throw std::invalid_argument("empty argument list");
      const LabeledValue* best = nullptr;
      for (auto& a : expr.args) {
        if (!std::holds_alternative<LabeledValue>(a))
          throw std::invalid_argument("SUPER requires labeled values");
        const LabeledValue& lv = std::get<LabeledValue>(a);
        if (!best || (expr.super_max ? lv.value > best->value : lv.value < best->value)) best = &lv;
      }
      ArithAnswer out;
      out.fn = expr.fn;
      out.text = best->label;
      return out;
    }
    case ArithFunction::Copy: {
      if (expr.args.size() != 1) throw std::invalid_argument("COPY takes one argument");
      const ArithArg& a = expr.args[0];
      ArithAnswer out;
      out.fn = expr.fn;
      if (std::holds_alternative<Num>(a)) {
        out.value = std::get<Num>(a);
      } else if (std::holds_alternative<std::string>(a)) {
        const std::string& payload = std::get<std::string>(a);
        if (auto n = parse_number_token(trim(payload))) {
          out.value = n->value;
          out.percent = n->percent;
        } else {
          out.text = payload;
        }
      } else {
        throw std::invalid_argument("COPY payload must be a number or text");
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown function");
}

std::string render_answer(const ArithAnswer& answer) {
  if (answer.is_na()) return "N/A";
  std::string out = arith_name(answer.fn) + " ";
  if (answer.value) {
    out += answer.value->render(true);
    if (answer.percent) out += "%";
  } else {
    out += answer.text;
  }
  return out;
}

std::optional<ArithAnswer> parse_arith_answer(const std::string& text) {
  std::string body = trim(text);
  if (body == "N/A" || body == "n/a") return ArithAnswer::na();
  size_t sp = body.find_first_of(" \t");
  if (sp == std::string::npos) return std::nullopt;
  auto fn = arith_from_name(body.substr(0, sp));
  if (!fn) return std::nullopt;
  std::string payload = trim(body.substr(sp + 1));
  if (payload.empty()) return std::nullopt;
  ArithAnswer out;
  out.fn = *fn;
  if (auto n = parse_number_token(payload)) {
    out.value = n->value;
    out.percent = n->percent;
  } else {
    out.text = payload;
  }
  return out;
}

}  // namespace veritab
