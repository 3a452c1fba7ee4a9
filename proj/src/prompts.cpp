#include "veritab/prompts.hpp"

#include <stdexcept>

namespace veritab {

std::string prompt_role_name(PromptRole role) {
  switch (role) {
    case PromptRole::Decompose: return "decompose";
    case PromptRole::QuestionGen: return "qg";
    case PromptRole::QuestionAnswer: return "qa";
    case PromptRole::NatOpQuery: return "natop";
  }
  return "qa";
}

std::string default_prompt_template(PromptRole role) {
  switch (role) {
    case PromptRole::Decompose:
      return
          "Split the claim into independent subclaims that are each verifiable on "
          "their own and together cover the whole claim. A claim stating a single "
          "fact stays as one subclaim. Respond on one line in the enumerated form "
          "\"1. <subclaim> 2. <subclaim>\".\n"
          "\n"
          "Evidence:\n"
          "{evidence}\n"
          "\n"
          "Claim: {claim}\n"
          "\n"
          "Subclaims:";
    case PromptRole::QuestionGen:
      return
          "You are given table evidence and a claim. Write the questions needed to "
          "verify each fact in the claim. After each question, repeat the exact "
          "claim words the question targets. Respond on one line in the enumerated "
          "form \"1. <question>? <claim span>\" with one item per question.\n"
          "\n"
          "Evidence:\n"
          "{evidence}\n"
          "\n"
          "Claim: {claim}\n"
          "\n"
          "Questions:";
    case PromptRole::QuestionAnswer:
      return
          "You are given table evidence and a question about part of a claim. "
          "First extract the statements that answer the question, using only "
          "numbers that occur in the evidence. Then compute the answer, opening "
          "with one of the registered operation words (Adding, Counting, "
          "Subtracting, Comparing, Averaging, Minimum, Maximum, Superlative) or "
          "the phrase \"No computation is required.\" Finally give the answer as "
          "\"<FUNCTION> <result>\" where FUNCTION is one of COUNT, SUM, DIFF, "
          "AVERAGE, MIN, MAX, COMP, SUPER, COPY, FILTER. If the evidence cannot "
          "answer the question, extract \"N/A\". Respond with exactly three "
          "lines:\n"
          "Extraction: <statements>\n"
          "Compute: <operation>\n"
          "Answer: <FUNCTION> <result>\n"
          "\n"
          "Evidence:\n"
          "{evidence}\n"
          "\n"
          "Claim span: {span}\n"
          "Question: {question}";
    case PromptRole::NatOpQuery:
      return
          "Decide how the evidence answer relates to the claim span. Respond with "
          "exactly one of: Equivalence, Forward Entailment, Reverse Entailment, "
          "Negation, Alternation, Independence.\n"
          "\n"
          "Evidence answer: {evidence}\n"
          "Claim span: {span}\n"
          "\n"
          "Relation:";
  }
  throw std::invalid_argument("unknown prompt role");
}

std::string render_prompt(const std::string& template_text,
                          const std::map<std::string, std::string>& fields) {
  std::string out;
  out.reserve(template_text.size());
  for (size_t i = 0; i < template_text.size();) {
    char c = template_text[i];
    if (c != '{') {
      out += c;
      ++i;
      continue;
    }
    size_t close = template_text.find('}', i);
    if (close == std::string::npos) throw std::invalid_argument("unterminated placeholder");
    std::string name = template_text.substr(i + 1, close - i - 1);
    auto it = fields.find(name);
    if (it == fields.end()) throw std::invalid_argument("unbound placeholder: " + name);
    out += it->second;
    i = close + 1;
  }
  return out;
}

}  // namespace veritab
