#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "veritab/gateway.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "veritab/natlog.hpp"
#include "veritab/textnorm.hpp"

namespace veritab {

namespace fs = std::filesystem;

std::string MockBackend::hash_prompt(const std::string& prompt) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(prompt.data(), prompt.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

MockBackend::MockBackend(const std::string& dir) {
  if (!fs::is_directory(dir)) throw BackendError("mock response directory not found: " + dir);
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    std::string stem = entry.path().stem().string();
    if (stem.size() != 64) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (!body.empty() && body.back() == '\n') body.pop_back();
    responses_[stem] = body;
  }
}

std::string MockBackend::generate(const GenRequest& request) {
  std::string key = hash_prompt(request.prompt);
  auto it = responses_.find(key);
  if (it == responses_.end()) {
    std::string head = request.prompt.substr(0, 72);
    for (auto& c : head)
      if (c == '\n') c = ' ';
    throw BackendError("no canned response for prompt (sha256 " + key + "): " + head + "...");
  }
  return it->second;
}

void MockBackend::add(const std::string& prompt, const std::string& response) {
  responses_[hash_prompt(prompt)] = response;
}

void MockBackend::save(const std::string& dir) const {
  fs::create_directories(dir);
  for (const auto& [key, body] : responses_) {
    std::ofstream out(fs::path(dir) / (key + ".txt"), std::ios::binary);
    out << body << '\n';
  }
}

HttpBackend::HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {
  if (config_.url.empty()) throw BackendError("backend url is empty");
}

HttpBackendConfig HttpBackend::from_env(HttpBackendConfig base) {
  if (const char* v = std::getenv("ENGINE_BACKEND_URL")) base.url = v;
  if (const char* v = std::getenv("ENGINE_BACKEND_MODEL")) base.model = v;
  if (const char* v = std::getenv("ENGINE_BACKEND_KEY")) base.api_key = v;
  return base;
}

std::string HttpBackend::generate(const GenRequest& request) {
  size_t scheme = config_.url.find("://");
  size_t path_start =
      config_.url.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  std::string base =
      path_start == std::string::npos ? config_.url : config_.url.substr(0, path_start);
  std::string path = path_start == std::string::npos ? "/" : config_.url.substr(path_start);

  httplib::Client client(base);
  client.set_connection_timeout(config_.timeout_seconds, 0);
  client.set_read_timeout(config_.timeout_seconds, 0);

  httplib::Headers headers;
  if (!config_.api_key.empty()) headers.emplace("Authorization", "Bearer " + config_.api_key);

  nlohmann::json body = {{"model", config_.model},
                         {"prompt", request.prompt},
                         {"max_tokens", request.max_tokens},
                         {"temperature", request.temperature}};
  if (!request.stop.empty()) body["stop"] = request.stop;
  if (config_.seed >= 0) body["seed"] = config_.seed;

  auto res = client.Post(path, headers, body.dump(), "application/json");
  if (!res) throw BackendError("backend request failed: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw BackendError("backend returned status " + std::to_string(res->status) + ": " +
                       res->body.substr(0, 200));
  nlohmann::json reply;
  try {
    reply = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception&) {
    throw BackendError("backend response is not valid JSON");
  }
  if (reply.contains("choices") && reply["choices"].is_array() && !reply["choices"].empty()) {
    const auto& choice = reply["choices"][0];
    if (choice.contains("text")) return choice["text"].get<std::string>();
    if (choice.contains("message") && choice["message"].contains("content"))
      return choice["message"]["content"].get<std::string>();
  }
  throw BackendError("backend response lacks choices[0].text");
}

std::vector<std::string> parse_enumeration(const std::string& text) {
  std::vector<size_t> marker_at, item_at;
  size_t from = 0;
  for (int k = 1;; ++k) {
    std::string marker = std::to_string(k) + ". ";
    size_t pos = std::string::npos;
    for (size_t search = from;
         (search = text.find(marker, search)) != std::string::npos; ++search) {
      if (search == 0 || std::isspace(static_cast<unsigned char>(text[search - 1]))) {
        pos = search;
        break;
      }
    }
    if (pos == std::string::npos) break;
    marker_at.push_back(pos);
    item_at.push_back(pos + marker.size());
    from = pos + marker.size();
  }
  std::vector<std::string> items;
  for (size_t i = 0; i < item_at.size(); ++i) {
    size_t end = i + 1 < marker_at.size() ? marker_at[i + 1] : text.size();
    std::string item = trim(text.substr(item_at[i], end - item_at[i]));
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

DecomposeValidation validate_decompose_output(const std::string& response) {
  DecomposeValidation out;
  out.subclaims = parse_enumeration(response);
  if (out.subclaims.empty())
    out.violation = "expected subclaims in the enumerated form \"1. <subclaim>\"";
  return out;
}

namespace {

const char* kEdgePunct = ".,;:!\"'";

std::string strip_edge_punct(std::string s) {
  while (!s.empty() && std::strchr(kEdgePunct, s.back())) s.pop_back();
  while (!s.empty() && std::strchr(kEdgePunct, s.front())) s.erase(0, 1);
  return trim(s);
}

}  // namespace

QgValidation validate_qg_output(const std::string& response, const std::string& claim) {
  QgValidation out;
  auto items = parse_enumeration(response);
  if (items.empty()) {
    out.violation = "expected questions in the enumerated form \"1. <question>? <claim span>\"";
    return out;
  }
  std::set<std::string> seen;
  for (const auto& item : items) {
    size_t qmark = item.find('?');
    if (qmark == std::string::npos) {
      out.violation = "enumerated item lacks a question mark: " + item;
      return out;
    }
    QgItem parsed;
    parsed.question = trim(item.substr(0, qmark + 1));
    parsed.span = trim(item.substr(qmark + 1));
    if (parsed.span.empty()) {
      out.violation = "no claim span follows the question " + parsed.question;
      return out;
    }
    if (claim.find(parsed.span) == std::string::npos) {
      std::string repaired = strip_edge_punct(parsed.span);
      if (repaired.empty() || claim.find(repaired) == std::string::npos) {
        out.violation = "span is not a verbatim part of the claim: \"" + parsed.span + "\"";
        return out;
      }
      parsed.span = repaired;
    }
    if (!seen.insert(parsed.question).second) continue;
    out.items.push_back(std::move(parsed));
  }
  return out;
}

namespace {

// Text between the leading trigger word and the first '=': the operands of
// the stated computation.
std::string compute_payload(const std::string& compute) {
  std::string body = trim(compute);
  size_t sp = body.find_first_of(" \t");
  std::string rest = sp == std::string::npos ? "" : trim(body.substr(sp + 1));
  size_t eq = rest.find('=');
  if (eq != std::string::npos) rest = trim(rest.substr(0, eq));
  return rest;
}

std::optional<std::string> recompute_super(const std::string& compute, QaValidation& out) {
  std::string rest = compute_payload(compute);
  size_t sp = rest.find_first_of(" \t");
  std::string direction = fold_text(sp == std::string::npos ? rest : rest.substr(0, sp));
  bool super_max;
  if (direction == "max" || direction == "maximum") {
    super_max = true;
  } else if (direction == "min" || direction == "minimum") {
    super_max = false;
  } else {
    return "SUPER compute line must state max or min after the operation word";
  }
  rest = sp == std::string::npos ? "" : trim(rest.substr(sp + 1));
  if (fold_text(rest).rfind("of ", 0) == 0) rest = trim(rest.substr(3));
  ArithExpr expr;
  expr.fn = ArithFunction::Super;
  expr.super_max = super_max;
  for (const auto& item : split_list_items(rest)) {
    size_t cut = item.find_last_of(" \t");
    auto token = cut == std::string::npos
                     ? std::optional<NumberToken>{}
                     : parse_number_token(trim(item.substr(cut + 1)));
    if (!token) return "SUPER compute item lacks a trailing numeric value: " + item;
    std::string label = trim(item.substr(0, cut));
    if (label.empty()) return "SUPER compute item lacks a label: " + item;
    expr.args.push_back(LabeledValue{token->value, label});
  }
  if (expr.args.empty()) return "SUPER compute line lists no labeled values";
  ArithAnswer engine = eval_expr(expr);
  if (out.answer.value || out.answer.text != engine.text) {
    out.answer.value.reset();
    out.answer.text = engine.text;
    out.corrected = true;
  }
  return std::nullopt;
}

}  // namespace

QaValidation validate_qa_output(const std::string& response, const NumberInventory& inventory,
                                const TriggerLexicon& triggers) {
  QaValidation out;
  std::optional<std::string> extraction, compute, answer_line;
  std::optional<std::string>* open = nullptr;
  std::istringstream lines(response);
  std::string raw;
  while (std::getline(lines, raw)) {
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto labeled = [&](const char* label) -> bool {
      size_t n = std::strlen(label);
      if (line.size() < n || fold_text(line.substr(0, n)) != fold_text(label)) return false;
      std::string value = trim(line.substr(n));
      if (std::strcmp(label, "Extraction:") == 0) {
        open = &extraction;
      } else if (std::strcmp(label, "Compute:") == 0 || std::strcmp(label, "Computation:") == 0) {
        open = &compute;
      } else {
        open = &answer_line;
      }
      if (!open->has_value()) *open = value;
      return true;
    };
    if (labeled("Extraction:") || labeled("Compute:") || labeled("Computation:") ||
        labeled("Answer:") || labeled("ArithExp:"))
      continue;
    if (open && open->has_value()) **open += (**open).empty() ? line : " " + line;
  }

  if (!extraction) {
    out.violation = "missing Extraction line";
    return out;
  }
  out.extraction = *extraction;
  if (fold_text(trim(*extraction)) == "n/a") {
    out.na = true;
    out.answer = ArithAnswer::na();
    return out;
  }
  for (const auto& token : scan_number_tokens(*extraction)) {
    if (!inventory.permits(token.value)) {
      out.violation = "extraction uses a number not present in the evidence: " +
                      token.value.render(false) + (token.percent ? "%" : "");
      return out;
    }
  }
  if (!compute) {
    out.violation = "missing Compute line";
    return out;
  }
  out.compute = *compute;
  auto fn = triggers.match_compute_line(*compute);
  if (!fn) {
    out.violation =
        "compute line must open with a registered operation word or the no-computation phrase";
    return out;
  }
  if (!answer_line) {
    out.violation = "missing Answer line";
    return out;
  }
  out.answer_line = *answer_line;
  auto parsed = parse_arith_answer(*answer_line);
  if (!parsed) {
    out.violation = "answer must be \"<FUNCTION> <result>\" or N/A";
    return out;
  }
  out.answer = *parsed;
  if (parsed->is_na()) {
    out.na = true;
    return out;
  }
  if (parsed->fn != *fn) {
    out.violation = "answer function " + arith_name(parsed->fn) +
                    " does not match the compute line operation " + arith_name(*fn);
    return out;
  }

  switch (*fn) {
    case ArithFunction::Copy:
      break;
    case ArithFunction::Count: {
      auto items = split_list_items(compute_payload(*compute));
      if (!items.empty()) {
        Num engine(static_cast<long long>(items.size()));
        if (!out.answer.value || *out.answer.value != engine) {
          out.answer.value = engine;
          out.answer.text.clear();
          out.corrected = true;
        }
      }
      break;
    }
    case ArithFunction::Super: {
      out.violation = recompute_super(*compute, out);
      break;
    }
    default: {
      auto tokens = scan_number_tokens(compute_payload(*compute));
      if (tokens.empty()) break;
      ArithExpr expr;
      expr.fn = *fn;
      for (const auto& token : tokens) expr.args.emplace_back(token.value);
      Num engine = *eval_expr(expr).value;
      if (!out.answer.value || *out.answer.value != engine) {
        out.answer.value = engine;
        out.answer.text.clear();
        out.corrected = true;
      }
      break;
    }
  }
  return out;
}

NatOpValidation validate_natop_output(const std::string& response) {
  NatOpValidation out;
  std::string n = normalize_text(response);
  if (n == "equivalence") out.op = NatOp::Equivalence;
  else if (n == "forward entailment") out.op = NatOp::ForwardEntailment;
  else if (n == "reverse entailment") out.op = NatOp::ReverseEntailment;
  else if (n == "negation") out.op = NatOp::Negation;
  else if (n == "alternation") out.op = NatOp::Alternation;
  else if (n == "cover") out.op = NatOp::Cover;
  else if (n == "independence") out.op = NatOp::Independence;
  else
    out.violation = "response must be exactly one relation name (Equivalence, Forward "
                    "Entailment, Reverse Entailment, Negation, Alternation, Independence)";
  return out;
}

Gateway::Gateway(std::shared_ptr<TextBackend> backend, GatewayConfig config)
    : backend_(std::move(backend)), config_(std::move(config)) {
  for (PromptRole role : {PromptRole::Decompose, PromptRole::QuestionGen,
                          PromptRole::QuestionAnswer, PromptRole::NatOpQuery}) {
    std::string text = default_prompt_template(role);
    if (!config_.prompts_dir.empty()) {
      fs::path p = fs::path(config_.prompts_dir) / (prompt_role_name(role) + ".txt");
      std::ifstream in(p, std::ios::binary);
      if (in) {
        std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
        if (!body.empty()) text = body;
      }
    }
    templates_[role] = text;
  }
}

std::string Gateway::template_text(PromptRole role) const { return templates_.at(role); }

std::string Gateway::render(PromptRole role,
                            const std::map<std::string, std::string>& fields) const {
  return render_prompt(template_text(role), fields);
}

GenerationTrace Gateway::run(
    PromptRole role, const std::string& prompt,
    const std::function<std::optional<std::string>(const std::string&)>& check) {
  GenerationTrace trace;
  trace.role = role;
  trace.prompt = prompt;
  std::string current = prompt;
  for (int attempt = 0; attempt < config_.retry_count; ++attempt) {
    GenRequest request;
    request.role = role;
    request.prompt = current;
    request.max_tokens = config_.max_tokens;
    request.temperature = config_.temperature;
    std::string response;
    try {
      response = backend_->generate(request);
    } catch (const BackendError& e) {
      trace.error = e.what();
      return trace;
    }
    auto violation = check(response);
    trace.attempts.push_back({response, !violation.has_value(), violation.value_or("")});
    if (!violation) {
      trace.success = true;
      return trace;
    }
    current = prompt + "\n\n(Previous answer was rejected: " + *violation +
              ". Follow the required format exactly.)";
  }
  trace.error =
      "no valid response after " + std::to_string(config_.retry_count) + " attempts";
  return trace;
}

DecomposeResult Gateway::decompose_claim(const std::string& evidence, const std::string& claim) {
  DecomposeResult out;
  std::string prompt =
      render(PromptRole::Decompose, {{"evidence", evidence}, {"claim", claim}});
  std::vector<std::string> subclaims;
  out.trace = run(PromptRole::Decompose, prompt,
                  [&](const std::string& response) -> std::optional<std::string> {
                    auto v = validate_decompose_output(response);
                    if (v.violation) return v.violation;
                    subclaims = std::move(v.subclaims);
                    return std::nullopt;
                  });
  if (out.trace.success) out.subclaims = std::move(subclaims);
  return out;
}

QgResult Gateway::generate_questions(const std::string& evidence, const std::string& claim) {
  QgResult out;
  std::string prompt =
      render(PromptRole::QuestionGen, {{"evidence", evidence}, {"claim", claim}});
  std::vector<QgItem> items;
  out.trace = run(PromptRole::QuestionGen, prompt,
                  [&](const std::string& response) -> std::optional<std::string> {
                    auto v = validate_qg_output(response, claim);
                    if (v.violation) return v.violation;
                    items = std::move(v.items);
                    return std::nullopt;
                  });
  if (out.trace.success) out.items = std::move(items);
  return out;
}

QaResult Gateway::answer_question(const std::string& evidence, const std::string& span,
                                  const std::string& question,
                                  const NumberInventory& inventory) {
  QaResult out;
  std::string prompt = render(PromptRole::QuestionAnswer,
                              {{"evidence", evidence}, {"span", span}, {"question", question}});
  QaValidation accepted;
  out.trace = run(PromptRole::QuestionAnswer, prompt,
                  [&](const std::string& response) -> std::optional<std::string> {
                    auto v = validate_qa_output(response, inventory, config_.triggers);
                    if (v.violation) return v.violation;
                    accepted = std::move(v);
                    return std::nullopt;
                  });
  if (out.trace.success) {
    out.extraction = accepted.extraction;
    out.compute = accepted.compute;
    out.answer_line = accepted.answer_line;
    out.answer = accepted.answer;
    out.na = accepted.na;
    out.corrected = accepted.corrected;
  } else {
    out.answer = ArithAnswer::na();
    out.na = true;
  }
  return out;
}

NatOpResult Gateway::query_natop(const std::string& evidence_answer, const std::string& span) {
  NatOpResult out;
  std::string prompt =
      render(PromptRole::NatOpQuery, {{"evidence", evidence_answer}, {"span", span}});
  std::optional<NatOp> op;
  out.trace = run(PromptRole::NatOpQuery, prompt,
                  [&](const std::string& response) -> std::optional<std::string> {
                    auto v = validate_natop_output(response);
                    if (v.violation) return v.violation;
                    op = v.op;
                    return std::nullopt;
                  });
  if (out.trace.success) out.op = op;
  return out;
}

}  // namespace veritab
