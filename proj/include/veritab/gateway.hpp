#pragma once

// Text generation backends and the validated request gateway.
//
// Every model interaction goes through Gateway, which renders a prompt from a
// role template, sends it to a TextBackend, and checks the response against
// the role's output contract.  Invalid responses are retried with a corrective
// suffix appended to the prompt; after the configured number of attempts the
// call reports failure and the caller degrades gracefully.
//
// MockBackend replays canned responses keyed by the SHA-256 of the exact
// prompt text, which keeps recorded runs reproducible offline.  HttpBackend
// posts to an OpenAI-style completion endpoint.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "veritab/arith.hpp"
#include "veritab/natop.hpp"
#include "veritab/prompts.hpp"
#include "veritab/tables.hpp"

namespace veritab {

struct GenRequest {
  PromptRole role = PromptRole::QuestionAnswer;
  std::string prompt;
  int max_tokens = 512;
  double temperature = 0.0;
  std::vector<std::string> stop;
};

struct GenAttempt {
  std::string response;
  bool valid = false;
  std::string violation;
};

struct GenerationTrace {
  PromptRole role = PromptRole::QuestionAnswer;
  std::string prompt;
  std::vector<GenAttempt> attempts;
  bool success = false;
  std::string error;
};

class BackendError : public std::runtime_error {
 public:
  explicit BackendError(const std::string& what) : std::runtime_error(what) {}
};

class TextBackend {
 public:
  virtual ~TextBackend() = default;
  virtual std::string generate(const GenRequest& request) = 0;
};

// Canned responses addressed by SHA-256 of the full prompt.  A directory holds
// one <hex digest>.txt file per prompt; save() appends a final newline and
// load strips it back off so files round-trip through editors and git.
class MockBackend : public TextBackend {
 public:
  MockBackend() = default;
  explicit MockBackend(const std::string& dir);

  std::string generate(const GenRequest& request) override;

  void add(const std::string& prompt, const std::string& response);
  void save(const std::string& dir) const;
  size_t size() const { return responses_.size(); }

  static std::string hash_prompt(const std::string& prompt);

 private:
  std::map<std::string, std::string> responses_;
};

struct HttpBackendConfig {
  std::string url;
  std::string model;
  std::string api_key;
  int timeout_seconds = 60;
  int seed = -1;  // sent with the request when non-negative
};

class HttpBackend : public TextBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config);

  std::string generate(const GenRequest& request) override;

  // Overlays ENGINE_BACKEND_URL / ENGINE_BACKEND_MODEL / ENGINE_BACKEND_KEY
  // onto the given base configuration.
  static HttpBackendConfig from_env(HttpBackendConfig base = {});

 private:
  HttpBackendConfig config_;
};

// Splits "1. alpha 2. beta" into {"alpha", "beta"}.  Markers must run
// sequentially from 1 and sit at the start of the text or after whitespace.
std::vector<std::string> parse_enumeration(const std::string& text);

struct DecomposeValidation {
  std::vector<std::string> subclaims;
  std::optional<std::string> violation;
};
DecomposeValidation validate_decompose_output(const std::string& response);

struct QgItem {
  std::string question;
  std::string span;
};

struct QgValidation {
  std::vector<QgItem> items;
  std::optional<std::string> violation;
};
// Each enumerated item must be "<question>? <span>" with the span a verbatim
// substring of the claim.  Spans are repaired by trimming stray edge
// punctuation; exact duplicate questions are dropped.
QgValidation validate_qg_output(const std::string& response, const std::string& claim);

struct QaValidation {
  std::string extraction;
  std::string compute;
  std::string answer_line;
  ArithAnswer answer;
  bool na = false;
  // Set when the stated result disagreed with the engine's recomputation of
  // the compute line; the engine result replaces the stated one.
  bool corrected = false;
  std::optional<std::string> violation;
};
// Expects "Extraction:", "Compute:" (or "Computation:") and "Answer:" (or
// "ArithExp:") lines.  An N/A extraction short-circuits as a valid empty
// answer.  Extraction numbers must occur in the evidence inventory, the
// compute line must open with a registered operation word, and stated
// arithmetic is recomputed.
QaValidation validate_qa_output(const std::string& response, const NumberInventory& inventory,
                                const TriggerLexicon& triggers = TriggerLexicon::defaults());

struct NatOpValidation {
  std::optional<NatOp> op;
  std::optional<std::string> violation;
};
NatOpValidation validate_natop_output(const std::string& response);

struct GatewayConfig {
  int retry_count = 3;
  // When set, <prompts_dir>/<role>.txt overrides the built-in template.
  std::string prompts_dir;
  double temperature = 0.0;
  int max_tokens = 512;
  TriggerLexicon triggers = TriggerLexicon::defaults();
};

struct DecomposeResult {
  std::vector<std::string> subclaims;
  GenerationTrace trace;
};

struct QgResult {
  std::vector<QgItem> items;
  GenerationTrace trace;
};

struct QaResult {
  std::string extraction;
  std::string compute;
  std::string answer_line;  // surface form as produced (FILTER keeps its name)
  ArithAnswer answer;
  bool na = false;
  bool corrected = false;
  GenerationTrace trace;
};

struct NatOpResult {
  std::optional<NatOp> op;
  GenerationTrace trace;
};

class Gateway {
 public:
  explicit Gateway(std::shared_ptr<TextBackend> backend, GatewayConfig config = {});

  const GatewayConfig& config() const { return config_; }

  std::string template_text(PromptRole role) const;
  std::string render(PromptRole role, const std::map<std::string, std::string>& fields) const;

  DecomposeResult decompose_claim(const std::string& evidence, const std::string& claim);
  QgResult generate_questions(const std::string& evidence, const std::string& claim);
  QaResult answer_question(const std::string& evidence, const std::string& span,
                           const std::string& question, const NumberInventory& inventory);
  NatOpResult query_natop(const std::string& evidence_answer, const std::string& span);

 private:
  GenerationTrace run(PromptRole role, const std::string& prompt,
                      const std::function<std::optional<std::string>(const std::string&)>& check);

  std::shared_ptr<TextBackend> backend_;
  GatewayConfig config_;
  std::map<PromptRole, std::string> templates_;
};

}  // namespace veritab
