#include "veritab/config.hpp"

#include <fstream>
#include <stdexcept>

#include "veritab/textnorm.hpp"

namespace veritab {

namespace {

Num num_from_json(const nlohmann::json& j) {
  std::string body = j.is_string() ? j.get<std::string>() : j.dump();
  auto v = Num::parse_decimal(body);
  if (!v) throw std::invalid_argument("not a decimal config value: " + body);
  return *v;
}

}  // namespace

EngineConfig config_from_json(const nlohmann::json& j) {
  EngineConfig config;
  if (j.contains("halo")) {
    const auto& h = j["halo"];
    if (h.contains("mode")) {
      std::string mode = fold_text(h["mode"].get<std::string>());
      if (mode == "empty") config.halo.mode = HaloMode::Empty;
      else if (mode == "relative") config.halo.mode = HaloMode::Relative;
      else if (mode == "roundness") config.halo.mode = HaloMode::Roundness;
      else throw std::invalid_argument("unknown halo mode: " + mode);
    }
    if (h.contains("modifier_width")) config.halo.modifier_width = num_from_json(h["modifier_width"]);
    if (h.contains("relative_epsilon"))
      config.halo.relative_epsilon = num_from_json(h["relative_epsilon"]);
    if (h.contains("roundness_widths")) {
      const auto& w = h["roundness_widths"];
      if (w.contains("ten")) config.halo.width_tenness = num_from_json(w["ten"]);
      if (w.contains("five")) config.halo.width_fiveness = num_from_json(w["five"]);
      if (w.contains("two_five")) config.halo.width_two_five_ness = num_from_json(w["two_five"]);
    }
  }
  if (j.contains("triggers"))
    for (const auto& [word, fn] : j["triggers"].items())
      config.triggers[word] = fn.get<std::string>();
  config.retry_count = j.value("retry_count", config.retry_count);
  if (j.contains("backend")) {
    const auto& b = j["backend"];
    config.backend.url = b.value("url", config.backend.url);
    config.backend.model = b.value("model", config.backend.model);
    config.backend.api_key = b.value("key", config.backend.api_key);
    config.backend.timeout_seconds = b.value("timeout_seconds", config.backend.timeout_seconds);
    config.backend.seed = b.value("seed", config.backend.seed);
  }
  config.temperature = j.value("temperature", config.temperature);
  config.max_tokens = j.value("max_tokens", config.max_tokens);
  config.parallel = j.value("parallel", config.parallel);
  config.prompts_dir = j.value("prompts_dir", config.prompts_dir);
  config.fixtures_dir = j.value("fixtures_dir", config.fixtures_dir);
  return config;
}

EngineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  nlohmann::json j;
  in >> j;
  return config_from_json(j);
}

void apply_env_overrides(EngineConfig& config) {
  config.backend = HttpBackend::from_env(config.backend);
}

GatewayConfig gateway_config(const EngineConfig& config) {
  GatewayConfig gc;
  gc.retry_count = config.retry_count;
  gc.prompts_dir = config.prompts_dir;
  gc.temperature = config.temperature;
  gc.max_tokens = config.max_tokens;
  gc.triggers = TriggerLexicon::defaults();
  for (const auto& [word, fn_name] : config.triggers) {
    auto fn = arith_from_name(fn_name);
    if (!fn) throw std::invalid_argument("unknown trigger function: " + fn_name);
    gc.triggers.add(word, *fn);
  }
  return gc;
}

std::shared_ptr<TextBackend> make_backend(const EngineConfig& config,
                                          const std::string& backend_arg) {
  std::string arg = trim(backend_arg);
  if (arg.empty()) arg = config.fixtures_dir.empty() ? "http" : "mock";
  if (arg == "mock") {
    if (config.fixtures_dir.empty())
      throw std::invalid_argument("mock backend needs fixtures_dir or mock:<dir>");
    return std::make_shared<MockBackend>(config.fixtures_dir);
  }
  if (arg.rfind("mock:", 0) == 0) return std::make_shared<MockBackend>(arg.substr(5));
  if (arg == "http") return std::make_shared<HttpBackend>(config.backend);
  if (arg.rfind("http:", 0) == 0 && arg.rfind("http://", 0) != 0) {
    HttpBackendConfig hc = config.backend;
    hc.url = arg.substr(5);
    return std::make_shared<HttpBackend>(hc);
  }
  if (arg.rfind("http://", 0) == 0 || arg.rfind("https://", 0) == 0) {
    HttpBackendConfig hc = config.backend;
    hc.url = arg;
    return std::make_shared<HttpBackend>(hc);
  }
  throw std::invalid_argument("unknown backend: " + backend_arg);
}

}  // namespace veritab
