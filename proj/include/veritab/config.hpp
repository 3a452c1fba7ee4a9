#pragma once

// Engine configuration: halo policy, trigger lexicon extensions, retry
// budget, backend endpoint and generation parameters, all loadable from a
// JSON file with environment overrides for the backend fields.

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "veritab/gateway.hpp"
#include "veritab/numerals.hpp"

namespace veritab {

struct EngineConfig {
  HaloPolicy halo;
  std::map<std::string, std::string> triggers;  // extra word -> FUNCTION name
  int retry_count = 3;
  HttpBackendConfig backend;
  double temperature = 0.0;
  int max_tokens = 512;
  int parallel = 1;
  std::string prompts_dir;
  std::string fixtures_dir;  // canned responses for the mock backend
};

EngineConfig config_from_json(const nlohmann::json& j);
EngineConfig load_config(const std::string& path);

// ENGINE_BACKEND_URL / ENGINE_BACKEND_MODEL / ENGINE_BACKEND_KEY take
// precedence over file values.
void apply_env_overrides(EngineConfig& config);

GatewayConfig gateway_config(const EngineConfig& config);

// backend_arg: "mock" (uses fixtures_dir), "mock:<dir>", "http" (uses the
// configured url) or "http:<url>". Empty picks mock when fixtures_dir is set,
// http otherwise.
std::shared_ptr<TextBackend> make_backend(const EngineConfig& config,
                                          const std::string& backend_arg = {});

}  // namespace veritab
