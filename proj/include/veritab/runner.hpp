#pragma once

// Batch evaluation: stream VerdictReports for a labeled dataset to JSONL,
// resume interrupted runs by id, and compute the final metrics over completed
// instances. Instance failures degrade to NEI rather than aborting the run.

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "veritab/config.hpp"
#include "veritab/dataset.hpp"
#include "veritab/metrics.hpp"
#include "veritab/pipeline.hpp"

namespace veritab {

struct EvalOptions {
  std::string output_path;  // empty disables streaming output
  bool resume = false;
  std::string subset = "full";  // "full" or "numerical"
  int parallel = 0;             // 0 takes the configured value
  bool decompose = true;
};

struct EvalOutcome {
  MetricsReport metrics;
  size_t completed = 0;       // verified this run
  size_t resumed = 0;         // reused from the existing output file
  std::string subset_source;  // numerical subset: "flag", "detected" or "mixed"
};

nlohmann::json report_to_json(const std::string& id, const std::string& gold,
                              const VerdictReport& report);
nlohmann::json metrics_to_json(const MetricsReport& metrics);

EvalOutcome run_eval(const Dataset& dataset, const EngineConfig& config,
                     std::shared_ptr<TextBackend> backend, const EvalOptions& options);

}  // namespace veritab
