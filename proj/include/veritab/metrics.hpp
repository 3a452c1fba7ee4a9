#pragma once

// Verdict metrics: accuracy, per-label precision/recall/F1, macro-F1 over the
// labels present in gold, and the fraction of instances with an executable
// proof. TwoWay projection folds Refuted and NEI into NotSupported.

#include <map>
#include <string>
#include <vector>

namespace veritab {

enum class LabelSpace { ThreeWay, TwoWay };

struct LabelMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  size_t support = 0;  // gold occurrences
};

struct MetricsReport {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  double execution_found = 0.0;
  std::map<std::string, LabelMetrics> per_label;
  std::string subset = "full";
  size_t count = 0;
  bool defined = false;  // false for empty input
};

// Canonicalizes and, in TwoWay mode, maps Refuted and NEI to NotSupported.
// Supported predictions are never changed by the projection.
std::string project_label(const std::string& label, LabelSpace space);

// preds and golds must be aligned and equally sized (std::invalid_argument
// otherwise). execution_found, when given, must have the same length and
// contributes the fraction of true entries; it defaults to all-true.
MetricsReport compute_metrics(const std::vector<std::string>& preds,
                              const std::vector<std::string>& golds,
                              LabelSpace space = LabelSpace::ThreeWay,
                              const std::vector<bool>* execution_found = nullptr);

}  // namespace veritab
