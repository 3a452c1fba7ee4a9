#include "veritab/metrics.hpp"

#include <set>
#include <stdexcept>

#include "veritab/dataset.hpp"

namespace veritab {

std::string project_label(const std::string& label, LabelSpace space) {
  std::string canonical = canonical_label(label);
  if (space == LabelSpace::TwoWay && (canonical == "Refuted" || canonical == "NEI"))
    return "NotSupported";
  return canonical;
}

MetricsReport compute_metrics(const std::vector<std::string>& preds,
                              const std::vector<std::string>& golds, LabelSpace space,
                              const std::vector<bool>* execution_found) {
  if (preds.size() != golds.size())
    throw std::invalid_argument("prediction/gold length mismatch");
  if (execution_found && execution_found->size() != preds.size())
    throw std::invalid_argument("execution flag length mismatch");

  MetricsReport report;
  report.count = preds.size();
  if (preds.empty()) return report;
  report.defined = true;

  size_t correct = 0, executed = 0;
  std::map<std::string, size_t> tp, fp, fn;
  std::set<std::string> gold_labels;
  for (size_t i = 0; i < preds.size(); ++i) {
    std::string p = project_label(preds[i], space);
    std::string g = project_label(golds[i], space);
    gold_labels.insert(g);
    if (p == g) {
      ++correct;
      ++tp[g];
    } else {
      ++fp[p];
      ++fn[g];
    }
    if (!execution_found || (*execution_found)[i]) ++executed;
  }

  report.accuracy = static_cast<double>(correct) / preds.size();
  report.execution_found = static_cast<double>(executed) / preds.size();

  double f1_sum = 0.0;
  for (const std::string& label : gold_labels) {
    LabelMetrics m;
    size_t t = tp[label], p_den = tp[label] + fp[label], r_den = tp[label] + fn[label];
    m.precision = p_den ? static_cast<double>(t) / p_den : 0.0;
    m.recall = r_den ? static_cast<double>(t) / r_den : 0.0;
    m.f1 = (m.precision + m.recall) > 0 ? 2 * m.precision * m.recall / (m.precision + m.recall)
                                        : 0.0;
    m.support = r_den;
    f1_sum += m.f1;
    report.per_label[label] = m;
  }
  report.macro_f1 = f1_sum / gold_labels.size();
  return report;
}

}  // namespace veritab
