#include "veritab/runner.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include "veritab/textnorm.hpp"

namespace veritab {

nlohmann::json report_to_json(const std::string& id, const std::string& gold,
                              const VerdictReport& report) {
  nlohmann::json proofs = nlohmann::json::array();
  for (const Proof& proof : report.proofs) proofs.push_back(proof_to_json(proof));
  nlohmann::json j = {{"id", id},
                      {"verdict", verdict_name(report.verdict)},
                      {"execution_found", report.execution_found},
                      {"subclaims", report.subclaims},
                      {"proofs", proofs}};
  if (!gold.empty()) j["gold"] = gold;
  return j;
}

nlohmann::json metrics_to_json(const MetricsReport& metrics) {
  nlohmann::json per_label = nlohmann::json::object();
  for (const auto& [label, m] : metrics.per_label)
    per_label[label] = {{"precision", m.precision},
                        {"recall", m.recall},
                        {"f1", m.f1},
                        {"support", m.support}};
  return {{"accuracy", metrics.accuracy},
          {"macro_f1", metrics.macro_f1},
          {"execution_found", metrics.execution_found},
          {"per_label", per_label},
          {"subset", metrics.subset},
          {"count", metrics.count},
          {"defined", metrics.defined}};
}

namespace {

struct InstanceResult {
  std::string verdict;
  bool execution_found = true;
};

}  // namespace

EvalOutcome run_eval(const Dataset& dataset, const EngineConfig& config,
                     std::shared_ptr<TextBackend> backend, const EvalOptions& options) {
  EvalOutcome outcome;

  std::vector<const ClaimRecord*> records;
  bool any_flag = false, any_detected = false;
  for (const ClaimRecord& record : dataset.records) {
    if (options.subset == "numerical") {
      if (!record.numerical) continue;
      (record.numerical_from_flag ? any_flag : any_detected) = true;
    }
    records.push_back(&record);
  }
  if (options.subset == "numerical")
    outcome.subset_source = any_flag && any_detected ? "mixed" : (any_flag ? "flag" : "detected");

  std::map<std::string, InstanceResult> done;
  if (options.resume && !options.output_path.empty()) {
    std::ifstream in(options.output_path);
    std::string line;
    while (in && std::getline(in, line)) {
      if (trim(line).empty()) continue;
      try {
        nlohmann::json j = nlohmann::json::parse(line);
        InstanceResult result;
        result.verdict = j.at("verdict").get<std::string>();
        result.execution_found = j.value("execution_found", true);
        done[j.at("id").get<std::string>()] = result;
      } catch (const std::exception&) {
        // Unfinished trailing line from an interrupted run.
      }
    }
  }

  std::vector<const ClaimRecord*> pending;
  for (const ClaimRecord* record : records) {
    if (done.count(record->id)) {
      ++outcome.resumed;
    } else {
      pending.push_back(record);
    }
  }

  std::ofstream out;
  std::mutex io_mutex;
  if (!options.output_path.empty()) {
    out.open(options.output_path, options.resume ? std::ios::app : std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output: " + options.output_path);
  }

  GatewayConfig gc = gateway_config(config);
  PipelineConfig pc;
  pc.halo = config.halo;
  pc.decompose = options.decompose;

  int workers = options.parallel > 0 ? options.parallel : std::max(1, config.parallel);
  workers = std::min<int>(workers, std::max<size_t>(pending.size(), 1));

  std::atomic<size_t> next{0};
  std::mutex done_mutex;
  auto work = [&]() {
    Gateway gateway(backend, gc);
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= pending.size()) break;
      const ClaimRecord& record = *pending[i];
      VerdictReport report;
      std::string error;
      try {
        report = verify_claim(gateway, record.tables, record.claim, pc);
      } catch (const std::exception& e) {
        report = VerdictReport{};
        report.verdict = Verdict::NEI;
        report.execution_found = false;
        error = e.what();
      }
      nlohmann::json line = report_to_json(record.id, record.label, report);
      if (!error.empty()) line["error"] = error;
      {
        std::lock_guard<std::mutex> lock(io_mutex);
        if (out.is_open()) out << line.dump() << "\n" << std::flush;
      }
      {
        std::lock_guard<std::mutex> lock(done_mutex);
        done[record.id] = {verdict_name(report.verdict), report.execution_found};
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  outcome.completed = pending.size();

  std::vector<std::string> preds, golds;
  std::vector<bool> executed;
  for (const ClaimRecord* record : records) {
    auto it = done.find(record->id);
    if (it == done.end()) continue;
    preds.push_back(it->second.verdict);
    golds.push_back(record->label);
    executed.push_back(it->second.execution_found);
  }
  outcome.metrics = compute_metrics(
      preds, golds, dataset.two_way ? LabelSpace::TwoWay : LabelSpace::ThreeWay, &executed);
  outcome.metrics.subset = options.subset;
  return outcome;
}

}  // namespace veritab
