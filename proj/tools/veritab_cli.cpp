// veritab: verify tabular claims with executable natural-logic proofs.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "veritab/config.hpp"
#include "veritab/dataset.hpp"
#include "veritab/pipeline.hpp"
#include "veritab/probe.hpp"
#include "veritab/runner.hpp"
#include "veritab/textnorm.hpp"

using namespace veritab;
using nlohmann::json;

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Evidence files hold either {"tables": [...]}, a bare table array, or a full
// dataset record.
std::vector<Table> load_evidence(const std::string& path) {
  json j = json::parse(read_all(path));
  if (j.is_array()) return tables_from_json(j);
  return tables_from_json(j.at("tables"));
}

DatasetFormat parse_format(const std::string& name) {
  auto format = dataset_format_from_name(name);
  if (!format) throw CLI::ValidationError("--format", "unknown dataset format: " + name);
  return *format;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tabular fact verification with executable natural-logic proofs"};
  app.require_subcommand(1);

  std::string config_path, backend_arg;
  int seed = -1, parallel = 0;
  app.add_option("--config", config_path, "Engine config JSON");
  app.add_option("--backend", backend_arg,
                 "Backend: mock, mock:<dir>, http, http:<url> or a full URL");
  app.add_option("--seed", seed, "Sampling seed forwarded to the backend");
  app.add_option("--parallel", parallel, "Worker count for eval");

  auto load_engine_config = [&]() {
    EngineConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    apply_env_overrides(config);
    if (seed >= 0) config.backend.seed = seed;
    if (parallel > 0) config.parallel = parallel;
    return config;
  };

  std::string claim, evidence_path, input_path, output_path;
  bool no_decompose = false;

  CLI::App* verify = app.add_subcommand("verify", "Verify one claim against evidence tables");
  verify->add_option("--claim", claim, "Claim text")->required();
  verify->add_option("--evidence", evidence_path, "Evidence tables JSON file")->required();
  verify->add_flag("--no-decompose", no_decompose, "Skip the decomposition stage");

  CLI::App* decompose = app.add_subcommand("decompose", "Split a claim into subclaims");
  decompose->add_option("--claim", claim, "Claim text")->required();
  decompose->add_option("--evidence", evidence_path, "Evidence tables JSON file")->required();

  CLI::App* execute = app.add_subcommand("execute-proof", "Run the verdict automaton on proofs");
  execute->add_option("--input", input_path, "Proof JSON (object, array or JSONL; - for stdin)")
      ->required();

  std::string format_name = "feverous-jsonl";
  CLI::App* probe_gen = app.add_subcommand("probe-gen", "Generate the numeral-reading probe");
  probe_gen->add_option("--input", input_path, "Labeled dataset JSONL")->required();
  probe_gen->add_option("--output", output_path, "Probe instances JSONL")->required();
  probe_gen->add_option("--format", format_name, "feverous-jsonl or tabfact-jsonl");

  std::string probe_path, predictions_path;
  CLI::App* probe_score = app.add_subcommand("probe-score", "Score probe retention per class");
  probe_score->add_option("--probe", probe_path, "Probe instances JSONL")->required();
  probe_score->add_option("--predictions", predictions_path, "Verdict reports JSONL")
      ->required();

  bool resume = false;
  std::string subset = "full";
  CLI::App* eval = app.add_subcommand("eval", "Verify a labeled dataset and report metrics");
  eval->add_option("--input", input_path, "Dataset JSONL")->required();
  eval->add_option("--format", format_name, "feverous-jsonl or tabfact-jsonl");
  eval->add_option("--output", output_path, "Verdict reports JSONL stream");
  eval->add_flag("--resume", resume, "Skip ids already present in the output file");
  eval->add_option("--subset", subset, "full or numerical")
      ->check(CLI::IsMember({"full", "numerical"}));
  eval->add_flag("--no-decompose", no_decompose, "Skip the decomposition stage");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed() || decompose->parsed()) {
      EngineConfig config = load_engine_config();
      Gateway gateway(make_backend(config, backend_arg), gateway_config(config));
      std::vector<Table> tables = load_evidence(evidence_path);
      if (decompose->parsed()) {
        auto subclaims = decompose_into_subclaims(gateway, evidence_text(tables), claim);
        std::cout << json{{"claim", claim}, {"subclaims", subclaims}}.dump(2) << "\n";
      } else {
        PipelineConfig pc;
        pc.halo = config.halo;
        pc.decompose = !no_decompose;
        VerdictReport report = verify_claim(gateway, tables, claim, pc);
        std::cout << report_to_json("", "", report).dump(2) << "\n";
      }
      return 0;
    }

    if (execute->parsed()) {
      std::string body = read_all(input_path);
      std::vector<json> docs;
      try {
        json whole = json::parse(body);
        if (whole.is_array())
          for (auto& item : whole) docs.push_back(item);
        else
          docs.push_back(whole);
      } catch (const json::exception&) {
        std::istringstream lines(body);
        std::string line;
        while (std::getline(lines, line))
          if (!trim(line).empty()) docs.push_back(json::parse(line));
      }
      for (const json& doc : docs) {
        Proof proof = proof_from_json(doc);
        json trace = json::array();
        for (DfaState s : proof.trace) trace.push_back(dfa_state_name(s));
        std::cout << json{{"subclaim", proof.subclaim},
                          {"trace", trace},
                          {"verdict", verdict_name(proof.verdict)}}
                         .dump()
                  << "\n";
      }
      return 0;
    }

    if (probe_gen->parsed()) {
      Dataset dataset = load_dataset(input_path, parse_format(format_name));
      auto base = select_base_claims(dataset.records);
      auto instances = build_probe(base);
      std::ofstream out(output_path, std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open output: " + output_path);
      for (const ProbeInstance& instance : instances)
        out << probe_instance_to_json(instance).dump() << "\n";
      std::cout << json{{"base_claims", base.size()}, {"instances", instances.size()}}.dump()
                << "\n";
      return 0;
    }

    if (probe_score->parsed()) {
      std::vector<ProbeInstance> instances;
      {
        std::istringstream lines(read_all(probe_path));
        std::string line;
        while (std::getline(lines, line))
          if (!trim(line).empty())
            instances.push_back(probe_instance_from_json(json::parse(line)));
      }
      std::map<std::string, Verdict> predictions;
      {
        std::istringstream lines(read_all(predictions_path));
        std::string line;
        while (std::getline(lines, line)) {
          if (trim(line).empty()) continue;
          json j = json::parse(line);
          auto verdict = verdict_from_name(j.at("verdict").get<std::string>());
          if (verdict) predictions[j.at("id").get<std::string>()] = *verdict;
        }
      }
      ProbeScore score = score_probe(instances, predictions);
      json kinds = json::object(), classes = json::object();
      for (const auto& [kind, retention] : score.kind_retention)
        kinds[std::to_string(kind)] = retention;
      for (const auto& [name, retention] : score.class_retention) classes[name] = retention;
      std::cout << json{{"supported_bases", score.supported_bases},
                        {"defined", score.defined},
                        {"classes", classes},
                        {"kinds", kinds}}
                       .dump(2)
                << "\n";
      return 0;
    }

    if (eval->parsed()) {
      EngineConfig config = load_engine_config();
      Dataset dataset = load_dataset(input_path, parse_format(format_name));
      EvalOptions options;
      options.output_path = output_path;
      options.resume = resume;
      options.subset = subset;
      options.parallel = parallel;
      options.decompose = !no_decompose;
      EvalOutcome outcome =
          run_eval(dataset, config, make_backend(config, backend_arg), options);
      json summary = metrics_to_json(outcome.metrics);
      summary["completed"] = outcome.completed;
      summary["resumed"] = outcome.resumed;
      summary["skipped_lines"] = dataset.skipped;
      if (!outcome.subset_source.empty()) summary["subset_source"] = outcome.subset_source;
      std::cout << summary.dump(2) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
