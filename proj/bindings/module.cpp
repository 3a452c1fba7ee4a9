// Python bindings over the verification core. Structured inputs and outputs
// travel as JSON strings so the binding stays a thin shim over the same
// serialization the CLI uses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "veritab/arith.hpp"
#include "veritab/dataset.hpp"
#include "veritab/gateway.hpp"
#include "veritab/metrics.hpp"
#include "veritab/natlog.hpp"
#include "veritab/numerals.hpp"
#include "veritab/pipeline.hpp"
#include "veritab/runner.hpp"

namespace py = pybind11;
using namespace veritab;

namespace {

std::vector<NatOp> ops_from_codes(const std::vector<std::string>& codes) {
  std::vector<NatOp> ops;
  for (const std::string& code : codes) {
    auto op = natop_from_code(code);
    if (!op) throw std::invalid_argument("unknown operator code: " + code);
    ops.push_back(*op);
  }
  return ops;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tabular fact verification with executable natural-logic proofs.";

  m.def(
      "execute_proof",
      [](const std::vector<std::string>& codes) {
        ExecutionResult result = execute_proof(ops_from_codes(codes));
        std::vector<std::string> trace;
        for (DfaState s : result.trace) trace.push_back(dfa_state_name(s));
        return py::make_tuple(verdict_name(result.verdict), trace);
      },
      py::arg("ops"),
      "Run the verdict automaton over operator codes (EQ, FE, RE, NEG, ALT, IND). "
      "Returns (verdict, trace of states after each step).");

  m.def(
      "compare_quantities",
      [](const std::string& evidence, const std::string& claim,
         const std::string& context) -> std::optional<std::string> {
        auto ev = parse_quantity(evidence);
        auto cl = parse_quantity(claim);
        if (!ev || !cl) return std::nullopt;
        MonotoneEnv env = detect_env(context.empty() ? claim : context);
        return natop_code(collapse_cover(compare(*ev, *cl, env, HaloPolicy{})));
      },
      py::arg("evidence"), py::arg("claim"), py::arg("context") = std::string(),
      "Operator code relating an evidence quantity to a claim quantity under the "
      "monotonicity environment read from `context` (the claim itself when empty). "
      "None when either side carries no numeral; Cover collapses to IND.");

  m.def(
      "arith_answer",
      [](const std::string& function, const std::vector<std::string>& values) {
        auto fn = arith_from_name(function);
        if (!fn) throw std::invalid_argument("unknown function: " + function);
        ArithExpr expr;
        expr.fn = *fn;
        for (const std::string& v : values) {
          auto num = Num::parse_decimal(v);
          if (!num) throw std::invalid_argument("not a decimal value: " + v);
          expr.args.push_back(*num);
        }
        return render_answer(eval_expr(expr));
      },
      py::arg("function"), py::arg("values"),
      "Evaluate an arithmetic function over decimal strings and render the answer, "
      "e.g. arith_answer('SUM', ['3945', '1126']) == 'SUM 5,071'.");

  m.def("canonical_label", &canonical_label, py::arg("label"),
        "Fold a dataset label surface onto Supported / Refuted / NEI / NotSupported.");

  m.def(
      "compute_metrics",
      [](const std::vector<std::string>& predictions,
         const std::vector<std::string>& golds, bool two_way) {
        MetricsReport report = compute_metrics(
            predictions, golds, two_way ? LabelSpace::TwoWay : LabelSpace::ThreeWay);
        py::dict d;
        d["accuracy"] = report.accuracy;
        d["macro_f1"] = report.macro_f1;
        d["execution_found"] = report.execution_found;
        d["count"] = report.count;
        d["defined"] = report.defined;
        return d;
      },
      py::arg("predictions"), py::arg("golds"), py::arg("two_way") = false,
      "Accuracy and macro F1 over canonicalized labels. two_way folds Refuted and "
      "NEI golds into NotSupported.");

  m.def(
      "verify_claim",
      [](const std::string& tables_json, const std::string& claim,
         const std::string& fixtures_dir, bool decompose) {
        nlohmann::json j = nlohmann::json::parse(tables_json);
        std::vector<Table> tables = tables_from_json(j.is_array() ? j : j.at("tables"));
        Gateway gateway(std::make_shared<MockBackend>(fixtures_dir));
        PipelineConfig pc;
        pc.decompose = decompose;
        VerdictReport report = verify_claim(gateway, tables, claim, pc);
        return report_to_json("", "", report).dump();
      },
      py::arg("tables_json"), py::arg("claim"), py::arg("fixtures_dir"),
      py::arg("decompose") = true,
      "Verify a claim against evidence tables (JSON array or {\"tables\": ...}) "
      "using canned responses from fixtures_dir. Returns the verdict report as a "
      "JSON string.");
}
