// Regenerates the bundled end-to-end fixtures: two fully worked claims with
// canned backend responses keyed by prompt hash.  Run from the repo root (or
// pass the output directory) after changing any prompt template; the tool
// replays both claims through the pipeline and refuses to write fixtures that
// no longer reproduce the expected proofs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "veritab/dataset.hpp"
#include "veritab/gateway.hpp"
#include "veritab/pipeline.hpp"
#include "veritab/tables.hpp"

using namespace veritab;

namespace {

struct GoldenCase {
  std::string id;
  std::string claim;
  std::string label;
  std::vector<Table> tables;
};

GoldenCase delegates_case() {
  GoldenCase c;
  c.id = "golden-delegates";
  c.claim =
      "John McCain won 16 delegates during the 2008 Washington Republican presidential "
      "primary, which is eight more than Mike Huckabee won.";
  c.label = "SUPPORTS";
  c.tables.push_back(parse_table(
      "2008 United States presidential election in Washington (state). "
      "Caucuses Republican caucuses and primary",
      {{"Candidate", "State delegate", "Percentage", "Delegates", "Counties carried"},
       {"John McCain", "3,228", "25.9%", "16", "11"},
       {"Mike Huckabee", "2,959", "23.52%", "8", "11"}}));
  return c;
}

GoldenCase shareholders_case() {
  GoldenCase c;
  c.id = "golden-shareholders";
  c.claim =
      "Asiacom Philippine, Inc. stands as the major shareholder of Globe Telecom, "
      "with 50.85% of total shares.";
  c.label = "SUPPORTS";
  c.tables.push_back(parse_table(
      "Globe Telecom. Ownership.",
      {{"Major Shareholder", "% of Total", "Common Shares", "Preferred Shares"},
       {"Ayala Corporation", "13.20%", "41,157,276", "—"},
       {"SingTel Group", "20.10%", "62,646,487", "—"},
       {"Asiacom Philippines, Inc.", "50.85%", "—", "158,515,016"}}));
  return c;
}

void add_fixtures(Gateway& render, MockBackend& mock) {
  GoldenCase a = delegates_case();
  std::string ev_a = evidence_text(a.tables);
  const std::string a_sub1 =
      "John McCain won 16 delegates during the 2008 Washington Republican presidential "
      "primary.";
  const std::string a_sub2 =
      "Mike Huckabee won eight fewer delegates than John McCain at the 2008 Washington "
      "Republican presidential primary.";

  mock.add(render.render(PromptRole::Decompose, {{"evidence", ev_a}, {"claim", a.claim}}),
           "1. " + a_sub1 + " 2. " + a_sub2);

  const std::string a_q1 =
      "How many delegates did John McCain win during the 2008 Washington Republican "
      "presidential primary?";
  mock.add(render.render(PromptRole::QuestionGen, {{"evidence", ev_a}, {"claim", a_sub1}}),
           "1. " + a_q1 + " 16 delegates");
  mock.add(render.render(PromptRole::QuestionAnswer,
                         {{"evidence", ev_a}, {"span", "16 delegates"}, {"question", a_q1}}),
           "Extraction: John McCain won 16 delegates in the 2008 Washington Republican "
           "presidential primary.\n"
           "Compute: No computation is required.\n"
           "Answer: COPY 16");

  const std::string a_q2 =
      "How many fewer delegates did Mike Huckabee win than John McCain at the 2008 "
      "Washington Republican presidential primary?";
  mock.add(render.render(PromptRole::QuestionGen, {{"evidence", ev_a}, {"claim", a_sub2}}),
           "1. " + a_q2 + " eight");
  mock.add(render.render(PromptRole::QuestionAnswer,
                         {{"evidence", ev_a}, {"span", "eight"}, {"question", a_q2}}),
           "Extraction: Mike Huckabee won 8 delegates and John McCain won 16 delegates in "
           "the 2008 Washington Republican presidential primary.\n"
           "Compute: Comparing 8 - 16 = -8\n"
           "Answer: COMP -8");

  GoldenCase b = shareholders_case();
  std::string ev_b = evidence_text(b.tables);
  const std::string b_sub1 =
      "Asiacom Philippine, Inc. stands as the major shareholder of Globe Telecom.";
  const std::string b_sub2 = "Asiacom Philippine, Inc. has 50.85% of total shares.";

  mock.add(render.render(PromptRole::Decompose, {{"evidence", ev_b}, {"claim", b.claim}}),
           "1. " + b_sub1 + " 2. " + b_sub2);

  const std::string b_q1 = "Who is the major shareholder of Globe Telecom?";
  const std::string b_list = "Ayala Corporation, SingTel Group, and Asiacom Philippines, Inc.";
  mock.add(render.render(PromptRole::QuestionGen, {{"evidence", ev_b}, {"claim", b_sub1}}),
           "1. " + b_q1 + " Asiacom Philippine, Inc");
  mock.add(render.render(PromptRole::QuestionAnswer,
                         {{"evidence", ev_b},
                          {"span", "Asiacom Philippine, Inc"},
                          {"question", b_q1}}),
           "Extraction: " + b_list + " are major shareholders of Globe Telecom.\n"
           "Compute: No computation is required.\n"
           "Answer: FILTER " + b_list);

  const std::string b_q2 =
      "What percentage of total shares does Asiacom Philippine, Inc. have?";
  mock.add(render.render(PromptRole::QuestionGen, {{"evidence", ev_b}, {"claim", b_sub2}}),
           "1. " + b_q2 + " 50.85%");
  mock.add(render.render(PromptRole::QuestionAnswer,
                         {{"evidence", ev_b}, {"span", "50.85%"}, {"question", b_q2}}),
           "Extraction: Asiacom Philippines, Inc. has 50.85% of total shares.\n"
           "Compute: No computation is required.\n"
           "Answer: FILTER 50.85%");

  // Relation queries the lexical tiers cannot settle.  Queries for spans that
  // stay unresolved on purpose (so the merged candidate wins selection) have
  // no canned response.
  mock.add(render.render(
               PromptRole::NatOpQuery,
               {{"evidence", "FILTER " + b_list},
                {"span", "Asiacom Philippine, Inc. stands as the major shareholder"}}),
           "Forward Entailment");
  mock.add(render.render(PromptRole::NatOpQuery,
                         {{"evidence", "Asiacom Philippines, Inc. has 50.85% of total shares."},
                          {"span", "Asiacom Philippine, Inc. has"}}),
           "Equivalence");
}

int replay(const GoldenCase& c, const std::string& fixtures_dir) {
  auto backend = std::make_shared<MockBackend>(fixtures_dir);
  Gateway gateway(backend);
  PipelineConfig config;
  VerdictReport report = verify_claim(gateway, c.tables, c.claim, config);
  std::cout << c.id << ": " << verdict_name(report.verdict)
            << (report.execution_found ? "" : " (no execution)") << "\n";
  for (const Proof& proof : report.proofs) {
    std::cout << "  subclaim: " << proof.subclaim << " -> " << verdict_name(proof.verdict)
              << "\n";
    for (const ProofStep& s : proof.steps)
      std::cout << "    [" << natop_code(s.op) << "] " << s.claim_span << " | " << s.answer
                << "\n";
  }
  return report.verdict == Verdict::Supported && report.execution_found ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_dir = argc > 1 ? argv[1] : "data";
  std::string fixtures_dir = out_dir + "/golden_fixtures";
  std::filesystem::create_directories(fixtures_dir);

  MockBackend mock;
  {
    Gateway render(std::make_shared<MockBackend>());
    add_fixtures(render, mock);
  }
  mock.save(fixtures_dir);
  std::cout << "wrote " << mock.size() << " fixtures to " << fixtures_dir << "\n";

  std::vector<GoldenCase> cases = {delegates_case(), shareholders_case()};
  std::ofstream traces(out_dir + "/golden_traces.jsonl");
  for (const GoldenCase& c : cases) {
    nlohmann::json j{{"id", c.id},
                     {"claim", c.claim},
                     {"label", c.label},
                     {"tables", tables_to_json(c.tables)}};
    traces << j.dump() << "\n";
  }
  traces.close();
  std::cout << "wrote " << out_dir << "/golden_traces.jsonl\n";

  int rc = 0;
  for (const GoldenCase& c : cases) rc |= replay(c, fixtures_dir);
  if (rc) std::cerr << "replay did not reproduce the expected verdicts\n";
  return rc;
}
