#pragma once

// Labeled claim datasets: JSONL records carrying a claim, a gold label, and
// the evidence tables. The tabfact format forces single header rows and a
// two-way label space.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "veritab/tables.hpp"

namespace veritab {

enum class DatasetFormat { FeverousJsonl, TabfactJsonl };

std::optional<DatasetFormat> dataset_format_from_name(const std::string& name);
std::string dataset_format_name(DatasetFormat format);

struct ClaimRecord {
  std::string id;
  std::string claim;
  std::string label;  // canonical: Supported / Refuted / NEI / NotSupported
  // Numerical-reasoning membership: the dataset's own challenge flag when
  // present, otherwise numeral detection on the claim text.
  bool numerical = false;
  bool numerical_from_flag = false;
  std::vector<Table> tables;
};

struct Dataset {
  std::vector<ClaimRecord> records;
  bool two_way = false;
  size_t skipped = 0;  // malformed lines dropped with a warning
};

// Accepts the common label surfaces (SUPPORTS/Supported, REFUTES/Refuted,
// NEI/"NOT ENOUGH INFO", "NOT SUPPORTED") and canonicalizes them; anything
// else is returned trimmed as its own class.
std::string canonical_label(const std::string& label);

// [{"caption", "header_row_count", "rows": [[cell, ...], ...]}, ...];
// force_header_rows overrides the per-table count (tabfact mode).
std::vector<Table> tables_from_json(const nlohmann::json& tables_json,
                                    std::optional<int> force_header_rows = std::nullopt);
nlohmann::json tables_to_json(const std::vector<Table>& tables);

// One record: {"id", "claim", "label", "tables": [{"caption",
// "header_row_count", "rows": [[cell, ...], ...]}], "challenge"?}. Throws
// nlohmann::json exceptions or std::invalid_argument on malformed records.
ClaimRecord record_from_json(const nlohmann::json& j, DatasetFormat format);

Dataset load_dataset(const std::string& path, DatasetFormat format);

}  // namespace veritab
