#include "veritab/dataset.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "veritab/textnorm.hpp"

namespace veritab {

std::optional<DatasetFormat> dataset_format_from_name(const std::string& name) {
  std::string n = fold_text(trim(name));
  if (n == "feverous-jsonl" || n == "feverous") return DatasetFormat::FeverousJsonl;
  if (n == "tabfact-jsonl" || n == "tabfact") return DatasetFormat::TabfactJsonl;
  return std::nullopt;
}

std::string dataset_format_name(DatasetFormat format) {
  return format == DatasetFormat::FeverousJsonl ? "feverous-jsonl" : "tabfact-jsonl";
}

std::string canonical_label(const std::string& label) {
  std::string n = normalize_text(label);
  if (n == "supports" || n == "supported" || n == "entailed") return "Supported";
  if (n == "refutes" || n == "refuted") return "Refuted";
  if (n == "nei" || n == "not enough info" || n == "not enough information") return "NEI";
  if (n == "not supported" || n == "notsupported") return "NotSupported";
  return trim(label);
}

std::vector<Table> tables_from_json(const nlohmann::json& tables_json,
                                    std::optional<int> force_header_rows) {
  if (!tables_json.is_array() || tables_json.empty())
    throw std::invalid_argument("record lacks evidence tables");
  std::vector<Table> out;
  for (const auto& tj : tables_json) {
    std::vector<std::vector<std::string>> grid;
    for (const auto& row : tj.at("rows")) {
      std::vector<std::string> cells;
      for (const auto& cell : row)
        cells.push_back(cell.is_string() ? cell.get<std::string>() : cell.dump());
      grid.push_back(std::move(cells));
    }
    int header_rows =
        force_header_rows ? *force_header_rows : tj.value("header_row_count", 1);
    out.push_back(parse_table(tj.value("caption", std::string{}), grid, header_rows));
  }
  return out;
}

nlohmann::json tables_to_json(const std::vector<Table>& tables) {
  nlohmann::json out = nlohmann::json::array();
  for (const Table& t : tables) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
      nlohmann::json cells = nlohmann::json::array();
      for (const Cell& c : row) cells.push_back(c.raw);
      rows.push_back(std::move(cells));
    }
    out.push_back({{"caption", t.caption},
                   {"header_row_count", t.header_row_count},
                   {"rows", rows}});
  }
  return out;
}

ClaimRecord record_from_json(const nlohmann::json& j, DatasetFormat format) {
  ClaimRecord record;
  if (j.contains("id")) {
    record.id = j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump();
  }
  record.claim = j.at("claim").get<std::string>();
  if (trim(record.claim).empty()) throw std::invalid_argument("empty claim");
  record.label = canonical_label(j.value("label", std::string{}));
  record.tables = tables_from_json(
      j.at("tables"),
      format == DatasetFormat::TabfactJsonl ? std::optional<int>(1) : std::nullopt);

  if (j.contains("challenge") && j["challenge"].is_string()) {
    record.numerical_from_flag = true;
    record.numerical =
        fold_text(j["challenge"].get<std::string>()).find("numerical") != std::string::npos;
  } else {
    record.numerical = !scan_number_tokens(record.claim).empty();
  }
  return record;
}

Dataset load_dataset(const std::string& path, DatasetFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset: " + path);
  Dataset dataset;
  dataset.two_way = format == DatasetFormat::TabfactJsonl;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      ClaimRecord record = record_from_json(nlohmann::json::parse(line), format);
      if (record.id.empty()) record.id = std::to_string(line_no);
      dataset.records.push_back(std::move(record));
    } catch (const std::exception& e) {
      std::cerr << "warning: skipped malformed line " << line_no << " of " << path << ": "
                << e.what() << "\n";
      ++dataset.skipped;
    }
  }
  return dataset;
}

}  // namespace veritab
