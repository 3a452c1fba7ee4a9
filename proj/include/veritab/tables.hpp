#pragma once

// Evidence tables: typed cells, linearization for prompts, and the number
// inventory used to validate extracted evidence.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "veritab/num.hpp"

namespace veritab {

enum class CellType { Number, Percentage, Text, Empty };

struct Cell {
  std::string raw;
  CellType type = CellType::Text;
  std::optional<Num> value;  // set for Number and Percentage
};

struct Table {
  std::string caption;
  std::vector<std::vector<Cell>> rows;  // ragged rows are right-padded
  int header_row_count = 1;
};

// A parsed numeric token: value plus surface facts needed for re-rendering
// and probe mutation.
struct NumberToken {
  Num value;
  bool percent = false;
  bool grouped = false;      // contained thousands separators
  int decimals = 0;          // fractional digits in the surface form
  bool plus_suffix = false;  // trailing '+', an at-least reading
};

// Strict decimal grammar: optional sign, digits with optional well-formed
// comma groups, optional fraction, optional '%' or trailing '+'. Returns
// nullopt for anything else ("12,23" fails the grouping rule).
std::optional<NumberToken> parse_number_token(const std::string& token);

// Scans free text for numeric tokens under the same grammar, stripping
// surrounding punctuation ("(2011)" yields 2011, "12,238." yields 12238).
std::vector<NumberToken> scan_number_tokens(const std::string& text);

// Grid of raw strings -> typed table. Empty markers: "", "-", "--", "—".
Table parse_table(const std::string& caption,
                  const std::vector<std::vector<std::string>>& grid,
                  int header_row_count = 1);

// Caption line (when non-empty) followed by one line per row, cells joined
// with " | ".
std::string linearize(const Table& table);

class NumberInventory {
 public:
  // Deduplicated numeric values from every cell token of every table;
  // captions are scanned too since they are part of the evidence surface.
  static NumberInventory build(const std::vector<Table>& tables);

  bool permits(const Num& v) const;
  const std::set<std::string>& values() const { return keys_; }
  size_t size() const { return keys_.size(); }

 private:
  std::set<std::string> keys_;  // canonical renderings, exact values
};

NumberInventory extract_numbers(const std::vector<Table>& tables);

}  // namespace veritab
