#include "veritab/tables.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "veritab/textnorm.hpp"

namespace veritab {

namespace {

bool is_empty_marker(const std::string& t) {
  return t.empty() || t == "-" || t == "--" || t == "\xe2\x80\x94";
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<NumberToken> parse_number_token(const std::string& token) {
  if (token.empty()) return std::nullopt;
  std::string s = token;
  NumberToken out;
  if (s.back() == '%') {
    out.percent = true;
    s.pop_back();
  } else if (s.back() == '+') {
    out.plus_suffix = true;
    s.pop_back();
  }
  if (s.empty()) return std::nullopt;
  std::string body = s;
  bool neg = false;
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  std::string frac;
  size_t dot = body.find('.');
  if (dot != std::string::npos) {
    frac = body.substr(dot + 1);
    body = body.substr(0, dot);
    if (frac.empty() || !all_digits(frac)) return std::nullopt;
    if (frac.find('.') != std::string::npos) return std::nullopt;
  }
  // Integer part: plain digits, or well-formed comma groups of three.
  std::string digits;
  if (body.find(',') != std::string::npos) {
    std::vector<std::string> groups;
    std::string g;
    for (char c : body) {
      if (c == ',') {
        groups.push_back(g);
        g.clear();
      } else {
        g += c;
      }
    }
    groups.push_back(g);
    if (groups.size() < 2) return std::nullopt;
    if (groups[0].empty() || groups[0].size() > 3 || !all_digits(groups[0])) return std::nullopt;
    for (size_t i = 1; i < groups.size(); ++i)
      if (groups[i].size() != 3 || !all_digits(groups[i])) return std::nullopt;
    for (auto& gr : groups) digits += gr;
    out.grouped = true;
  } else {
    if (!all_digits(body)) return std::nullopt;
    digits = body;
  }
  std::string plain = (neg ? "-" : "") + digits + (frac.empty() ? "" : "." + frac);
  auto v = Num::parse_decimal(plain);
  if (!v) return std::nullopt;
  out.value = *v;
  out.decimals = static_cast<int>(frac.size());
  return out;
}

std::vector<NumberToken> scan_number_tokens(const std::string& text) {
  std::vector<NumberToken> out;
  std::istringstream iss(text);
  std::string tok;
  while (iss >> tok) {
    size_t b = 0, e = tok.size();
    while (b < e && !std::isdigit(static_cast<unsigned char>(tok[b])) && tok[b] != '-' &&
           tok[b] != '+')
      ++b;
    while (e > b && !std::isdigit(static_cast<unsigned char>(tok[e - 1])) && tok[e - 1] != '%' &&
           tok[e - 1] != '+')
      --e;
    if (b >= e) continue;
    auto n = parse_number_token(tok.substr(b, e - b));
    if (n) out.push_back(*n);
  }
  return out;
}

Table parse_table(const std::string& caption,
                  const std::vector<std::vector<std::string>>& grid, int header_row_count) {
  Table t;
  t.caption = caption;
  size_t width = 0;
  for (auto& row : grid) width = std::max(width, row.size());
  for (auto& row : grid) {
    std::vector<Cell> cells;
    for (size_t i = 0; i < width; ++i) {
      Cell c;
      c.raw = i < row.size() ? row[i] : "";
      std::string body = trim(c.raw);
      if (is_empty_marker(body)) {
        c.type = CellType::Empty;
      } else if (auto n = parse_number_token(body)) {
        c.type = n->percent ? CellType::Percentage : CellType::Number;
        c.value = n->value;
      } else {
        c.type = CellType::Text;
      }
      cells.push_back(std::move(c));
    }
    t.rows.push_back(std::move(cells));
  }
  int max_header = static_cast<int>(t.rows.size());
  t.header_row_count = std::clamp(header_row_count, 0, max_header);
  return t;
}

std::string linearize(const Table& table) {
  std::string out;
  bool first = true;
  if (!table.caption.empty()) {
    out = table.caption;
    first = false;
  }
  for (auto& row : table.rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) line += " | ";
      line += row[i].raw;
    }
    if (!first) out += "\n";
    out += line;
    first = false;
  }
  return out;
}

NumberInventory NumberInventory::build(const std::vector<Table>& tables) {
  NumberInventory inv;
  for (auto& t : tables) {
    for (auto& n : scan_number_tokens(t.caption)) inv.keys_.insert(n.value.key());
    for (auto& row : t.rows)
      for (auto& cell : row)
        for (auto& n : scan_number_tokens(cell.raw)) inv.keys_.insert(n.value.key());
  }
  return inv;
}

bool NumberInventory::permits(const Num& v) const { return keys_.count(v.key()) > 0; }

NumberInventory extract_numbers(const std::vector<Table>& tables) {
  return NumberInventory::build(tables);
}

}  // namespace veritab
