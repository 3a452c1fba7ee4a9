#include <set>

#include "doctest.h"
#include "municipal.hpp"
#include "veritab/tables.hpp"

using namespace veritab;

TEST_CASE("number token grammar") {
  auto t = parse_number_token("12,238");
  REQUIRE(t.has_value());
  CHECK(t->value == Num(12238));
  CHECK(t->grouped);
  CHECK(t->decimals == 0);
  CHECK_FALSE(t->percent);

  t = parse_number_token("25.9%");
  REQUIRE(t.has_value());
  CHECK(t->value == Num(mpq_class(259, 10)));
  CHECK(t->percent);
  CHECK(t->decimals == 1);

  t = parse_number_token("50.85%");
  REQUIRE(t.has_value());
  CHECK(t->decimals == 2);

  t = parse_number_token("2+");
  REQUIRE(t.has_value());
  CHECK(t->value == Num(2));
  CHECK(t->plus_suffix);

  t = parse_number_token("-8");
  REQUIRE(t.has_value());
  CHECK(t->value == Num(-8));

  t = parse_number_token("158,515,016");
  REQUIRE(t.has_value());
  CHECK(t->value == Num(158515016));

  CHECK_FALSE(parse_number_token("12,23").has_value());
  CHECK_FALSE(parse_number_token("1,2345").has_value());
  CHECK_FALSE(parse_number_token("").has_value());
  CHECK_FALSE(parse_number_token("abc").has_value());
  CHECK_FALSE(parse_number_token("12..5").has_value());
}

TEST_CASE("number scan strips surrounding punctuation") {
  auto tokens = scan_number_tokens("(2011)");
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0].value == Num(2011));

  tokens = scan_number_tokens("a total of 12,238.");
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0].value == Num(12238));

  tokens = scan_number_tokens("3,945 + 1,126 + 1,363 + 5,804");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[3].value == Num(5804));

  CHECK(scan_number_tokens("no numbers here").empty());
}

TEST_CASE("table parsing types cells") {
  Table t = municipal::table();
  CHECK(t.header_row_count == 1);
  REQUIRE(t.rows.size() == 5);
  CHECK(t.rows[1][0].type == CellType::Text);
  CHECK(t.rows[1][1].type == CellType::Number);
  REQUIRE(t.rows[1][1].value.has_value());
  CHECK(*t.rows[1][1].value == Num(4374));
  CHECK(*t.rows[1][2].value == Num(3945));
}

TEST_CASE("percentage and empty cells") {
  Table t = parse_table("Ownership.", {{"Holder", "% of Total", "Shares"},
                                       {"Asiacom Philippines, Inc.", "50.85%", "—"},
                                       {"SingTel Group", "20.10%", "-"}});
  CHECK(t.rows[1][1].type == CellType::Percentage);
  REQUIRE(t.rows[1][1].value.has_value());
  CHECK(*t.rows[1][1].value == Num(mpq_class(5085, 100)));
  CHECK(t.rows[1][2].type == CellType::Empty);
  CHECK(t.rows[2][2].type == CellType::Empty);
}

TEST_CASE("ragged rows are right padded") {
  Table t = parse_table("", {{"a", "b", "c"}, {"1", "2"}});
  REQUIRE(t.rows[1].size() == 3);
  CHECK(t.rows[1][2].type == CellType::Empty);
}

TEST_CASE("linearization") {
  Table t = municipal::table();
  std::string text = linearize(t);
  CHECK(text.find("Municipalities in the comarca of Ortegal.\n") == 0);
  CHECK(text.find("Cariño | 4,374 | 3,945") != std::string::npos);
  CHECK(text.find("Municipality | 2011 | 2018") != std::string::npos);

  Table bare = parse_table("", {{"x"}, {"1"}});
  CHECK(linearize(bare).find("x\n1") == 0);
}

TEST_CASE("number inventory holds exactly the table numbers") {
  NumberInventory inv = NumberInventory::build({municipal::table()});
  const long long expected[] = {2011, 2018, 4374, 3945, 1304, 1126, 1541, 1363, 6697, 5804};
  CHECK(inv.size() == 10);
  for (long long v : expected) CHECK(inv.permits(Num(v)));
  CHECK_FALSE(inv.permits(Num(9999)));
  CHECK_FALSE(inv.permits(Num(12238)));
  CHECK_FALSE(inv.permits(Num(3)));
}

TEST_CASE("inventory scans captions and percent cells") {
  Table t = parse_table("Results of the 2008 primary.",
                        {{"Candidate", "Percentage", "Delegates"},
                         {"John McCain", "25.9%", "16"},
                         {"Mike Huckabee", "23.52%", "8"}});
  NumberInventory inv = NumberInventory::build({t});
  CHECK(inv.permits(Num(2008)));
  CHECK(inv.permits(Num(16)));
  CHECK(inv.permits(Num(8)));
  CHECK(inv.permits(Num(mpq_class(259, 10))));
  CHECK_FALSE(inv.permits(Num(2012)));
}
