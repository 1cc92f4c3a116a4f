#include <stdexcept>

#include "doctest.h"
#include "nilsemi/output.hpp"

using namespace nilsemi;

namespace {

OutputRecord rec(std::string kind, std::uint32_t n, char const* value) {
  return {std::move(kind), n, ExactInt(value), std::nullopt};
}

}  // namespace

TEST_CASE("csv records") {
  CHECK(format_output({rec("iso", 3, "1")}, OutputFormat::Csv) ==
        "kind,n,value\niso,3,1\n");
  CHECK(format_output({}, OutputFormat::Csv) == "kind,n,value\n");
}

TEST_CASE("json values are strings") {
  auto const text = format_output({rec("iso-anti", 10, "12417282095522918811")},
                                  OutputFormat::Json);
  CHECK(text.find("\"value\": \"12417282095522918811\"") != std::string::npos);
  CHECK(text.find("\"n\": 10") != std::string::npos);
}

TEST_CASE("plain output is aligned") {
  auto const text =
      format_output({rec("iso", 3, "1"), rec("iso", 10, "12418001011")},
                    OutputFormat::Plain);
  CHECK(text ==
        "kind   n        value\n"
        "iso    3            1\n"
        "iso   10  12418001011\n");
}

TEST_CASE("round trips through csv and json") {
  std::vector<OutputRecord> const records{
      rec("equality", 15,
          "21161142058393218934452937125066025227051934318133813002153750760"
          "0962468633024"),
      rec("comm-iso", 3, "1"), rec("self-dual", 7, "19605")};
  for (auto format : {OutputFormat::Csv, OutputFormat::Json}) {
    CHECK(parse_output(format_output(records, format), format) == records);
  }
  auto with_parts = rec("iso", 6, "4671");
  with_parts.breakdown =
      std::vector<std::pair<std::uint32_t, ExactInt>>{{2, 4575}, {3, 95}, {4, 1}};
  CHECK(parse_output(format_output({with_parts}, OutputFormat::Json),
                     OutputFormat::Json) == std::vector{with_parts});
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_output("iso,3,1\n", OutputFormat::Csv),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_output("kind,n,value\niso,3\n", OutputFormat::Csv),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_output("kind,n,value\niso,3,1e5\n", OutputFormat::Csv),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_output(R"([{"kind":"iso","n":3,"value":1}])", OutputFormat::Json),
      std::invalid_argument);
  CHECK_THROWS_AS(parse_output("{", OutputFormat::Json), std::invalid_argument);
  CHECK_THROWS_AS(parse_output("iso 3 1", OutputFormat::Plain),
                  std::invalid_argument);
}

TEST_CASE("strict decimal parsing") {
  CHECK(parse_decimal("0") == 0);
  CHECK(parse_decimal("1234567890123456789012345") ==
        ExactInt("1234567890123456789012345"));
  for (char const* bad : {"", "-1", "+1", "01", "1.0", " 1", "0x10"}) {
    CHECK_THROWS_AS(parse_decimal(bad), std::invalid_argument);
  }
}

TEST_CASE("format names") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("plain") == OutputFormat::Plain);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("tables") {
  std::vector<TableRow> const rows{{3, {6, 6}}, {4, {180, 84}}};
  CHECK(format_table({"equality", "comm-equality"}, rows, OutputFormat::Csv) ==
        "n,equality,comm-equality\n3,6,6\n4,180,84\n");
  auto const json =
      format_table({"equality", "comm-equality"}, rows, OutputFormat::Json);
  CHECK(json.find("\"comm-equality\": \"84\"") != std::string::npos);
}

TEST_CASE("records from count results") {
  auto const r = count(CountKind::Iso, 5);
  auto const plain = make_record(r, false);
  CHECK(plain.kind == "iso");
  CHECK(plain.value == 118);
  CHECK_FALSE(plain.breakdown.has_value());
  auto const full = make_record(r, true);
  REQUIRE(full.breakdown.has_value());
  CHECK(full.breakdown->size() == r.per_m.size());
}
