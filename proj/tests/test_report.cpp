#include "loadcomp/report.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace loadcomp;

TEST_CASE("round_half_up", "[report]")
{
  CHECK(round_half_up(2213.7000000000003, 1) == 2213.7);
  CHECK(round_half_up(2714.691, 2) == 2714.69);
  CHECK(round_half_up(1895.55, 2) == 1895.55);
  CHECK(round_half_up(0.05, 1) == 0.1);
  CHECK(round_half_up(0.15, 1) == 0.2);
  CHECK(round_half_up(2.675, 2) == 2.68);
  CHECK(round_half_up(-0.25, 1) == -0.2);
  CHECK(round_half_up(61.886, 0) == 62.0);
  CHECK(round_half_up(-0.04, 1) == 0.0);
}

TEST_CASE("format_number is shortest round-trip", "[report]")
{
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(56000) == "56000");
  CHECK(std::stod(format_number(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("composition CSV schema", "[report]")
{
  auto cat = builtin_paper_catalog();
  auto table = seasonal_table(cat, Season::Summer);
  std::vector<SeasonOutput> out{{table, composition_shares(table)}};
  auto csv = composition_csv(out, {});
  CHECK(csv.rfind("activity,season,per_unit_wh_day,household_wh_day,share_pct\n", 0) == 0);
  CHECK(csv.find("Air conditioning,summer,11200,56000,61.9\n") != std::string::npos);
  CHECK(csv.find("Water heating,summer,2213.7,2213.7,2.4\n") != std::string::npos);

  auto pie = pie_json(out[0].report, {});
  REQUIRE(pie.size() == 15);
  CHECK(pie[1]["label"] == "Air conditioning");
  CHECK(pie[1]["percent"] == 61.9);
}
