#include "loadcomp/catalog.hpp"
#include "loadcomp/error.hpp"

#include "support/generators.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

using namespace loadcomp;
using Catch::Matchers::ContainsSubstring;

namespace
{

const std::string header =
  "activity,tou_winter,tou_summer,units_winter,units_summer,run_watts,idle_watts,operation,"
  "run_fraction,idle_fraction\n";

bool has_rule(const std::vector<Violation>& v, std::string_view field, std::string_view text)
{
  for (const auto& x : v) {
    if (x.field == field && x.rule.find(text) != std::string::npos) {
      return true;
    }
  }
  return false;
}

} // namespace

TEST_CASE("operation classes parse case-insensitively", "[catalog]")
{
  CHECK(parse_operation("Manual") == OperationClass::Manual);
  CHECK(parse_operation("SEMI AUTO") == OperationClass::SemiAuto);
  CHECK(parse_operation("semi-auto") == OperationClass::SemiAuto);
  CHECK(parse_operation(" auto ") == OperationClass::Auto);
  CHECK_THROWS_AS(parse_operation("robotic"), InputError);
}

TEST_CASE("season mapping is total", "[catalog][season]")
{
  int winter = 0;
  for (int m = 1; m <= 12; ++m) {
    winter += season_of_month(m) == Season::Winter;
  }
  CHECK(winter == 5);
  for (int m : {10, 11, 12, 1, 2}) {
    CHECK(season_of_month(m) == Season::Winter);
  }
  for (int m = 3; m <= 9; ++m) {
    CHECK(season_of_month(m) == Season::Summer);
  }
  CHECK_THROWS_AS(season_of_month(0), InputError);
  CHECK_THROWS_AS(season_of_month(13), InputError);
  CHECK(mean_calendar_month_days(Season::Winter) == Catch::Approx(151.25 / 5));
  CHECK(mean_calendar_month_days(Season::Summer) == Catch::Approx(214.0 / 7));
}

TEST_CASE("parse_catalog reads the air conditioning row", "[catalog]")
{
  auto cat = parse_catalog(header + "Air conditioning,3,10,2,5,1800,100,Semi Auto,0.6,0.4\n",
                           CatalogFormat::Csv);
  REQUIRE(cat.size() == 1);
  const auto& ac = cat[0];
  CHECK(ac.activity == "Air conditioning");
  CHECK(ac.tou.winter == 3);
  CHECK(ac.tou.summer == 10);
  CHECK(ac.units.winter == 2);
  CHECK(ac.units.summer == 5);
  CHECK(ac.run_watts == 1800);
  CHECK(ac.idle_watts == 100);
  CHECK(ac.operation == OperationClass::SemiAuto);
  CHECK(ac.run_fraction == 0.6);
  CHECK(ac.idle_fraction == 0.4);
}

TEST_CASE("parse_catalog error paths", "[catalog]")
{
  SECTION("empty file")
  {
    CHECK_THROWS_WITH(parse_catalog("", CatalogFormat::Csv), ContainsSubstring("no entries"));
    CHECK_THROWS_WITH(parse_catalog(header, CatalogFormat::Csv), ContainsSubstring("no entries"));
    CHECK_THROWS_WITH(parse_catalog("[]", CatalogFormat::Json), ContainsSubstring("no entries"));
  }
  SECTION("fraction sum violation names the rule and the sum")
  {
    auto text = header + "Air conditioning,3,10,2,5,1800,100,Semi Auto,0.6,0.5\n";
    CHECK_THROWS_WITH(parse_catalog(text, CatalogFormat::Csv),
                      ContainsSubstring("run_fraction + idle_fraction must equal 1") &&
                        ContainsSubstring("sum 1.1") && ContainsSubstring("row 1"));
  }
  SECTION("ToU out of range")
  {
    auto text = header + "Lighting,7.3,25,50,50,10,0,Manual,1,0\n";
    CHECK_THROWS_WITH(parse_catalog(text, CatalogFormat::Csv),
                      ContainsSubstring("tou_summer") && ContainsSubstring("exceeds 24"));
  }
  SECTION("malformed field reports row and field")
  {
    auto text = header + "Lighting,7.3,7.5,50,50,10,0,Manual,1,0\nTV,abc,5.9,1,2,120,13,Manual,1,0\n";
    CHECK_THROWS_WITH(parse_catalog(text, CatalogFormat::Csv),
                      ContainsSubstring("row 2") && ContainsSubstring("tou_winter"));
  }
  SECTION("non-integer unit count")
  {
    auto text = header + "Lighting,7.3,7.5,50.5,50,10,0,Manual,1,0\n";
    CHECK_THROWS_WITH(parse_catalog(text, CatalogFormat::Csv), ContainsSubstring("units_winter"));
  }
  SECTION("duplicate activity, including via alias")
  {
    auto text = header + "Water Bump (Dynamo),1.5,2.1,1,1,250,0,Auto,1,0\n" +
                "Water Bumb,1.5,2.1,1,1,250,0,Auto,1,0\n";
    CHECK_THROWS_WITH(parse_catalog(text, CatalogFormat::Csv), ContainsSubstring("duplicate"));
  }
  SECTION("wrong field count")
  {
    auto text = header + "Lighting,7.3,7.5,50,50,10,0,Manual,1\n";
    CHECK_THROWS_WITH(parse_catalog(text, CatalogFormat::Csv), ContainsSubstring("expected 10"));
  }
  SECTION("missing column")
  {
    CHECK_THROWS_WITH(parse_catalog("activity,tou_winter\nx,1\n", CatalogFormat::Csv),
                      ContainsSubstring("missing column"));
  }
  SECTION("bad JSON")
  {
    CHECK_THROWS_AS(parse_catalog("[{", CatalogFormat::Json), InputError);
    CHECK_THROWS_WITH(parse_catalog(R"([{"activity":"x"}])", CatalogFormat::Json),
                      ContainsSubstring("missing"));
  }
}

TEST_CASE("pump aliases canonicalise", "[catalog]")
{
  CHECK(canonical_activity_name("Water Bump (Dynamo)") == "Water pump");
  CHECK(canonical_activity_name("water  bumb") == "Water pump");
  CHECK(canonical_activity_name("  Lighting ") == "Lighting");
  auto cat = builtin_paper_catalog();
  CHECK(cat.find("Water Bumb (Dynamo)") == cat.find("Water pump"));
  CHECK(cat.find("Water pump") != nullptr);
}

TEST_CASE("validate_spec rules", "[catalog]")
{
  auto heating = *builtin_paper_catalog().find("Heating (oil-filled)");
  CHECK(validate_spec(heating).empty());

  auto s = heating;
  s.run_fraction = 1;
  s.idle_fraction = 0;
  CHECK(validate_spec(s).empty());

  s = heating;
  s.tou.summer = 25;
  CHECK(has_rule(validate_spec(s), "tou_summer", "ToU exceeds 24 h/day"));

  s = heating;
  s.tou.winter = -1;
  CHECK(has_rule(validate_spec(s), "tou_winter", "negative"));

  s = heating;
  s.idle_watts = 2000;
  CHECK(has_rule(validate_spec(s), "run_watts", "below idle"));

  s = heating;
  s.units.winter = -1;
  CHECK(has_rule(validate_spec(s), "units_winter", "negative"));

  s = heating;
  s.run_fraction = 0.6;
  s.idle_fraction = 0.5;
  CHECK(has_rule(validate_spec(s), "idle_fraction", "run_fraction + idle_fraction must equal 1"));

  s = heating;
  s.tou.winter = std::nan("");
  CHECK_FALSE(validate_spec(s).empty());
}

TEST_CASE("builtin survey catalog", "[catalog]")
{
  auto cat = builtin_paper_catalog();
  REQUIRE(cat.size() == 15);
  CHECK(cat[0].activity == "Heating (oil-filled)");
  CHECK(cat[14].activity == "Gaming devices");

  const auto* wh = cat.find("Water heating");
  REQUIRE(wh);
  CHECK(wh->tou.winter == 14);
  CHECK(wh->tou.summer == 4.7);
  CHECK(wh->units.winter == 3);
  CHECK(wh->units.summer == 1);
  CHECK(wh->run_watts == 1500);
  CHECK(wh->idle_watts == 30);
  CHECK(wh->run_fraction == 0.3);
  CHECK(wh->operation == OperationClass::Auto);

  const auto* light = cat.find("Lighting");
  REQUIRE(light);
  CHECK(light->units.winter == 50);
  CHECK(light->units.summer == 50);
  CHECK(light->run_watts == 10);

  // Idle ratings kept as published even though run fraction 1 makes them inert.
  CHECK(cat.find("TV")->idle_watts == 13);
  CHECK(cat.find("PC")->idle_watts == 7.5);

  for (const auto& spec : cat.entries()) {
    INFO(spec.activity);
    CHECK(validate_spec(spec).empty());
    CHECK(std::abs(spec.run_fraction + spec.idle_fraction - 1.0) <= 1e-12);
  }
}

TEST_CASE("serialize then parse is the identity", "[catalog][property]")
{
  gen::Rng rng(20160601);
  for (int trial = 0; trial < 100; ++trial) {
    auto cat = gen::catalog(rng);
    for (auto fmt : {CatalogFormat::Csv, CatalogFormat::Json}) {
      CHECK(parse_catalog(serialize_catalog(cat, fmt), fmt) == cat);
    }
  }
  auto paper = builtin_paper_catalog();
  CHECK(parse_catalog(serialize_catalog(paper, CatalogFormat::Csv), CatalogFormat::Csv) == paper);
}

TEST_CASE("quoted CSV fields and CRLF", "[catalog]")
{
  auto text = std::string("activity,tou_winter,tou_summer,units_winter,units_summer,run_watts,"
                          "idle_watts,operation,run_fraction,idle_fraction\r\n") +
              "\"Washing, drying\",1.3,1.9,2,2,2000,0,Semi Auto,1,0\r\n\r\n";
  auto cat = parse_catalog(text, CatalogFormat::Csv);
  REQUIRE(cat.size() == 1);
  CHECK(cat[0].activity == "Washing, drying");
}

TEST_CASE("shipped catalog files match the builtin catalog", "[catalog]")
{
  auto read = [](const std::string& name) {
    std::ifstream in(std::string(LOADCOMP_DATA_DIR) + "/" + name);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  auto builtin = builtin_paper_catalog();
  CHECK(parse_catalog(read("household_survey_2016.csv"), CatalogFormat::Csv) == builtin);
  CHECK(parse_catalog(read("household_survey_2016.json"), CatalogFormat::Json) == builtin);
}
