#include "loadcomp/composition.hpp"
#include "loadcomp/error.hpp"

#include "support/generators.hpp"
#include "support/household_survey.hpp"
#include "support/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace loadcomp;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

oracle::Row oracle_row(const ApplianceSpec& s, Season season)
{
  return {s.tou[season], s.units[season], s.run_watts, s.idle_watts, s.run_fraction,
          s.idle_fraction};
}

ApplianceSpec single(OperationClass op = OperationClass::Auto)
{
  ApplianceSpec s;
  s.activity = "only";
  s.tou = {4, 6};
  s.units = {1, 2};
  s.run_watts = 500;
  s.idle_watts = 20;
  s.run_fraction = 0.7;
  s.idle_fraction = 0.3;
  s.operation = op;
  return s;
}

} // namespace

TEST_CASE("per-device energy", "[composition]")
{
  auto cat = builtin_paper_catalog();
  const auto& ac = *cat.find("Air conditioning");
  CHECK(device_daily_energy(ac, Season::Summer) == 11200);
  CHECK(household_device_energy(ac, Season::Summer) == 56000);

  const auto& wh = *cat.find("Water heating");
  // (1500*0.3 + 30*0.7) * 14 by hand
  CHECK_THAT(device_daily_energy(wh, Season::Winter), WithinRel(6594.0, 1e-12));
  CHECK_THAT(household_device_energy(wh, Season::Winter), WithinRel(19782.0, 1e-12));

  CHECK(household_device_energy(*cat.find("Heating (oil-filled)"), Season::Winter) == 12000);

  auto zero = ac;
  zero.tou.summer = 0;
  CHECK(device_daily_energy(zero, Season::Summer) == 0);
  zero = ac;
  zero.units.summer = 0;
  CHECK(household_device_energy(zero, Season::Summer) == 0);
}

TEST_CASE("seasonal table reproduces the published table", "[composition]")
{
  auto cat = builtin_paper_catalog();
  auto winter = seasonal_table(cat, Season::Winter, 30);
  auto summer = seasonal_table(cat, Season::Summer, 30);
  REQUIRE(winter.rows.size() == 15);
  for (std::size_t i = 0; i < 15; ++i) {
    INFO(survey::household_wh[i].activity);
    CHECK(winter.rows[i].activity == survey::household_wh[i].activity);
    CHECK_THAT(winter.rows[i].household_daily, WithinRel(survey::household_wh[i].winter_wh, 1e-12));
    CHECK_THAT(summer.rows[i].household_daily, WithinRel(survey::household_wh[i].summer_wh, 1e-12));
  }
  CHECK_THAT(winter.daily_total, WithinRel(survey::winter_daily_wh, 1e-12));
  CHECK_THAT(summer.daily_total, WithinRel(survey::summer_daily_wh, 1e-12));
  CHECK_THAT(winter.monthly_total, WithinAbs(survey::winter_monthly_kwh, 0.01));
  CHECK_THAT(summer.monthly_total, WithinAbs(survey::summer_monthly_kwh, 0.01));
  CHECK_THAT(winter.monthly_total, WithinAbs(winter.daily_total * 30 / 1000, 1e-9));

  CHECK_THROWS_AS(seasonal_table(cat, Season::Winter, 0.5), InputError);
  auto cal = seasonal_table(cat, Season::Winter, mean_calendar_month_days(Season::Winter));
  CHECK_THAT(cal.monthly_total, WithinRel(63185.0 * 30.25 / 1000, 1e-12));
}

TEST_CASE("composition shares", "[composition]")
{
  auto cat = builtin_paper_catalog();
  auto summer = composition_shares(cat, Season::Summer);
  auto winter = composition_shares(cat, Season::Winter);

  // 56000 / 90489.7, 31782 / 63185, 3650 / 63185, 3750 / 90489.7, 6720 / 63185
  CHECK_THAT(summer.share("Air conditioning"), WithinAbs(61.886, 0.001));
  CHECK_THAT(winter.share("Heating (oil-filled)") + winter.share("Water heating"),
             WithinAbs(50.300, 0.001));
  CHECK_THAT(winter.share("Lighting"), WithinAbs(5.777, 0.001));
  CHECK_THAT(summer.share("Lighting"), WithinAbs(4.144, 0.001));
  CHECK_THAT(winter.share("Air conditioning"), WithinAbs(10.635, 0.001));
  CHECK_THROWS_AS(summer.share("Sauna"), InputError);

  auto one = Catalog({single()});
  CHECK(composition_shares(one, Season::Summer).share("only") == 100.0);

  auto dead = single();
  dead.tou = {0, 0};
  CHECK_THROWS_WITH(composition_shares(Catalog({dead}), Season::Winter),
                    Catch::Matchers::ContainsSubstring("empty composition basis"));
}

TEST_CASE("season pair report", "[composition]")
{
  auto pair = season_pair_report(builtin_paper_catalog());
  CHECK_THAT(pair.deltas.at("Air conditioning"),
             WithinAbs(pair.summer.share("Air conditioning") - pair.winter.share("Air conditioning"),
                       1e-12));
  CHECK(pair.deltas.size() == 15);

  auto s = single();
  s.tou = {5, 5};
  s.units = {3, 3};
  auto t = single();
  t.activity = "other";
  t.tou = {2, 2};
  t.units = {1, 1};
  auto sym = season_pair_report(Catalog({s, t}));
  for (const auto& [name, delta] : sym.deltas) {
    CHECK(delta == 0.0);
  }
}

TEST_CASE("composition properties on random catalogs", "[composition][property]")
{
  gen::Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    auto cat = gen::catalog(rng);
    for (Season season : all_seasons) {
      auto table = seasonal_table(cat, season);
      auto report = composition_shares(table);

      double sum = 0.0;
      for (const auto& s : report.shares) {
        CHECK(s.percent >= 0.0);
        sum += s.percent;
      }
      CHECK_THAT(sum, WithinAbs(100.0, 1e-9));

      // oracle equivalence
      std::vector<oracle::Row> rows;
      for (std::size_t i = 0; i < cat.size(); ++i) {
        rows.push_back(oracle_row(cat[i], season));
        CHECK(oracle::relative_error(oracle::household_wh(rows.back()),
                                     table.rows[i].household_daily) <= 1e-9);
      }
      CHECK(oracle::relative_error(oracle::daily_total(rows), table.daily_total) <= 1e-9);

      // scale invariance of shares under a common wattage factor
      const double k = gen::uniform(rng, 0.01, 100);
      std::vector<ApplianceSpec> scaled(cat.entries().begin(), cat.entries().end());
      for (auto& s : scaled) {
        s.run_watts *= k;
        s.idle_watts *= k;
      }
      auto scaled_report = composition_shares(Catalog(scaled), season);
      for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK_THAT(scaled_report.shares[i].percent, WithinAbs(report.shares[i].percent, 1e-9));
      }

      // linearity in tou and units
      const auto& first = cat[0];
      auto doubled = first;
      doubled.tou[season] = first.tou[season] / 2;
      CHECK_THAT(device_daily_energy(doubled, season) * 2,
                 WithinRel(device_daily_energy(first, season), 1e-12));
      doubled = first;
      doubled.units[season] = first.units[season] * 3;
      CHECK_THAT(household_device_energy(doubled, season),
                 WithinRel(3 * household_device_energy(first, season), 1e-12));
    }
  }
}

TEST_CASE("raising one activity's ToU raises only its share", "[composition][property]")
{
  gen::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto cat = gen::catalog(rng);
    const Season season = gen::integer(rng, 0, 1) ? Season::Summer : Season::Winter;
    const auto pick = static_cast<std::size_t>(gen::integer(rng, 0, static_cast<long>(cat.size()) - 1));
    std::vector<ApplianceSpec> specs(cat.entries().begin(), cat.entries().end());
    specs[pick].tou[season] = gen::uniform(rng, specs[pick].tou[season], 24);

    auto before = composition_shares(cat, season);
    auto after = composition_shares(Catalog(specs), season);
    for (std::size_t i = 0; i < specs.size(); ++i) {
      if (i == pick) {
        CHECK(after.shares[i].percent >= before.shares[i].percent - 1e-12);
      } else {
        CHECK(after.shares[i].percent <= before.shares[i].percent + 1e-12);
      }
    }
  }
}
