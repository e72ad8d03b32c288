#include "loadcomp/report.hpp"

#include "text.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace loadcomp
{

double round_half_up(double value, int decimals)
{
  const double scale = std::pow(10.0, decimals);
  const double scaled = value * scale;
  // Nudge by a few ulps of the scaled value so 0.05-style ties that land
  // just below .5 in binary still round up.
  const double nudge = std::abs(scaled) * 4 * std::numeric_limits<double>::epsilon();
  double r = std::floor(scaled + 0.5 + nudge) / scale;
  return r == 0.0 ? 0.0 : r;
}

std::string format_number(double value)
{
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

namespace
{

double render(double v, int decimals, const RenderOptions& opt)
{
  return opt.full_precision ? v : round_half_up(v, decimals);
}

} // namespace

std::string composition_csv(const std::vector<SeasonOutput>& seasons, const RenderOptions& opt)
{
  std::ostringstream out;
  out << "activity,season,per_unit_wh_day,household_wh_day,share_pct\n";
  for (const auto& s : seasons) {
    for (std::size_t i = 0; i < s.table.rows.size(); ++i) {
      const auto& row = s.table.rows[i];
      out << detail::csv_field(row.activity) << ',' << to_string(row.season) << ','
          << format_number(render(row.per_unit_daily, opt.energy_decimals, opt)) << ','
          << format_number(render(row.household_daily, opt.energy_decimals, opt)) << ','
          << format_number(render(s.report.shares[i].percent, opt.share_decimals, opt)) << '\n';
    }
  }
  return out.str();
}

nlohmann::ordered_json pie_json(const CompositionReport& report, const RenderOptions& opt)
{
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : report.shares) {
    arr.push_back({{"label", s.activity}, {"percent", render(s.percent, opt.share_decimals, opt)}});
  }
  return arr;
}

nlohmann::ordered_json composition_json(const std::vector<SeasonOutput>& seasons,
                                        const std::optional<SeasonPairReport>& pair,
                                        const RenderOptions& opt)
{
  nlohmann::ordered_json doc;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : seasons) {
    nlohmann::ordered_json js;
    js["season"] = to_string(s.table.season);
    js["days_per_month"] = s.table.days_per_month;
    js["daily_total_wh"] = render(s.table.daily_total, opt.energy_decimals, opt);
    js["monthly_total_kwh"] = render(s.table.monthly_total, opt.monthly_decimals, opt);
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < s.table.rows.size(); ++i) {
      const auto& row = s.table.rows[i];
      rows.push_back({
        {"activity", row.activity},
        {"per_unit_wh_day", render(row.per_unit_daily, opt.energy_decimals, opt)},
        {"household_wh_day", render(row.household_daily, opt.energy_decimals, opt)},
        {"share_pct", render(s.report.shares[i].percent, opt.share_decimals, opt)},
      });
    }
    js["rows"] = std::move(rows);
    js["pie"] = pie_json(s.report, opt);
    arr.push_back(std::move(js));
  }
  doc["seasons"] = std::move(arr);
  if (pair) {
    nlohmann::ordered_json deltas;
    for (const auto& share : pair->winter.shares) {
      deltas[share.activity] = render(pair->deltas.at(share.activity), opt.share_decimals, opt);
    }
    doc["deltas_pp"] = std::move(deltas);
  }
  return doc;
}

std::string synth_csv(const HouseholdDay& day)
{
  std::ostringstream out;
  out << "hour,activity,wh\n";
  for (std::size_t h = 0; h < hours_per_day; ++h) {
    for (const auto& a : day.activities) {
      out << h << ',' << detail::csv_field(a.activity) << ',' << format_number(a.wh[h]) << '\n';
    }
  }
  return out.str();
}

nlohmann::ordered_json synth_json(const HouseholdDay& day)
{
  nlohmann::ordered_json doc;
  doc["season"] = to_string(day.season);
  auto acts = nlohmann::ordered_json::array();
  for (const auto& a : day.activities) {
    acts.push_back({{"activity", a.activity}, {"wh", a.wh}});
  }
  doc["activities"] = std::move(acts);
  doc["total_wh"] = day.total_wh;
  doc["grand_total_wh"] = day.grand_total_wh();
  return doc;
}

std::string attribution_csv(const HourlyAttribution& attribution)
{
  std::ostringstream out;
  out << "hour,activity,kw\n";
  for (std::size_t r = 0; r < attribution.kw.size(); ++r) {
    for (std::size_t c = 0; c < attribution.activities.size(); ++c) {
      out << attribution.hours[r] << ',' << detail::csv_field(attribution.activities[c]) << ','
          << format_number(attribution.kw[r][c]) << '\n';
    }
  }
  return out.str();
}

nlohmann::ordered_json reconciliation_json(const ReconciliationResult& result,
                                           const CompositionReport& attributed,
                                           const RenderOptions& opt)
{
  nlohmann::ordered_json doc;
  doc["season"] = to_string(result.adjusted_table.season);
  doc["scale_factor"] = result.scale_factor;
  doc["relative_gap"] = result.relative_gap;
  doc["gap_warning"] = result.gap_warning();
  doc["measured_energy_kwh"] = render(result.measured_energy, opt.monthly_decimals, opt);
  doc["bottom_up_energy_kwh"] = render(result.bottom_up_energy, opt.monthly_decimals, opt);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : result.adjusted_table.rows) {
    rows.push_back({
      {"activity", row.activity},
      {"per_unit_wh_day", render(row.per_unit_daily, opt.energy_decimals, opt)},
      {"household_wh_day", render(row.household_daily, opt.energy_decimals, opt)},
    });
  }
  doc["adjusted_rows"] = std::move(rows);
  doc["adjusted_daily_total_wh"] =
    render(result.adjusted_table.daily_total, opt.energy_decimals, opt);
  doc["adjusted_monthly_total_kwh"] =
    render(result.adjusted_table.monthly_total, opt.monthly_decimals, opt);
  auto shares = nlohmann::ordered_json::array();
  for (const auto& s : attributed.shares) {
    shares.push_back(
      {{"activity", s.activity}, {"share_pct", render(s.percent, opt.share_decimals, opt)}});
  }
  doc["attributed_shares"] = std::move(shares);
  return doc;
}

} // namespace loadcomp
