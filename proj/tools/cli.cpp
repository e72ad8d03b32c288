#include "cli.hpp"

#include "loadcomp/catalog.hpp"
#include "loadcomp/composition.hpp"
#include "loadcomp/error.hpp"
#include "loadcomp/profile.hpp"
#include "loadcomp/reconcile.hpp"
#include "loadcomp/report.hpp"
#include "loadcomp/synth.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace loadcomp::cli
{

namespace
{

using nlohmann::ordered_json;

constexpr const char* tool_version = "0.1.0";

struct RunConfig
{
  std::string format = "json";
  std::string out_path;
  std::string days_per_month = "30";
  std::string occupancy_path;
  bool full_precision = false;

  std::string catalog_path;
  bool builtin_paper = false;
  std::vector<std::string> profile_paths;
  std::string season;
  std::string granularity;
  int growth_from = 2;
  int growth_to = 6;
  std::optional<double> measured_kwh;
  std::string attribution_out;
  std::string pie_out;
};

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("error reading '" + path + "'");
  }
  return buf.str();
}

void write_file(const std::string& path, const std::string& content)
{
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  f << content;
  f.flush();
  if (!f) {
    throw IoError("error writing '" + path + "'");
  }
}

std::string iso_now()
{
  auto now = std::chrono::system_clock::now();
  auto t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

class Emitter
{
public:
  Emitter(const RunConfig& cfg, std::ostream& out, std::string command)
    : cfg_(cfg)
    , out_(out)
    , command_(std::move(command))
  {
  }

  /// Payload goes to --out (with a run-metadata sidecar) or to stdout.
  void payload(const std::string& text) const
  {
    if (cfg_.out_path.empty()) {
      out_ << text;
      return;
    }
    write_file(cfg_.out_path, text);
    ordered_json meta;
    meta["tool"] = "loadcomp";
    meta["version"] = tool_version;
    meta["command"] = command_;
    meta["format"] = cfg_.format;
    meta["generated_at"] = iso_now();
    write_file(cfg_.out_path + ".meta.json", meta.dump(2) + "\n");
  }

private:
  const RunConfig& cfg_;
  std::ostream& out_;
  std::string command_;
};

RenderOptions render_options(const RunConfig& cfg)
{
  RenderOptions opt;
  opt.full_precision = cfg.full_precision;
  return opt;
}

bool want_csv(const RunConfig& cfg)
{
  if (cfg.format == "csv") {
    return true;
  }
  if (cfg.format == "json") {
    return false;
  }
  throw InputError("unknown format '" + cfg.format + "' (expected csv or json)");
}

Catalog load_catalog(const RunConfig& cfg)
{
  if (cfg.builtin_paper == !cfg.catalog_path.empty()) {
    throw InputError("exactly one of --catalog or --builtin-paper is required");
  }
  if (cfg.builtin_paper) {
    return builtin_paper_catalog();
  }
  auto text = read_file(cfg.catalog_path);
  try {
    return parse_catalog(text, catalog_format_from_path(cfg.catalog_path));
  } catch (const InputError& e) {
    throw InputError(cfg.catalog_path + ": " + e.what());
  }
}

OccupancyCurve load_occupancy(const RunConfig& cfg)
{
  if (cfg.occupancy_path.empty()) {
    return OccupancyCurve::default_curve();
  }
  auto text = read_file(cfg.occupancy_path);
  try {
    return parse_occupancy(text);
  } catch (const InputError& e) {
    throw InputError(cfg.occupancy_path + ": " + e.what());
  }
}

LoadProfile load_profile(const RunConfig& cfg, const std::string& path)
{
  auto text = read_file(path);
  std::optional<Granularity> g;
  if (!cfg.granularity.empty()) {
    g = parse_granularity(cfg.granularity);
  }
  try {
    return parse_profile(text, g, std::filesystem::path(path).stem().string());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

double days_for(const RunConfig& cfg, Season season)
{
  if (cfg.days_per_month == "calendar") {
    return mean_calendar_month_days(season);
  }
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(cfg.days_per_month, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != cfg.days_per_month.size() || !(d >= 1.0) || !std::isfinite(d)) {
    throw InputError("--days-per-month must be a number >= 1 or 'calendar'");
  }
  return d;
}

std::vector<Season> seasons_for(const std::string& text, bool allow_both)
{
  if (allow_both && (text.empty() || text == "both")) {
    return {Season::Winter, Season::Summer};
  }
  if (text.empty()) {
    throw InputError("--season is required");
  }
  return {parse_season(text)};
}

// composition -------------------------------------------------------------

void cmd_composition(const RunConfig& cfg, const Emitter& emit)
{
  const bool csv = want_csv(cfg);
  const auto catalog = load_catalog(cfg);
  const auto seasons = seasons_for(cfg.season, true);
  const auto opt = render_options(cfg);

  std::vector<SeasonOutput> outputs;
  for (Season s : seasons) {
    auto table = seasonal_table(catalog, s, days_for(cfg, s));
    auto report = composition_shares(table);
    outputs.push_back({std::move(table), std::move(report)});
  }
  std::optional<SeasonPairReport> pair;
  if (seasons.size() == 2) {
    pair = season_pair_report(catalog);
  }

  if (!cfg.pie_out.empty()) {
    ordered_json pies;
    for (const auto& o : outputs) {
      pies[std::string(to_string(o.report.season))] = pie_json(o.report, opt);
    }
    write_file(cfg.pie_out, pies.dump(2) + "\n");
  }
  emit.payload(csv ? composition_csv(outputs, opt)
                   : composition_json(outputs, pair, opt).dump(2) + "\n");
}

// profile-stats -----------------------------------------------------------

ordered_json season_summary(const std::optional<LoadProfile>& p)
{
  if (!p) {
    return nullptr;
  }
  const auto powers = p->powers();
  double total = 0.0;
  double peak = 0.0;
  for (double v : powers) {
    total += v;
    peak = std::max(peak, v);
  }
  return {{"samples", powers.size()},
          {"mean_kw", total / static_cast<double>(powers.size())},
          {"peak_kw", peak}};
}

bool single_day(const LoadProfile& p)
{
  const auto& f = p.samples().front().time;
  for (const auto& s : p.samples()) {
    if (s.time.year != f.year || s.time.month != f.month || s.time.day != f.day) {
      return false;
    }
  }
  return true;
}

ordered_json profile_stats_json(const RunConfig& cfg, const LoadProfile& profile)
{
  ordered_json js;
  const auto norm = normalize(profile);
  js["label"] = profile.label();
  js["granularity"] = to_string(profile.granularity());
  js["samples"] = profile.size();
  js["peak_kw"] = norm.peak_kw;
  js["peak_average_ratio"] = peak_average_ratio(profile);

  if (profile.granularity() == Granularity::Hourly && single_day(profile)) {
    auto ext = daily_extrema(profile);
    js["daily_extrema"] = {{"peak_hour", ext.peak_hour}, {"trough_hour", ext.trough_hour}};
  } else {
    js["daily_extrema"] = nullptr;
  }

  auto split = seasonal_split(profile);
  js["seasonal_split"] = {{"winter", season_summary(split.winter)},
                          {"summer", season_summary(split.summer)}};

  if (profile.granularity() != Granularity::Hourly) {
    std::map<int, double> months;
    bool unique = true;
    for (const auto& s : profile.samples()) {
      unique = unique && months.emplace(s.time.month, s.power_kw).second;
    }
    auto growth = [&](int from, int to) -> ordered_json {
      try {
        return monthly_growth(profile, from, to);
      } catch (const InputError&) {
        return nullptr;
      }
    };
    if (unique) {
      js["growth"] = {{"from_month", cfg.growth_from},
                      {"to_month", cfg.growth_to},
                      {"percent", growth(cfg.growth_from, cfg.growth_to)}};
      auto mom = ordered_json::array();
      for (auto it = months.begin(); it != months.end() && std::next(it) != months.end(); ++it) {
        auto nx = std::next(it);
        mom.push_back(
          {{"from_month", it->first}, {"to_month", nx->first}, {"percent", growth(it->first, nx->first)}});
      }
      js["month_over_month"] = std::move(mom);
    }
  }

  auto series = ordered_json::array();
  for (const auto& s : norm.samples) {
    series.push_back({{"timestamp", format_timestamp(s.time)}, {"fraction", s.fraction}});
  }
  js["normalized"] = std::move(series);
  return js;
}

void cmd_profile_stats(const RunConfig& cfg, const Emitter& emit)
{
  const bool csv = want_csv(cfg);
  if (cfg.profile_paths.empty()) {
    throw InputError("--profile is required");
  }
  std::vector<LoadProfile> profiles;
  for (const auto& path : cfg.profile_paths) {
    profiles.push_back(load_profile(cfg, path));
  }

  if (csv) {
    std::ostringstream out;
    out << "label,timestamp,power_kw,fraction\n";
    for (const auto& p : profiles) {
      const auto norm = normalize(p);
      for (std::size_t i = 0; i < p.size(); ++i) {
        out << p.label() << ',' << format_timestamp(p.samples()[i].time) << ','
            << format_number(p.samples()[i].power_kw) << ','
            << format_number(norm.samples[i].fraction) << '\n';
      }
    }
    emit.payload(out.str());
    return;
  }

  ordered_json doc;
  auto arr = ordered_json::array();
  for (const auto& p : profiles) {
    arr.push_back(profile_stats_json(cfg, p));
  }
  doc["profiles"] = std::move(arr);
  emit.payload(doc.dump(2) + "\n");
}

// reconcile ---------------------------------------------------------------

void cmd_reconcile(const RunConfig& cfg, const Emitter& emit, std::ostream& err)
{
  const bool csv = want_csv(cfg);
  const auto catalog = load_catalog(cfg);
  const auto occupancy = load_occupancy(cfg);
  if (cfg.profile_paths.size() != 1) {
    throw InputError("reconcile takes exactly one --profile");
  }
  const auto measured = load_profile(cfg, cfg.profile_paths.front());
  normalize(measured);  // rejects an all-zero profile with "zero peak"

  const Season season = cfg.season.empty() ? season_of_month(measured.samples().front().time.month)
                                           : parse_season(cfg.season);
  const double days = days_for(cfg, season);
  const auto table = seasonal_table(catalog, season, days);
  const double measured_kwh =
    cfg.measured_kwh ? *cfg.measured_kwh : monthly_energy_from_day(measured, days);

  const auto result = scale_to_measured(table, measured_kwh);
  const auto attribution = disaggregate(measured, catalog, season, occupancy);
  const auto shares = composition_from_attribution(attribution);

  err << "scale_factor " << format_number(result.scale_factor) << "\n"
      << "relative_gap " << format_number(result.relative_gap) << "\n";
  if (result.gap_warning()) {
    err << "warning: bottom-up and measured energy differ by more than "
        << gap_warning_threshold * 100 << "%; the catalog may not represent this load\n";
  }

  if (!cfg.attribution_out.empty()) {
    write_file(cfg.attribution_out, attribution_csv(attribution));
  }
  emit.payload(csv ? attribution_csv(attribution)
                   : reconciliation_json(result, shares, render_options(cfg)).dump(2) + "\n");
}

// synth -------------------------------------------------------------------

void cmd_synth(const RunConfig& cfg, const Emitter& emit)
{
  const bool csv = want_csv(cfg);
  const auto catalog = load_catalog(cfg);
  const auto occupancy = load_occupancy(cfg);
  const Season season = seasons_for(cfg.season, false).front();
  const auto day = synth_household_day(catalog, season, occupancy);
  emit.payload(csv ? synth_csv(day) : synth_json(day).dump(2) + "\n");
}

// validate ----------------------------------------------------------------

bool cmd_validate(const RunConfig& cfg, const Emitter& emit)
{
  const bool csv = want_csv(cfg);
  std::vector<ApplianceSpec> rows;
  if (cfg.builtin_paper == !cfg.catalog_path.empty()) {
    throw InputError("exactly one of --catalog or --builtin-paper is required");
  }
  if (cfg.builtin_paper) {
    auto c = builtin_paper_catalog();
    rows.assign(c.entries().begin(), c.entries().end());
  } else {
    auto text = read_file(cfg.catalog_path);
    try {
      rows = parse_catalog_rows(text, catalog_format_from_path(cfg.catalog_path));
    } catch (const InputError& e) {
      throw InputError(cfg.catalog_path + ": " + e.what());
    }
  }

  struct Finding
  {
    std::size_t row;
    std::string activity;
    Violation violation;
  };
  std::vector<Finding> findings;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto name = canonical_activity_name(rows[i].activity);
    for (auto& v : validate_spec(rows[i])) {
      findings.push_back({i + 1, name, std::move(v)});
    }
    auto [it, fresh] = seen.emplace(name, i + 1);
    if (!fresh) {
      findings.push_back(
        {i + 1, name, {"activity", "duplicate of row " + std::to_string(it->second)}});
    }
  }

  if (csv) {
    std::ostringstream out;
    out << "row,activity,field,rule\n";
    for (const auto& f : findings) {
      out << f.row << ',' << '"' << f.activity << '"' << ',' << f.violation.field << ",\""
          << f.violation.rule << "\"\n";
    }
    emit.payload(out.str());
  } else {
    ordered_json doc;
    doc["valid"] = findings.empty();
    doc["entries"] = rows.size();
    auto arr = ordered_json::array();
    for (const auto& f : findings) {
      arr.push_back({{"row", f.row},
                     {"activity", f.activity},
                     {"field", f.violation.field},
                     {"rule", f.violation.rule}});
    }
    doc["violations"] = std::move(arr);
    emit.payload(doc.dump(2) + "\n");
  }
  return findings.empty();
}

void add_catalog_options(CLI::App* sub, RunConfig& cfg)
{
  sub->add_option("--catalog", cfg.catalog_path, "Catalog file (.csv or .json)");
  sub->add_flag("--builtin-paper", cfg.builtin_paper, "Use the built-in 15-activity survey catalog");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  RunConfig cfg;
  CLI::App app{"Residential load composition: bottom-up appliance energy, measured profile "
               "statistics and reconciliation",
               "loadcomp"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format: json or csv")
    ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out_path, "Write the payload here instead of stdout");
  app.add_option("--days-per-month", cfg.days_per_month,
                 "Days per month for monthly totals, or 'calendar'");
  app.add_option("--occupancy", cfg.occupancy_path, "Occupancy curve file (24 values)");
  app.add_flag("--full-precision", cfg.full_precision, "Do not round rendered values");

  auto* composition = app.add_subcommand("composition", "Seasonal energy table and composition shares");
  add_catalog_options(composition, cfg);
  composition->add_option("--season", cfg.season, "winter, summer or both (default)");
  composition->add_option("--pie-out", cfg.pie_out, "Also write pie-chart JSON here");

  auto* stats = app.add_subcommand("profile-stats", "Normalised series and summary statistics");
  stats->add_option("--profile", cfg.profile_paths, "Profile CSV (repeatable)");
  stats->add_option("--granularity", cfg.granularity, "hourly, monthly-average or monthly-peak");
  stats->add_option("--growth-from", cfg.growth_from, "Growth base month (1-12)")
    ->check(CLI::Range(1, 12));
  stats->add_option("--growth-to", cfg.growth_to, "Growth target month (1-12)")
    ->check(CLI::Range(1, 12));

  auto* reconcile = app.add_subcommand("reconcile", "Scale bottom-up energy to a measured day and attribute each hour");
  add_catalog_options(reconcile, cfg);
  reconcile->add_option("--profile", cfg.profile_paths, "Measured hourly day (CSV)");
  reconcile->add_option("--season", cfg.season, "winter or summer (default: from the profile date)");
  reconcile->add_option("--measured-kwh", cfg.measured_kwh, "Measured monthly energy override (kWh)");
  reconcile->add_option("--attribution-out", cfg.attribution_out, "Also write hour,activity,kw CSV here");

  auto* synth = app.add_subcommand("synth", "Synthesised 24-hour energy per activity");
  add_catalog_options(synth, cfg);
  synth->add_option("--season", cfg.season, "winter or summer")->required();

  auto* validate = app.add_subcommand("validate", "Check every catalog row and report all violations");
  add_catalog_options(validate, cfg);

  for (auto* sub : {composition, stats, reconcile, synth, validate}) {
    sub->fallthrough();
  }

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  auto* active = app.get_subcommands().front();
  std::string command;
  for (std::size_t i = 1; i < args.size(); ++i) {
    command += (i > 1 ? " " : "") + args[i];
  }
  Emitter emit(cfg, out, command);

  try {
    if (active == composition) {
      cmd_composition(cfg, emit);
    } else if (active == stats) {
      cmd_profile_stats(cfg, emit);
    } else if (active == reconcile) {
      cmd_reconcile(cfg, emit, err);
    } else if (active == synth) {
      cmd_synth(cfg, emit);
    } else if (active == validate) {
      if (!cmd_validate(cfg, emit)) {
        err << "error: catalog has invalid rows\n";
        return input_error;
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return io_error;
  }
  return ok;
}

} // namespace loadcomp::cli
