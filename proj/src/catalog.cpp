#include "loadcomp/catalog.hpp"

#include "loadcomp/error.hpp"
#include "text.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace loadcomp
{

namespace
{

constexpr std::array<std::string_view, 10> csv_columns{
  "activity",     "tou_winter", "tou_summer", "units_winter", "units_summer",
  "run_watts",    "idle_watts", "operation",  "run_fraction", "idle_fraction",
};

std::string short_number(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string exact_number(double v)
{
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string where(std::size_t row, std::string_view field)
{
  return "row " + std::to_string(row) + ", field '" + std::string(field) + "'";
}

void check_row(const ApplianceSpec& spec, std::size_t row)
{
  auto violations = validate_spec(spec);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw InputError(where(row, v.field) + ": " + v.rule);
  }
}

} // namespace

OperationClass parse_operation(std::string_view text)
{
  auto t = detail::lower(detail::trim(text));
  if (t == "manual") {
    return OperationClass::Manual;
  }
  if (t == "semi auto" || t == "semi-auto") {
    return OperationClass::SemiAuto;
  }
  if (t == "auto") {
    return OperationClass::Auto;
  }
  throw InputError("unknown operation class '" + std::string(text) + "'");
}

std::string_view to_string(OperationClass op)
{
  switch (op) {
    case OperationClass::Manual:
      return "Manual";
    case OperationClass::SemiAuto:
      return "Semi Auto";
    case OperationClass::Auto:
      return "Auto";
  }
  return "Manual";
}

std::vector<Violation> validate_spec(const ApplianceSpec& spec)
{
  std::vector<Violation> out;
  auto add = [&out](std::string field, std::string rule) {
    out.push_back({std::move(field), std::move(rule)});
  };

  if (detail::trim(spec.activity).empty()) {
    add("activity", "activity name is empty");
  }
  for (Season s : all_seasons) {
    std::string field = "tou_" + std::string(to_string(s));
    double t = spec.tou[s];
    if (!std::isfinite(t)) {
      add(field, "ToU is not a finite number");
    } else if (t < 0.0) {
      add(field, "ToU is negative");
    } else if (t > 24.0) {
      add(field, "ToU exceeds 24 h/day");
    }
    if (spec.units[s] < 0) {
      add("units_" + std::string(to_string(s)), "unit count is negative");
    }
  }
  if (!std::isfinite(spec.run_watts) || !std::isfinite(spec.idle_watts)) {
    add("run_watts", "wattage is not a finite number");
  } else {
    if (spec.idle_watts < 0.0) {
      add("idle_watts", "idle wattage is negative");
    }
    if (spec.run_watts < spec.idle_watts) {
      add("run_watts", "run wattage is below idle wattage");
    }
  }
  if (!std::isfinite(spec.run_fraction) || spec.run_fraction < 0.0 || spec.run_fraction > 1.0) {
    add("run_fraction", "run fraction outside [0, 1]");
  }
  if (!std::isfinite(spec.idle_fraction) || spec.idle_fraction < 0.0 ||
      spec.idle_fraction > 1.0) {
    add("idle_fraction", "idle fraction outside [0, 1]");
  }
  double sum = spec.run_fraction + spec.idle_fraction;
  if (!(std::abs(sum - 1.0) <= fraction_sum_tolerance)) {
    add("idle_fraction",
        "fraction rule violated: run_fraction + idle_fraction must equal 1 (sum " +
          short_number(sum) + ")");
  }
  return out;
}

std::string canonical_activity_name(std::string_view name)
{
  auto trimmed = detail::trim(name);
  std::string collapsed;
  for (char c : detail::lower(trimmed)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!collapsed.empty() && collapsed.back() != ' ') {
        collapsed.push_back(' ');
      }
    } else {
      collapsed.push_back(c);
    }
  }
  static const std::set<std::string> pump_aliases{
    "water pump",          "water pump (dynamo)", "water bump",
    "water bump (dynamo)", "water bumb",          "water bumb (dynamo)",
  };
  if (pump_aliases.contains(collapsed)) {
    return "Water pump";
  }
  return std::string(trimmed);
}

Catalog::Catalog(std::vector<ApplianceSpec> specs, CatalogSource source)
  : specs_(std::move(specs))
  , source_(std::move(source))
{
  if (specs_.empty()) {
    throw InputError("catalog has no entries");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < specs_.size(); ++i) {
    auto& spec = specs_[i];
    spec.activity = canonical_activity_name(spec.activity);
    check_row(spec, i + 1);
    if (!seen.insert(detail::lower(spec.activity)).second) {
      throw InputError(where(i + 1, "activity") + ": duplicate activity name '" +
                       spec.activity + "'");
    }
  }
}

const ApplianceSpec* Catalog::find(std::string_view activity) const
{
  auto key = detail::lower(canonical_activity_name(activity));
  for (const auto& spec : specs_) {
    if (detail::lower(spec.activity) == key) {
      return &spec;
    }
  }
  return nullptr;
}

CatalogFormat catalog_format_from_path(std::string_view path)
{
  auto p = detail::lower(path);
  if (p.ends_with(".json")) {
    return CatalogFormat::Json;
  }
  return CatalogFormat::Csv;
}

namespace
{

std::vector<ApplianceSpec> rows_from_csv(std::string_view source)
{
  auto records = detail::read_csv(source);
  if (records.empty()) {
    throw InputError("catalog has no entries");
  }

  std::map<std::string, std::size_t> index;
  const auto& header = records.front();
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    auto name = detail::lower(header.fields[i]);
    if (std::find(csv_columns.begin(), csv_columns.end(), name) == csv_columns.end()) {
      throw InputError("catalog header: unknown column '" + header.fields[i] + "'");
    }
    if (!index.emplace(name, i).second) {
      throw InputError("catalog header: duplicate column '" + header.fields[i] + "'");
    }
  }
  for (auto col : csv_columns) {
    if (!index.contains(std::string(col))) {
      throw InputError("catalog header: missing column '" + std::string(col) + "'");
    }
  }
  if (records.size() == 1) {
    throw InputError("catalog has no entries");
  }

  std::vector<ApplianceSpec> rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.fields.size()) {
      throw InputError("row " + std::to_string(r) + " (line " + std::to_string(rec.line) +
                       "): expected " + std::to_string(header.fields.size()) + " fields, got " +
                       std::to_string(rec.fields.size()));
    }
    auto field = [&](std::string_view col) -> const std::string& {
      return rec.fields[index.at(std::string(col))];
    };
    auto number = [&](std::string_view col) {
      auto v = detail::to_double(field(col));
      if (!v) {
        throw InputError(where(r, col) + ": not a number: '" + field(col) + "'");
      }
      return *v;
    };
    auto count = [&](std::string_view col) {
      auto v = detail::to_long(field(col));
      if (!v) {
        throw InputError(where(r, col) + ": not an integer: '" + field(col) + "'");
      }
      return *v;
    };

    ApplianceSpec spec;
    spec.activity = field("activity");
    spec.tou.winter = number("tou_winter");
    spec.tou.summer = number("tou_summer");
    spec.units.winter = count("units_winter");
    spec.units.summer = count("units_summer");
    spec.run_watts = number("run_watts");
    spec.idle_watts = number("idle_watts");
    try {
      spec.operation = parse_operation(field("operation"));
    } catch (const InputError& e) {
      throw InputError(where(r, "operation") + ": " + e.what());
    }
    spec.run_fraction = number("run_fraction");
    spec.idle_fraction = number("idle_fraction");
    rows.push_back(std::move(spec));
  }
  return rows;
}

std::vector<ApplianceSpec> rows_from_json(std::string_view source)
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("catalog JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw InputError("catalog JSON: top level must be an array of objects");
  }
  if (doc.empty()) {
    throw InputError("catalog has no entries");
  }

  std::vector<ApplianceSpec> rows;
  std::size_t r = 0;
  for (const auto& obj : doc) {
    ++r;
    if (!obj.is_object()) {
      throw InputError("row " + std::to_string(r) + ": not an object");
    }
    for (const auto& [key, value] : obj.items()) {
      if (std::find(csv_columns.begin(), csv_columns.end(), key) == csv_columns.end()) {
        throw InputError(where(r, key) + ": unknown field");
      }
    }
    auto get = [&](std::string_view col) -> const nlohmann::json& {
      auto it = obj.find(std::string(col));
      if (it == obj.end()) {
        throw InputError(where(r, col) + ": missing");
      }
      return *it;
    };
    auto number = [&](std::string_view col) {
      const auto& v = get(col);
      if (!v.is_number()) {
        throw InputError(where(r, col) + ": not a number");
      }
      return v.get<double>();
    };
    auto count = [&](std::string_view col) {
      const auto& v = get(col);
      if (v.is_number_integer()) {
        return v.get<long>();
      }
      if (v.is_number_float()) {
        double d = v.get<double>();
        if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 1e15) {
          return static_cast<long>(d);
        }
      }
      throw InputError(where(r, col) + ": not an integer");
    };
    auto text = [&](std::string_view col) {
      const auto& v = get(col);
      if (!v.is_string()) {
        throw InputError(where(r, col) + ": not a string");
      }
      return v.get<std::string>();
    };

    ApplianceSpec spec;
    spec.activity = text("activity");
    spec.tou.winter = number("tou_winter");
    spec.tou.summer = number("tou_summer");
    spec.units.winter = count("units_winter");
    spec.units.summer = count("units_summer");
    spec.run_watts = number("run_watts");
    spec.idle_watts = number("idle_watts");
    try {
      spec.operation = parse_operation(text("operation"));
    } catch (const InputError& e) {
      throw InputError(where(r, "operation") + ": " + e.what());
    }
    spec.run_fraction = number("run_fraction");
    spec.idle_fraction = number("idle_fraction");
    rows.push_back(std::move(spec));
  }
  return rows;
}

} // namespace

std::vector<ApplianceSpec> parse_catalog_rows(std::string_view source, CatalogFormat format)
{
  if (detail::trim(source).empty()) {
    throw InputError("catalog has no entries");
  }
  return format == CatalogFormat::Json ? rows_from_json(source) : rows_from_csv(source);
}

Catalog parse_catalog(std::string_view source, CatalogFormat format)
{
  auto rows = parse_catalog_rows(source, format);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_row(rows[i], i + 1);
  }
  return Catalog(std::move(rows));
}

std::string serialize_catalog(const Catalog& catalog, CatalogFormat format)
{
  if (format == CatalogFormat::Json) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& s : catalog.entries()) {
      nlohmann::ordered_json obj;
      obj["activity"] = s.activity;
      obj["tou_winter"] = s.tou.winter;
      obj["tou_summer"] = s.tou.summer;
      obj["units_winter"] = s.units.winter;
      obj["units_summer"] = s.units.summer;
      obj["run_watts"] = s.run_watts;
      obj["idle_watts"] = s.idle_watts;
      obj["operation"] = to_string(s.operation);
      obj["run_fraction"] = s.run_fraction;
      obj["idle_fraction"] = s.idle_fraction;
      doc.push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  for (std::size_t i = 0; i < csv_columns.size(); ++i) {
    out << (i ? "," : "") << csv_columns[i];
  }
  out << '\n';
  for (const auto& s : catalog.entries()) {
    out << detail::csv_field(s.activity) << ',' << exact_number(s.tou.winter) << ','
        << exact_number(s.tou.summer) << ',' << s.units.winter << ',' << s.units.summer << ','
        << exact_number(s.run_watts) << ',' << exact_number(s.idle_watts) << ','
        << to_string(s.operation) << ',' << exact_number(s.run_fraction) << ','
        << exact_number(s.idle_fraction) << '\n';
  }
  return out.str();
}

Catalog builtin_paper_catalog()
{
  using Op = OperationClass;
  auto row = [](std::string name, double tou_w, double tou_s, long units_w, long units_s,
                double run_w, double idle_w, Op op, double run_f, double idle_f) {
    ApplianceSpec s;
    s.activity = std::move(name);
    s.tou = {tou_w, tou_s};
    s.units = {units_w, units_s};
    s.run_watts = run_w;
    s.idle_watts = idle_w;
    s.operation = op;
    s.run_fraction = run_f;
    s.idle_fraction = idle_f;
    return s;
  };

  // TV, PC and gaming idle ratings never contribute: their run fraction is 1.
  std::vector<ApplianceSpec> specs{
    row("Heating (oil-filled)", 8, 1.5, 2, 1, 1500, 0, Op::SemiAuto, 0.5, 0.5),
    row("Air conditioning", 3, 10, 2, 5, 1800, 100, Op::SemiAuto, 0.6, 0.4),
    row("Water heating", 14, 4.7, 3, 1, 1500, 30, Op::Auto, 0.3, 0.7),
    row("Water coolers", 10, 17, 1, 1, 250, 10, Op::Auto, 0.5, 0.5),
    row("Water pump", 1.5, 2.1, 1, 1, 250, 0, Op::Auto, 1, 0),
    row("Washing & Drying", 1.3, 1.9, 2, 2, 2000, 0, Op::SemiAuto, 1, 0),
    row("Ironing", 1, 1.8, 1, 1, 1000, 0, Op::Manual, 1, 0),
    row("Vacuum cleaning", 1, 1.3, 1, 1, 1000, 0, Op::Manual, 1, 0),
    row("Cooking", 1.6, 1.4, 1, 1, 2150, 0, Op::SemiAuto, 1, 0),
    row("Electric kettle", 1.3, 2, 1, 1, 1800, 0, Op::Manual, 1, 0),
    row("Lighting", 7.3, 7.5, 50, 50, 10, 0, Op::Manual, 1, 0),
    row("Food preservation", 24, 24, 2, 2, 100, 0, Op::Auto, 1, 0),
    row("TV", 5.3, 5.9, 1, 2, 120, 13, Op::Manual, 1, 0),
    row("PC", 2.1, 2.6, 2, 2, 150, 7.5, Op::Manual, 1, 0),
    row("Gaming devices", 2.6, 3, 4, 4, 30, 7.5, Op::Manual, 1, 0),
  };
  return Catalog(std::move(specs), CatalogSource{"GAS household survey, Eastern Province", 2016});
}

} // namespace loadcomp
