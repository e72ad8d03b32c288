#pragma once

#include "loadcomp/season.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loadcomp
{

/// How directly occupant behaviour drives an appliance's schedule.
enum class OperationClass
{
  Manual,
  SemiAuto,
  Auto,
};

/// Accepts "manual", "semi auto", "semi-auto", "auto" in any case.
OperationClass parse_operation(std::string_view text);
std::string_view to_string(OperationClass op);

/// One household activity with its bottom-up calculation parameters.
///
/// Energy per unit and day is (run_watts * run_fraction + idle_watts *
/// idle_fraction) * tou hours; household energy multiplies that by `units`.
struct ApplianceSpec
{
  std::string activity;
  SeasonValues<double> tou;  // hours/day, [0, 24]
  SeasonValues<long> units;  // count per household
  double run_watts = 0.0;
  double idle_watts = 0.0;
  double run_fraction = 1.0;
  double idle_fraction = 0.0;
  OperationClass operation = OperationClass::Manual;

  friend bool operator==(const ApplianceSpec&, const ApplianceSpec&) = default;
};

/// Tolerance on run_fraction + idle_fraction == 1 for binary floating point.
inline constexpr double fraction_sum_tolerance = 1e-12;

struct Violation
{
  std::string field;
  std::string rule;
};

/// Empty when the spec satisfies every invariant.
std::vector<Violation> validate_spec(const ApplianceSpec& spec);

/// Maps known spelling variants to the canonical activity name
/// ("Water Bump (Dynamo)", "Water Bumb" -> "Water pump"); other names are
/// returned trimmed and otherwise unchanged.
std::string canonical_activity_name(std::string_view name);

struct CatalogSource
{
  std::string origin;
  int year = 0;
};

/// Validated, immutable, ordered set of appliance specs with unique names.
class Catalog
{
public:
  /// Throws InputError on an empty list, duplicate names, or any spec
  /// that fails validate_spec.
  explicit Catalog(std::vector<ApplianceSpec> specs, CatalogSource source = {});

  std::span<const ApplianceSpec> entries() const { return specs_; }
  std::size_t size() const { return specs_.size(); }
  const ApplianceSpec& operator[](std::size_t i) const { return specs_[i]; }
  const CatalogSource& source() const { return source_; }

  /// Lookup by name, after alias canonicalisation.
  const ApplianceSpec* find(std::string_view activity) const;

  /// Source metadata is descriptive and does not take part in equality.
  friend bool operator==(const Catalog& a, const Catalog& b) { return a.specs_ == b.specs_; }

private:
  std::vector<ApplianceSpec> specs_;
  CatalogSource source_;
};

enum class CatalogFormat
{
  Csv,
  Json,
};

CatalogFormat catalog_format_from_path(std::string_view path);

/// Syntax-level parse only: every row becomes an ApplianceSpec, but the
/// semantic invariants are not checked. Used by `validate` to report all
/// violations at once.
std::vector<ApplianceSpec> parse_catalog_rows(std::string_view source, CatalogFormat format);

/// Full parse: rows, then per-row validation (errors name the 1-based data
/// row and the field), then catalog-level checks.
Catalog parse_catalog(std::string_view source, CatalogFormat format);

std::string serialize_catalog(const Catalog& catalog, CatalogFormat format);

/// The 15-activity household survey catalog, Eastern Province, 2016.
Catalog builtin_paper_catalog();

} // namespace loadcomp
