#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqlines/frames/line_set.hpp"

namespace eqlines::construct {

using exact::Surd;
using frames::LineSet;

// One block copy. map[j] is the 1-based ambient coordinate of block column
// j + 1; an empty optional leaves that column unplaced. A non-empty
// magnitudes[j] replaces |entry| in that column while keeping its sign.
struct PlanItem {
  std::string block;
  std::vector<std::optional<std::size_t>> map;
  std::vector<std::optional<Surd>> magnitudes;  // empty or map.size()

  friend bool operator==(const PlanItem&, const PlanItem&) = default;
};

struct PlacementPlan {
  std::size_t ambient_n = 0;
  std::vector<PlanItem> items;

  friend bool operator==(const PlacementPlan&, const PlacementPlan&) = default;
};

// {"ambient_n": int, "items": [{"block": id, "map": [int|null, ...],
//  "magnitudes": [surd|null, ...]}]}; raises exact::ParseError.
PlacementPlan plan_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PlacementPlan& p);

// Looks up a block by id; nullopt when unknown.
using BlockResolver = std::function<std::optional<LineSet>(const std::string&)>;

enum class DiagnosticKind {
  empty_plan,
  unknown_block,
  map_length,
  coordinate_out_of_range,
  non_injective_map,
  unused_coordinate,
  magnitude_length,
  bad_magnitude,
  unplaced_column,
};
std::string_view to_string(DiagnosticKind k);

struct Diagnostic {
  DiagnosticKind kind;
  // Structural errors block apply_plan; the rest are warnings.
  bool structural = true;
  std::optional<std::size_t> item;  // 1-based
  std::string message;
};

struct Overlap {
  std::size_t a = 0, b = 0;  // 1-based items, a < b
  std::vector<std::size_t> shared;
};

struct PlanReport {
  std::vector<Diagnostic> diagnostics;
  // Every item pair, including pairs with no shared coordinate.
  std::vector<Overlap> overlaps;
  bool ok() const;
};

PlanReport validate_plan(const PlacementPlan& p, const BlockResolver& resolve);

class PlanError : public std::runtime_error {
 public:
  PlanError(const std::string& what, std::vector<Diagnostic> d)
      : std::runtime_error(what), diagnostics(std::move(d)) {}
  std::vector<Diagnostic> diagnostics;
};

// Embeds every block row into R^ambient_n, stacking rows in item order.
// Raises PlanError when validate_plan reports a structural error.
LineSet apply_plan(const PlacementPlan& p, const BlockResolver& resolve);

nlohmann::json to_json(const PlanReport& r);

}  // namespace eqlines::construct
