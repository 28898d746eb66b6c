#include "eqlines/construct/plan.hpp"

#include <algorithm>
#include <set>

#include "eqlines/exact/json.hpp"

namespace eqlines::construct {

using exact::ParseError;
using nlohmann::json;

namespace {

std::size_t non_negative(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

PlacementPlan plan_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("plan must be a JSON object");
  if (!j.contains("ambient_n")) throw ParseError("plan needs ambient_n");
  if (!j.contains("items") || !j.at("items").is_array()) throw ParseError("plan needs an items array");
  PlacementPlan p;
  p.ambient_n = non_negative(j.at("ambient_n"), "ambient_n");
  for (const auto& it : j.at("items")) {
    if (!it.is_object() || !it.contains("block") || !it.at("block").is_string())
      throw ParseError("plan item needs a block id");
    if (!it.contains("map") || !it.at("map").is_array()) throw ParseError("plan item needs a map array");
    PlanItem item;
    item.block = it.at("block").get<std::string>();
    for (const auto& c : it.at("map")) {
      if (c.is_null()) {
        item.map.emplace_back();
      } else {
        item.map.emplace_back(non_negative(c, "map coordinate"));
      }
    }
    if (it.contains("magnitudes")) {
      if (!it.at("magnitudes").is_array()) throw ParseError("magnitudes must be an array");
      for (const auto& m : it.at("magnitudes")) {
        if (m.is_null()) {
          item.magnitudes.emplace_back();
        } else {
          item.magnitudes.emplace_back(exact::surd_from_json(m));
        }
      }
    }
    p.items.push_back(std::move(item));
  }
  return p;
}

json to_json(const PlacementPlan& p) {
  json items = json::array();
  for (const auto& it : p.items) {
    json map = json::array();
    for (const auto& c : it.map) map.push_back(c ? json(*c) : json(nullptr));
    json o = {{"block", it.block}, {"map", map}};
    if (!it.magnitudes.empty()) {
      json mags = json::array();
      for (const auto& m : it.magnitudes) mags.push_back(m ? exact::to_json(*m) : json(nullptr));
      o["magnitudes"] = mags;
    }
    items.push_back(std::move(o));
  }
  return {{"ambient_n", p.ambient_n}, {"items", items}};
}

std::string_view to_string(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::empty_plan: return "empty-plan";
    case DiagnosticKind::unknown_block: return "unknown-block";
    case DiagnosticKind::map_length: return "map-length";
    case DiagnosticKind::coordinate_out_of_range: return "coordinate-out-of-range";
    case DiagnosticKind::non_injective_map: return "non-injective-map";
    case DiagnosticKind::unused_coordinate: return "unused-coordinate";
    case DiagnosticKind::magnitude_length: return "magnitude-length";
    case DiagnosticKind::bad_magnitude: return "bad-magnitude";
    case DiagnosticKind::unplaced_column: return "unplaced-column";
  }
  return "";
}

bool PlanReport::ok() const {
  return std::none_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) { return d.structural; });
}

PlanReport validate_plan(const PlacementPlan& p, const BlockResolver& resolve) {
  PlanReport rep;
  auto add = [&](DiagnosticKind k, std::optional<std::size_t> item, std::string msg, bool structural = true) {
    rep.diagnostics.push_back({k, structural, item, std::move(msg)});
  };
  if (p.items.empty()) add(DiagnosticKind::empty_plan, std::nullopt, "plan has no items");
  if (p.ambient_n == 0) add(DiagnosticKind::coordinate_out_of_range, std::nullopt, "ambient_n must be at least 1");

  std::vector<bool> used(p.ambient_n + 1, false);
  std::vector<std::set<std::size_t>> placed(p.items.size());
  for (std::size_t idx = 0; idx < p.items.size(); ++idx) {
    const auto& it = p.items[idx];
    const std::size_t label = idx + 1;
    auto block = resolve(it.block);
    if (!block) {
      add(DiagnosticKind::unknown_block, label, "unknown block '" + it.block + "'");
    } else if (block->n() != it.map.size()) {
      add(DiagnosticKind::map_length, label,
          "block '" + it.block + "' has " + std::to_string(block->n()) + " columns but the map has " +
              std::to_string(it.map.size()));
    }
    if (!it.magnitudes.empty()) {
      if (it.magnitudes.size() != it.map.size())
        add(DiagnosticKind::magnitude_length, label, "magnitudes and map differ in length");
      for (const auto& m : it.magnitudes) {
        if (m && m->sign() <= 0) add(DiagnosticKind::bad_magnitude, label, "magnitude override must be positive");
      }
    }
    for (std::size_t j = 0; j < it.map.size(); ++j) {
      const auto& c = it.map[j];
      if (!c) {
        add(DiagnosticKind::unplaced_column, label, "block column " + std::to_string(j + 1) + " is not placed", false);
        continue;
      }
      if (*c < 1 || *c > p.ambient_n) {
        add(DiagnosticKind::coordinate_out_of_range, label,
            "coordinate " + std::to_string(*c) + " outside 1.." + std::to_string(p.ambient_n));
        continue;
      }
      if (!placed[idx].insert(*c).second)
        add(DiagnosticKind::non_injective_map, label, "coordinate " + std::to_string(*c) + " used twice");
      used[*c] = true;
    }
  }
  for (std::size_t c = 1; c <= p.ambient_n; ++c) {
    if (!used[c]) add(DiagnosticKind::unused_coordinate, std::nullopt, "coordinate " + std::to_string(c) + " is unused");
  }
  for (std::size_t a = 0; a < placed.size(); ++a) {
    for (std::size_t b = a + 1; b < placed.size(); ++b) {
      Overlap o{a + 1, b + 1, {}};
      std::set_intersection(placed[a].begin(), placed[a].end(), placed[b].begin(), placed[b].end(),
                            std::back_inserter(o.shared));
      rep.overlaps.push_back(std::move(o));
    }
  }
  return rep;
}

LineSet apply_plan(const PlacementPlan& p, const BlockResolver& resolve) {
  PlanReport rep = validate_plan(p, resolve);
  if (!rep.ok()) {
    std::string first;
    for (const auto& d : rep.diagnostics) {
      if (d.structural) {
        first = d.message;
        break;
      }
    }
    throw PlanError("invalid plan: " + first, std::move(rep.diagnostics));
  }
  std::vector<Surd> flat;
  std::size_t m = 0;
  for (const auto& it : p.items) {
    LineSet block = *resolve(it.block);
    for (std::size_t r = 0; r < block.m(); ++r) {
      std::vector<Surd> row(p.ambient_n);
      for (std::size_t j = 0; j < block.n(); ++j) {
        if (!it.map[j]) continue;
        Surd v = block.at(r, j);
        if (!it.magnitudes.empty() && it.magnitudes[j] && !v.is_zero())
          v = v.sign() > 0 ? *it.magnitudes[j] : -*it.magnitudes[j];
        row[*it.map[j] - 1] = std::move(v);
      }
      flat.insert(flat.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
      ++m;
    }
  }
  return LineSet(m, p.ambient_n, std::move(flat));
}

json to_json(const PlanReport& r) {
  json diags = json::array();
  for (const auto& d : r.diagnostics) {
    diags.push_back({{"kind", std::string(to_string(d.kind))},
                     {"structural", d.structural},
                     {"item", d.item ? json(*d.item) : json(nullptr)},
                     {"message", d.message}});
  }
  json overlaps = json::array();
  for (const auto& o : r.overlaps) overlaps.push_back({{"a", o.a}, {"b", o.b}, {"shared", o.shared}});
  return {{"ok", r.ok()}, {"diagnostics", diags}, {"overlaps", overlaps}};
}

}  // namespace eqlines::construct
