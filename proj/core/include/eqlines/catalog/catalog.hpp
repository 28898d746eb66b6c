#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqlines/construct/generators.hpp"
#include "eqlines/construct/plan.hpp"
#include "eqlines/frames/verify.hpp"

namespace eqlines::catalog {

using exact::Surd;
using frames::LineSet;
using frames::VerificationReport;

class UnknownId : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class ClaimKind { equiangular, multi_angle, unitary };
std::string_view to_string(ClaimKind k);

struct Claim {
  ClaimKind kind = ClaimKind::equiangular;
  std::size_t m = 0;
  std::size_t n = 0;
  // equiangular: the single common angle; multi_angle: the full angle set;
  // unitary: empty.
  std::vector<Surd> angles;
};

enum class SourceKind { matrix, plan, generator };
std::string_view to_string(SourceKind k);

struct Variant {
  LineSet set;
  SourceKind source = SourceKind::matrix;
  std::optional<construct::PlacementPlan> plan;
  std::optional<construct::GeneratorSpec> generator;
};

struct CatalogEntry {
  std::string id;
  std::string title;
  Claim claim;
  Variant as_printed;
  std::optional<Variant> corrected;
  // Chart or composition that reproduces the entry.
  std::optional<construct::PlacementPlan> plan;
  // Earlier listing of the same set.
  std::optional<std::string> alias_of;
  // Entry edits between as_printed and corrected, as recorded in the data.
  std::optional<std::size_t> edit_distance;
  std::string notes;

  // corrected when present, else as_printed
  const LineSet& effective() const { return corrected ? corrected->set : as_printed.set; }
};

struct ClaimCheck {
  bool matches = false;
  std::string reason;  // empty when matches
};
ClaimCheck check_claim(const Claim& claim, const LineSet& ls, const VerificationReport& rep);

enum class Resolution { verified, corrected, unresolved };
std::string_view to_string(Resolution r);

struct EntrySummary {
  std::string id;
  Claim claim;
  VerificationReport as_printed;
  ClaimCheck as_printed_check;
  std::optional<VerificationReport> corrected;
  std::optional<ClaimCheck> corrected_check;
  Resolution resolution = Resolution::unresolved;
};

class Catalog {
 public:
  // Entries compiled into the library.
  static const Catalog& builtin();
  // Entry documents and a block alias table, e.g. for tests.
  Catalog(const std::vector<nlohmann::json>& entries, const std::map<std::string, std::string>& aliases);

  // Raises UnknownId.
  const CatalogEntry& get(const std::string& id) const;
  bool contains(const std::string& id) const;
  // Ids in index order.
  const std::vector<std::string>& ids() const { return order_; }
  // Block names such as "BB1" mapped to entry ids.
  const std::map<std::string, std::string>& block_aliases() const { return aliases_; }

  // Block lookup for plans: an entry id or block alias resolves to the
  // entry's effective variant; a suffix "@as_printed" or "@corrected"
  // selects that variant instead.
  std::optional<LineSet> resolve_block(const std::string& name) const;
  construct::BlockResolver resolver() const;

  // Plan reproducing the entry, if it has one.
  std::optional<construct::PlacementPlan> builtin_plan(const std::string& id) const;

  EntrySummary summarize(const std::string& id) const;
  // One summary per entry, in index order.
  std::vector<EntrySummary> verify_all() const;

 private:
  std::map<std::string, CatalogEntry> entries_;
  std::map<std::string, std::string> aliases_;
  std::vector<std::string> order_;
};

// Orders ids like "III.B.2" < "III.B.10" < "IV.A.1" (roman section first).
bool id_less(const std::string& a, const std::string& b);

// Minimal row-aligned entry edits turning a into b: substituting a row costs
// its differing entries, inserting or deleting one costs its nonzeros.
std::size_t matrix_edit_distance(const LineSet& a, const LineSet& b);
// Chart edits: bullets moved or filled per item, magnitude overrides changed,
// plus the matrix distance between blocks when an item's block differs.
std::size_t plan_edit_distance(const construct::PlacementPlan& a, const construct::PlacementPlan& b,
                               const construct::BlockResolver& resolve);
// Distance between the two variants of an entry; zero without a correction.
std::size_t variant_edit_distance(const CatalogEntry& e, const construct::BlockResolver& resolve);

nlohmann::json to_json(const Claim& c);
nlohmann::json to_json(const EntrySummary& s);

}  // namespace eqlines::catalog
