#include "eqlines/catalog/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "eqlines/exact/json.hpp"
#include "eqlines/frames/report_io.hpp"
#include "eqlines/io/matrix_file.hpp"

namespace eqlines::catalog {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kEmbeddedFiles[];
extern const std::size_t kEmbeddedFileCount;
}  // namespace detail

using nlohmann::json;

std::string_view to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::equiangular: return "equiangular";
    case ClaimKind::multi_angle: return "multi_angle";
    case ClaimKind::unitary: return "unitary";
  }
  return "";
}

std::string_view to_string(SourceKind k) {
  switch (k) {
    case SourceKind::matrix: return "matrix";
    case SourceKind::plan: return "plan";
    case SourceKind::generator: return "generator";
  }
  return "";
}

std::string_view to_string(Resolution r) {
  switch (r) {
    case Resolution::verified: return "verified";
    case Resolution::corrected: return "corrected";
    case Resolution::unresolved: return "unresolved";
  }
  return "";
}

namespace {

int roman_value(const std::string& s) {
  int total = 0, prev = 0;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    int v = 0;
    switch (*it) {
      case 'I': v = 1; break;
      case 'V': v = 5; break;
      case 'X': v = 10; break;
      case 'L': v = 50; break;
      default: return -1;
    }
    total += v < prev ? -v : v;
    prev = std::max(prev, v);
  }
  return total;
}

std::vector<std::string> split_id(const std::string& id) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : id) {
    if (c == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Claim claim_from_json(const json& j) {
  Claim c;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "equiangular") {
    c.kind = ClaimKind::equiangular;
    c.angles.push_back(exact::surd_from_json(j.at("angle")));
  } else if (kind == "multi_angle") {
    c.kind = ClaimKind::multi_angle;
    for (const auto& a : j.at("angles")) c.angles.push_back(exact::surd_from_json(a));
  } else if (kind == "unitary") {
    c.kind = ClaimKind::unitary;
  } else {
    throw exact::ParseError("unknown claim kind '" + kind + "'");
  }
  c.m = j.at("m").get<std::size_t>();
  c.n = j.at("n").get<std::size_t>();
  return c;
}

std::string dims(std::size_t m, std::size_t n) { return "M=" + std::to_string(m) + " N=" + std::to_string(n); }

}  // namespace

bool id_less(const std::string& a, const std::string& b) {
  auto pa = split_id(a), pb = split_id(b);
  for (std::size_t i = 0; i < pa.size() && i < pb.size(); ++i) {
    if (pa[i] == pb[i]) continue;
    if (i == 0) {
      int ra = roman_value(pa[i]), rb = roman_value(pb[i]);
      if (ra >= 0 && rb >= 0 && ra != rb) return ra < rb;
    }
    if (all_digits(pa[i]) && all_digits(pb[i]) && pa[i].size() != pb[i].size()) return pa[i].size() < pb[i].size();
    return pa[i] < pb[i];
  }
  return pa.size() < pb.size();
}

ClaimCheck check_claim(const Claim& claim, const LineSet& ls, const VerificationReport& rep) {
  std::vector<std::string> why;
  if (ls.m() != claim.m || ls.n() != claim.n) why.push_back(dims(ls.m(), ls.n()) + ", claimed " + dims(claim.m, claim.n));
  switch (claim.kind) {
    case ClaimKind::equiangular:
      if (rep.status != frames::Status::equiangular) {
        why.push_back("status " + std::string(frames::to_string(rep.status)));
      } else if (!rep.common_angle) {
        why.push_back("no pairs to fix an angle");
      } else if (!(*rep.common_angle == claim.angles.at(0))) {
        why.push_back("angle " + rep.common_angle->to_string() + ", claimed " + claim.angles[0].to_string());
      }
      break;
    case ClaimKind::multi_angle: {
      if (rep.status != frames::Status::equiangular && rep.status != frames::Status::multiple_angles) {
        why.push_back("status " + std::string(frames::to_string(rep.status)));
        break;
      }
      bool same = rep.angle_spectrum.size() == claim.angles.size();
      for (const auto& a : rep.angle_spectrum) {
        same = same && std::find(claim.angles.begin(), claim.angles.end(), a.angle) != claim.angles.end();
      }
      if (!same) why.push_back("angle set differs from the claim");
      break;
    }
    case ClaimKind::unitary:
      if (ls.m() != ls.n() || !frames::is_unitary(ls)) why.push_back("not unitary");
      break;
  }
  ClaimCheck out;
  out.matches = why.empty();
  for (std::size_t i = 0; i < why.size(); ++i) out.reason += (i ? "; " : "") + why[i];
  return out;
}

namespace {

// "id" or "id@as_printed" / "id@corrected"
struct BlockRef {
  std::string id;
  std::string variant;
};

BlockRef parse_block_ref(const std::string& name, const std::map<std::string, std::string>& aliases) {
  BlockRef r;
  const auto at = name.find('@');
  r.id = name.substr(0, at);
  if (at != std::string::npos) r.variant = name.substr(at + 1);
  if (auto a = aliases.find(r.id); a != aliases.end()) r.id = a->second;
  return r;
}

std::optional<LineSet> pick_variant(const CatalogEntry& e, const std::string& which) {
  if (which.empty()) return e.effective();
  if (which == "as_printed") return e.as_printed.set;
  if (which == "corrected" && e.corrected) return e.corrected->set;
  return std::nullopt;
}

struct Builder {
  const std::map<std::string, json>& docs;
  const std::map<std::string, std::string>& aliases;
  std::map<std::string, CatalogEntry>& done;
  std::set<std::string> active;

  std::optional<LineSet> block(const std::string& name) {
    BlockRef r = parse_block_ref(name, aliases);
    if (!docs.count(r.id)) return std::nullopt;
    return pick_variant(build(r.id), r.variant);
  }

  Variant variant(const json& src) {
    const std::string kind = src.at("source").get<std::string>();
    if (kind == "matrix") return {io::matrix_file_from_json(src).set, SourceKind::matrix, std::nullopt, std::nullopt};
    if (kind == "plan") {
      auto plan = construct::plan_from_json(src.at("plan"));
      LineSet ls = construct::apply_plan(plan, [this](const std::string& b) { return block(b); });
      return {std::move(ls), SourceKind::plan, std::move(plan), std::nullopt};
    }
    if (kind == "generator") {
      auto fam = construct::parse_family(src.at("family").get<std::string>());
      if (!fam) throw exact::ParseError("unknown generator family");
      construct::GeneratorSpec spec{*fam, src.at("n").get<std::size_t>()};
      return {construct::generate(spec), SourceKind::generator, std::nullopt, spec};
    }
    throw exact::ParseError("unknown variant source '" + kind + "'");
  }

  const CatalogEntry& build(const std::string& id) {
    if (auto it = done.find(id); it != done.end()) return it->second;
    if (!active.insert(id).second) throw std::logic_error("catalog entry '" + id + "' refers to itself");
    const json& d = docs.at(id);
    std::optional<CatalogEntry> target;
    if (d.contains("alias_of") && !d.contains("as_printed")) target = build(d.at("alias_of").get<std::string>());
    CatalogEntry e{id,
                   d.at("title").get<std::string>(),
                   claim_from_json(d.at("claim")),
                   target ? target->as_printed : variant(d.at("as_printed")),
                   std::nullopt,
                   std::nullopt,
                   std::nullopt,
                   std::nullopt,
                   d.value("notes", std::string())};
    if (target) {
      e.corrected = target->corrected;
      e.plan = target->plan;
    }
    if (d.contains("corrected")) e.corrected = variant(d.at("corrected"));
    if (d.contains("plan")) e.plan = construct::plan_from_json(d.at("plan"));
    if (d.contains("alias_of")) e.alias_of = d.at("alias_of").get<std::string>();
    if (d.contains("edit_distance")) e.edit_distance = d.at("edit_distance").get<std::size_t>();
    active.erase(id);
    return done.emplace(id, std::move(e)).first->second;
  }
};

}  // namespace

Catalog::Catalog(const std::vector<json>& entries, const std::map<std::string, std::string>& aliases)
    : aliases_(aliases) {
  std::map<std::string, json> docs;
  for (const auto& e : entries) {
    const std::string id = e.at("id").get<std::string>();
    if (!docs.emplace(id, e).second) throw std::logic_error("duplicate catalog id '" + id + "'");
  }
  Builder b{docs, aliases_, entries_, {}};
  for (const auto& [id, doc] : docs) {
    b.build(id);
    order_.push_back(id);
  }
  std::sort(order_.begin(), order_.end(), id_less);
}

const Catalog& Catalog::builtin() {
  static const Catalog instance = [] {
    std::vector<json> entries;
    std::map<std::string, std::string> aliases;
    for (std::size_t i = 0; i < detail::kEmbeddedFileCount; ++i) {
      const auto& [name, text] = detail::kEmbeddedFiles[i];
      json j = json::parse(text);
      if (name == "_aliases.json") {
        aliases = j.get<std::map<std::string, std::string>>();
      } else {
        entries.push_back(std::move(j));
      }
    }
    return Catalog(entries, aliases);
  }();
  return instance;
}

const CatalogEntry& Catalog::get(const std::string& id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) throw UnknownId("unknown catalog id '" + id + "'");
  return it->second;
}

bool Catalog::contains(const std::string& id) const { return entries_.count(id) != 0; }

std::optional<LineSet> Catalog::resolve_block(const std::string& name) const {
  BlockRef r = parse_block_ref(name, aliases_);
  auto it = entries_.find(r.id);
  if (it == entries_.end()) return std::nullopt;
  return pick_variant(it->second, r.variant);
}

construct::BlockResolver Catalog::resolver() const {
  return [this](const std::string& id) { return resolve_block(id); };
}

std::optional<construct::PlacementPlan> Catalog::builtin_plan(const std::string& id) const { return get(id).plan; }

EntrySummary Catalog::summarize(const std::string& id) const {
  const CatalogEntry& e = get(id);
  EntrySummary s;
  s.id = id;
  s.claim = e.claim;
  s.as_printed = frames::verify_equiangular(e.as_printed.set);
  s.as_printed_check = check_claim(e.claim, e.as_printed.set, s.as_printed);
  if (e.corrected) {
    s.corrected = frames::verify_equiangular(e.corrected->set);
    s.corrected_check = check_claim(e.claim, e.corrected->set, *s.corrected);
  }
  if (s.as_printed_check.matches) {
    s.resolution = Resolution::verified;
  } else if (s.corrected_check && s.corrected_check->matches) {
    s.resolution = Resolution::corrected;
  }
  return s;
}

std::vector<EntrySummary> Catalog::verify_all() const {
  std::vector<EntrySummary> out;
  out.reserve(order_.size());
  for (const auto& id : order_) out.push_back(summarize(id));
  return out;
}

std::size_t matrix_edit_distance(const LineSet& a, const LineSet& b) {
  auto nonzeros = [](const LineSet& s, std::size_t i) {
    std::size_t c = 0;
    for (const auto& e : s.row(i)) c += !e.is_zero();
    return c;
  };
  if (a.n() != b.n()) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.m(); ++i) total += nonzeros(a, i);
    for (std::size_t i = 0; i < b.m(); ++i) total += nonzeros(b, i);
    return total;
  }
  // d[i][j]: first i rows of a against first j rows of b
  std::vector<std::vector<std::size_t>> d(a.m() + 1, std::vector<std::size_t>(b.m() + 1, 0));
  for (std::size_t i = 1; i <= a.m(); ++i) d[i][0] = d[i - 1][0] + nonzeros(a, i - 1);
  for (std::size_t j = 1; j <= b.m(); ++j) d[0][j] = d[0][j - 1] + nonzeros(b, j - 1);
  for (std::size_t i = 1; i <= a.m(); ++i) {
    for (std::size_t j = 1; j <= b.m(); ++j) {
      std::size_t sub = 0;
      for (std::size_t k = 0; k < a.n(); ++k) sub += !(a.at(i - 1, k) == b.at(j - 1, k));
      d[i][j] = std::min({d[i - 1][j - 1] + sub, d[i - 1][j] + nonzeros(a, i - 1), d[i][j - 1] + nonzeros(b, j - 1)});
    }
  }
  return d[a.m()][b.m()];
}

std::size_t plan_edit_distance(const construct::PlacementPlan& a, const construct::PlacementPlan& b,
                               const construct::BlockResolver& resolve) {
  auto block_weight = [&](const construct::PlanItem& it) {
    std::size_t c = 0;
    if (auto blk = resolve(it.block)) {
      for (const auto& e : blk->entries()) c += !e.is_zero();
    }
    return c;
  };
  std::size_t total = 0;
  const std::size_t common = std::min(a.items.size(), b.items.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto& x = a.items[i];
    const auto& y = b.items[i];
    if (x.block != y.block) {
      auto bx = resolve(x.block), by = resolve(y.block);
      if (bx && by && !(*bx == *by)) total += matrix_edit_distance(*bx, *by);
    }
    std::set<std::size_t> sx, sy;
    for (const auto& c : x.map) {
      if (c) sx.insert(*c);
    }
    for (const auto& c : y.map) {
      if (c) sy.insert(*c);
    }
    std::vector<std::size_t> only_x, only_y;
    std::set_difference(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(only_x));
    std::set_difference(sy.begin(), sy.end(), sx.begin(), sx.end(), std::back_inserter(only_y));
    total += std::max(only_x.size(), only_y.size());
    const std::size_t cols = std::max({x.magnitudes.size(), y.magnitudes.size()});
    for (std::size_t j = 0; j < cols; ++j) {
      std::optional<Surd> mx = j < x.magnitudes.size() ? x.magnitudes[j] : std::nullopt;
      std::optional<Surd> my = j < y.magnitudes.size() ? y.magnitudes[j] : std::nullopt;
      total += !(mx == my);
    }
  }
  for (std::size_t i = common; i < a.items.size(); ++i) total += block_weight(a.items[i]);
  for (std::size_t i = common; i < b.items.size(); ++i) total += block_weight(b.items[i]);
  return total;
}

std::size_t variant_edit_distance(const CatalogEntry& e, const construct::BlockResolver& resolve) {
  if (!e.corrected) return 0;
  if (e.as_printed.plan && e.corrected->plan) return plan_edit_distance(*e.as_printed.plan, *e.corrected->plan, resolve);
  return matrix_edit_distance(e.as_printed.set, e.corrected->set);
}

json to_json(const Claim& c) {
  json angles = json::array();
  for (const auto& a : c.angles) angles.push_back(exact::to_json(a));
  return {{"kind", std::string(to_string(c.kind))}, {"m", c.m}, {"n", c.n}, {"angles", angles}};
}

json to_json(const EntrySummary& s) {
  auto variant = [](const VerificationReport& r, const ClaimCheck& c) {
    return json{{"report", frames::to_json(r)}, {"matches_claim", c.matches}, {"reason", c.reason}};
  };
  return {{"id", s.id},
          {"claim", to_json(s.claim)},
          {"as_printed", variant(s.as_printed, s.as_printed_check)},
          {"corrected", s.corrected ? variant(*s.corrected, *s.corrected_check) : json(nullptr)},
          {"resolution", std::string(to_string(s.resolution))}};
}

}  // namespace eqlines::catalog
