#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "eqlines/catalog/catalog.hpp"
#include "eqlines/exact/json.hpp"
#include "eqlines/frames/report_io.hpp"
#include "eqlines/io/matrix_file.hpp"

namespace eqlines::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string matrix_text(const frames::LineSet& ls) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& e : ls.entries()) {
    cells.push_back(e.to_string());
    width = std::max(width, cells.back().size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < ls.m(); ++i) {
    os << "  ";
    for (std::size_t j = 0; j < ls.n(); ++j) os << std::setw(static_cast<int>(width) + 1) << cells[i * ls.n() + j];
    os << "\n";
  }
  return os.str();
}

std::string claim_text(const catalog::Claim& c) {
  std::string s = std::to_string(c.m) + " in R^" + std::to_string(c.n);
  if (c.kind == catalog::ClaimKind::unitary) return s + ", unitary";
  s += c.kind == catalog::ClaimKind::equiangular ? " at " : " at angles ";
  for (std::size_t i = 0; i < c.angles.size(); ++i) s += (i ? ", " : "") + c.angles[i].to_string();
  return s;
}

const catalog::Variant& pick_variant(const catalog::CatalogEntry& e, const std::string& which) {
  if (which == "as_printed" || which == "as-printed") return e.as_printed;
  if (which == "corrected") {
    if (!e.corrected) throw UsageError("entry " + e.id + " has no corrected variant");
    return *e.corrected;
  }
  if (which.empty()) return e.corrected ? *e.corrected : e.as_printed;
  throw UsageError("variant must be as_printed or corrected");
}

struct Options {
  bool json = false;
  std::string id;
  std::string variant;
  std::string out;
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> m;
  std::string format = "exact";
  std::string plan_file;
  std::string builtin;
  std::string file;
};

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_text_file(path, text);
  }
}

int cmd_list(const Options& o, std::ostream& out) {
  const auto& cat = catalog::Catalog::builtin();
  auto all = cat.verify_all();
  if (o.json) {
    json arr = json::array();
    for (const auto& s : all) {
      const auto& e = cat.get(s.id);
      arr.push_back({{"id", s.id},
                     {"title", e.title},
                     {"claim", catalog::to_json(s.claim)},
                     {"as_printed_status", std::string(frames::to_string(s.as_printed.status))},
                     {"as_printed_matches_claim", s.as_printed_check.matches},
                     {"corrected_status",
                      s.corrected ? json(std::string(frames::to_string(s.corrected->status))) : json(nullptr)},
                     {"resolution", std::string(catalog::to_string(s.resolution))},
                     {"alias_of", e.alias_of ? json(*e.alias_of) : json(nullptr)}});
    }
    out << dump(arr);
    return kOk;
  }
  std::size_t width = 0;
  for (const auto& s : all) width = std::max(width, claim_text(s.claim).size());
  const int claim_w = static_cast<int>(width + 2);
  out << std::left << std::setw(16) << "id" << std::setw(claim_w) << "claim" << std::setw(18) << "as printed"
      << std::setw(18) << "corrected" << "resolution\n";
  for (const auto& s : all) {
    out << std::setw(16) << s.id << std::setw(claim_w) << claim_text(s.claim) << std::setw(18)
        << frames::to_string(s.as_printed.status) << std::setw(18)
        << (s.corrected ? std::string(frames::to_string(s.corrected->status)) : std::string("-"))
        << catalog::to_string(s.resolution) << "\n";
  }
  out << all.size() << " entries\n";
  return kOk;
}

int cmd_show(const Options& o, std::ostream& out) {
  const auto& cat = catalog::Catalog::builtin();
  const auto& e = cat.get(o.id);
  auto s = cat.summarize(o.id);
  if (o.json) {
    json j = {{"id", e.id},
              {"title", e.title},
              {"claim", catalog::to_json(e.claim)},
              {"alias_of", e.alias_of ? json(*e.alias_of) : json(nullptr)},
              {"notes", e.notes},
              {"edit_distance", e.edit_distance ? json(*e.edit_distance) : json(nullptr)},
              {"as_printed", io::matrix_json(e.as_printed.set)},
              {"corrected", e.corrected ? io::matrix_json(e.corrected->set) : json(nullptr)},
              {"summary", catalog::to_json(s)}};
    out << dump(j);
    return kOk;
  }
  out << e.id << ": " << e.title << "\n";
  out << "claim: " << claim_text(e.claim) << "\n";
  if (e.alias_of) out << "alias of: " << *e.alias_of << "\n";
  if (!e.notes.empty()) out << "notes: " << e.notes << "\n";
  auto section = [&](const char* name, const catalog::Variant& v, const frames::VerificationReport& r,
                     const catalog::ClaimCheck& c) {
    out << "\n" << name << " (" << catalog::to_string(v.source) << ", " << v.set.m() << "x" << v.set.n() << "):\n";
    out << matrix_text(v.set);
    out << frames::format_report(r);
    out << "claim: " << (c.matches ? "matches" : "does not match (" + c.reason + ")") << "\n";
  };
  section("as printed", e.as_printed, s.as_printed, s.as_printed_check);
  if (e.corrected) {
    section("corrected", *e.corrected, *s.corrected, *s.corrected_check);
    if (e.edit_distance) out << "edit distance: " << *e.edit_distance << "\n";
  }
  out << "resolution: " << catalog::to_string(s.resolution) << "\n";
  return kOk;
}

int cmd_verify_all(const Options& o, std::ostream& out) {
  const auto& cat = catalog::Catalog::builtin();
  auto all = cat.verify_all();
  std::size_t failed = 0;
  for (const auto& s : all) failed += s.corrected_check && !s.corrected_check->matches;
  if (o.json) {
    json arr = json::array();
    for (const auto& s : all) arr.push_back(catalog::to_json(s));
    out << dump({{"entries", arr}, {"failed_corrections", failed}});
  } else {
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& s : all) {
      ++counts[static_cast<int>(s.resolution)];
      out << std::left << std::setw(16) << s.id << std::setw(12) << catalog::to_string(s.resolution);
      if (s.resolution == catalog::Resolution::unresolved) out << s.as_printed_check.reason;
      if (s.corrected_check && !s.corrected_check->matches) out << "corrected variant fails: " << s.corrected_check->reason;
      out << "\n";
    }
    out << all.size() << " entries: " << counts[0] << " verified, " << counts[1] << " corrected, " << counts[2]
        << " unresolved; " << failed << " failing corrections\n";
  }
  return failed ? kNegative : kOk;
}

int cmd_export(const Options& o, std::ostream& out) {
  const auto& e = catalog::Catalog::builtin().get(o.id);
  const auto& v = pick_variant(e, o.variant);
  io::MatrixFile f{v.set, e.id, e.title};
  emit(out, o.out, dump(io::to_json(f)));
  return kOk;
}

int cmd_plan(const Options& o, std::ostream& out) {
  auto plan = catalog::Catalog::builtin().builtin_plan(o.id);
  if (!plan) throw UsageError("entry " + o.id + " has no builtin plan");
  emit(out, o.out, dump(construct::to_json(*plan)));
  return kOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  auto fam = construct::parse_family(o.family);
  if (!fam) throw UsageError("unknown family '" + o.family + "'");
  if (o.format != "exact" && o.format != "float") throw UsageError("format must be exact or float");
  construct::GeneratorSpec spec{*fam, o.n};
  frames::LineSet ls = construct::generate(spec);
  auto rep = frames::verify_equiangular(ls);
  const std::string label = std::string(construct::family_name(*fam)) + " N=" + std::to_string(o.n);
  const std::string body =
      o.format == "float" ? io::to_csv(ls) : dump(io::to_json(io::MatrixFile{ls, label, std::nullopt}));
  if (!o.out.empty()) io::write_text_file(o.out, body);
  if (o.json) {
    json j = {{"report", frames::to_json(rep)}};
    if (o.out.empty()) {
      if (o.format == "float") {
        j["csv"] = body;
      } else {
        j["matrix"] = io::to_json(io::MatrixFile{ls, label, std::nullopt});
      }
    }
    out << dump(j);
  } else {
    if (o.out.empty()) out << body;
    out << frames::format_report(rep);
  }
  return kOk;
}

int cmd_compose(const Options& o, std::ostream& out) {
  const auto& cat = catalog::Catalog::builtin();
  construct::PlacementPlan plan;
  if (!o.plan_file.empty() && !o.builtin.empty()) throw UsageError("give either --plan or --builtin");
  if (!o.plan_file.empty()) {
    plan = construct::plan_from_json(io::read_json_file(o.plan_file));
  } else if (!o.builtin.empty()) {
    auto p = cat.builtin_plan(o.builtin);
    if (!p) throw UsageError("entry " + o.builtin + " has no builtin plan");
    plan = *p;
  } else {
    throw UsageError("compose needs --plan or --builtin");
  }
  auto resolve = cat.resolver();
  auto prep = construct::validate_plan(plan, resolve);
  if (!prep.ok()) {
    if (o.json) {
      out << dump({{"plan", construct::to_json(prep)}});
    } else {
      for (const auto& d : prep.diagnostics) {
        out << (d.structural ? "error" : "warning") << ": " << construct::to_string(d.kind);
        if (d.item) out << " (item " << *d.item << ")";
        out << ": " << d.message << "\n";
      }
    }
    return kUsage;
  }
  frames::LineSet ls = construct::apply_plan(plan, resolve);
  auto rep = frames::verify_equiangular(ls);
  if (!o.out.empty()) io::write_text_file(o.out, dump(io::to_json(io::MatrixFile{ls, std::nullopt, std::nullopt})));
  if (o.json) {
    out << dump({{"plan", construct::to_json(prep)}, {"report", frames::to_json(rep)}});
    return kOk;
  }
  for (const auto& d : prep.diagnostics) {
    out << "warning: " << construct::to_string(d.kind);
    if (d.item) out << " (item " << *d.item << ")";
    out << ": " << d.message << "\n";
  }
  std::map<std::size_t, std::size_t> by_size;
  for (const auto& ov : prep.overlaps) ++by_size[ov.shared.size()];
  out << "item pairs by shared coordinates:";
  for (const auto& [k, v] : by_size) out << " " << k << ":" << v;
  out << "\n" << frames::format_report(rep);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto f = io::read_matrix_file(o.file);
  auto rep = frames::verify_equiangular(f.set);
  out << (o.json ? dump(frames::to_json(rep)) : frames::format_report(rep));
  return rep.status == frames::Status::equiangular ? kOk : kNegative;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  json j = {{"n", o.n}, {"gerzon", frames::gerzon_bound(o.n)}};
  std::optional<exact::Rational> welch, bound;
  if (o.m) {
    if (*o.m < o.n) throw UsageError("--m must be at least --n");
    welch = frames::welch_bound_sq(*o.m, o.n);
    bound = exact::make_rational(static_cast<long>(*o.m), static_cast<long>(o.n));
    j["m"] = *o.m;
    j["welch_sq"] = exact::to_json(*welch);
    j["frame_bound"] = exact::to_json(*bound);
  }
  if (o.json) {
    out << dump(j);
    return kOk;
  }
  out << "gerzon bound: " << frames::gerzon_bound(o.n) << "\n";
  if (o.m) {
    out << "welch bound squared: " << welch->get_str() << "\n";
    out << "tight frame bound: " << bound->get_str() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of equiangular line sets", "eqlines"};
  app.require_subcommand(1);
  Options o;
  int (*handler)(const Options&, std::ostream&) = nullptr;
  auto on = [&](CLI::App* sub, int (*h)(const Options&, std::ostream&)) {
    sub->callback([&handler, h] { handler = h; });
  };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Structured JSON output"); };

  auto* cat = app.add_subcommand("catalog", "Browse and verify the built-in catalog");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "Verification summary of every entry");
  json_flag(list);
  on(list, cmd_list);
  auto* show = cat->add_subcommand("show", "Matrices, claim and reports of one entry");
  show->add_option("id", o.id)->required();
  json_flag(show);
  on(show, cmd_show);
  auto* vall = cat->add_subcommand("verify-all", "Verify every entry; fails if a correction does not verify");
  json_flag(vall);
  on(vall, cmd_verify_all);
  auto* exp = cat->add_subcommand("export", "Write an entry as an exact matrix file");
  exp->add_option("id", o.id)->required();
  exp->add_option("--variant", o.variant, "as_printed or corrected (default: corrected if present)");
  exp->add_option("--out", o.out, "Output file (default: standard output)");
  on(exp, cmd_export);
  auto* plan = cat->add_subcommand("plan", "Print the placement plan of an entry");
  plan->add_option("id", o.id)->required();
  plan->add_option("--out", o.out, "Output file (default: standard output)");
  on(plan, cmd_plan);

  auto* gen = app.add_subcommand("generate", "Generate a family member");
  gen->add_option("family", o.family)->required();
  gen->add_option("--n", o.n, "Size parameter")->required();
  gen->add_option("--out", o.out, "Output file");
  gen->add_option("--format", o.format, "exact (JSON) or float (CSV)");
  json_flag(gen);
  on(gen, cmd_generate);

  auto* comp = app.add_subcommand("compose", "Apply a placement plan and verify the result");
  comp->add_option("--plan", o.plan_file, "Plan file");
  comp->add_option("--builtin", o.builtin, "Use the plan of a catalog entry");
  comp->add_option("--out", o.out, "Write the composed matrix");
  json_flag(comp);
  on(comp, cmd_compose);

  auto* ver = app.add_subcommand("verify", "Verify an exact matrix file");
  ver->add_option("file", o.file)->required();
  json_flag(ver);
  on(ver, cmd_verify);

  auto* bnd = app.add_subcommand("bounds", "Gerzon and Welch bounds");
  bnd->add_option("--n", o.n, "Dimension")->required();
  bnd->add_option("--m", o.m, "Number of lines");
  json_flag(bnd);
  on(bnd, cmd_bounds);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (!handler) return kUsage;
  try {
    return handler(o, out);
  } catch (const io::IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace eqlines::cli
