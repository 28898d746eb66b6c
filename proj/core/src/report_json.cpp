#include <sstream>

#include "eqlines/exact/json.hpp"
#include "eqlines/frames/report_io.hpp"

namespace eqlines::frames {

using nlohmann::json;

json to_json(const VerificationReport& r) {
  json spectrum = json::array();
  for (const auto& a : r.angle_spectrum) spectrum.push_back({{"angle", exact::to_json(a.angle)}, {"count", a.count}});
  json pairs = json::array();
  for (const auto& p : r.offending_pairs)
    pairs.push_back({{"i", p.i}, {"j", p.j}, {"inner_product", exact::to_json(p.value)}});
  return {
      {"m", r.m},
      {"n", r.n},
      {"status", std::string(to_string(r.status))},
      {"common_angle", r.common_angle ? exact::to_json(*r.common_angle) : json(nullptr)},
      {"angle_spectrum", spectrum},
      {"offending_pairs", pairs},
      {"is_tight", r.is_tight},
      {"frame_bound", r.frame_bound ? exact::to_json(*r.frame_bound) : json(nullptr)},
      {"rank", r.rank},
      {"welch_equality", r.welch_equality},
      {"gerzon_slack", r.gerzon_slack},
      {"neumann_status", std::string(to_string(r.neumann))},
  };
}

namespace {

std::string with_float(const exact::Surd& s) {
  std::ostringstream os;
  os.precision(12);
  os << s.to_string();
  if (!s.is_rational() || s.to_rational().get_den() != 1) os << " (" << s.to_double() << ")";
  return os.str();
}

}  // namespace

std::string format_report(const VerificationReport& r, std::size_t max_pairs) {
  std::ostringstream os;
  os << "status: " << to_string(r.status) << "\n";
  os << "vectors: " << r.m << " in R^" << r.n << ", rank " << r.rank << "\n";
  if (r.common_angle) os << "common angle: " << with_float(*r.common_angle) << "\n";
  if (!r.angle_spectrum.empty()) {
    os << "angles:";
    for (const auto& a : r.angle_spectrum) os << " " << with_float(a.angle) << " x" << a.count << ";";
    os << "\n";
  }
  os << "tight: " << (r.is_tight ? "yes" : "no");
  if (r.frame_bound) os << " (frame bound " << r.frame_bound->get_str() << ")";
  os << "\n";
  os << "welch equality: " << (r.welch_equality ? "yes" : "no") << "\n";
  os << "gerzon slack: " << r.gerzon_slack << "\n";
  os << "odd-reciprocal check: " << to_string(r.neumann) << "\n";
  if (!r.offending_pairs.empty()) {
    os << "offending pairs (" << r.offending_pairs.size() << "):\n";
    for (std::size_t k = 0; k < r.offending_pairs.size() && k < max_pairs; ++k) {
      const auto& p = r.offending_pairs[k];
      os << "  (" << p.i << ", " << p.j << ") " << (p.i == p.j ? "norm^2 " : "<fi,fj> ") << with_float(p.value) << "\n";
    }
    if (r.offending_pairs.size() > max_pairs) os << "  ... " << r.offending_pairs.size() - max_pairs << " more\n";
  }
  return os.str();
}

}  // namespace eqlines::frames
