#include "float_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace oracle {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

double integer(const json& j) {
  if (j.is_string()) return std::stod(j.get<std::string>());
  return j.get<double>();
}

const double kTheta = std::sqrt((5.0 - std::sqrt(5.0)) / 10.0);

Mat zeros(int m, int n) { return Mat(m, std::vector<double>(n, 0.0)); }

}  // namespace

double surd_value(const json& terms) {
  double s = 0;
  for (const auto& t : terms) {
    double v = integer(t.at("num")) / (t.contains("den") ? integer(t.at("den")) : 1.0);
    if (t.contains("rad")) v *= std::sqrt(integer(t.at("rad")));
    if (t.contains("theta") && t.at("theta").get<int>() == 1) v *= kTheta;
    s += v;
  }
  return s;
}

Mat gram(const Mat& a) {
  const std::size_t m = a.size();
  Mat g(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < a[i].size(); ++k) g[i][j] += a[i][k] * a[j][k];
  return g;
}

Mat generate(const std::string& family, int n) {
  Mat out;
  auto one_fifth = [&](double u, double v) {
    for (int k = 1; 2 * k + 1 <= n; ++k) {
      for (double s : {1.0, -1.0}) {
        std::vector<double> r(n, 0.0);
        r[0] = std::sqrt(0.2);
        r[2 * k - 1] = u;
        r[2 * k] = s * v;
        out.push_back(r);
      }
    }
    if (n % 2 == 0) {
      std::vector<double> r(n, 0.0);
      r[0] = std::sqrt(0.2);
      r[n - 1] = std::sqrt(0.8);
      out.push_back(r);
    }
  };
  auto two_valued = [&](int size, double a, double b, auto&& is_b) {
    out = zeros(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) out[i][j] = is_b(i, j) ? -b : a;
  };
  if (family == "simplex") {
    const double d = std::sqrt(double(n) * (n + 1));
    out = zeros(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) out[i][j] = i == j ? -n / d : 1 / d;
  } else if (family == "one_third") {
    for (int k = 1; k < n; ++k) {
      for (double s : {1.0, -1.0}) {
        std::vector<double> r(n, 0.0);
        r[0] = std::sqrt(1.0 / 3);
        r[k] = s * std::sqrt(2.0 / 3);
        out.push_back(r);
      }
    }
  } else if (family == "one_fifth_a") {
    one_fifth(std::sqrt(0.4), std::sqrt(0.4));
  } else if (family == "one_fifth_b") {
    one_fifth(std::sqrt(0.2), std::sqrt(0.6));
  } else if (family == "three_n_plus_one") {
    const double a = std::sqrt(0.2), b = std::sqrt(0.4);
    const double blk[4][4] = {{a, a, a, b}, {a, -a, -a, b}, {a, -a, a, -b}, {a, a, -a, -b}};
    for (int j = 1; j <= n; ++j) {
      for (const auto& br : blk) {
        std::vector<double> r(3 * n + 1, 0.0);
        r[0] = br[0];
        for (int c = 1; c < 4; ++c) r[3 * j - 3 + c] = br[c];
        out.push_back(r);
      }
    }
  } else if (family == "two_angle") {
    const double x = kTheta, y = std::sqrt((5.0 + std::sqrt(5.0)) / 10.0);
    for (int k = 0; k < n; ++k) {
      for (double s : {1.0, -1.0}) {
        std::vector<double> r(n, 0.0);
        if (k + 1 < n) {
          r[k] = s * x;
          r[k + 1] = y;
        } else {
          r[0] = y;
          r[n - 1] = s * x;
        }
        out.push_back(r);
      }
    }
  } else if (family == "circ_sa_n") {
    two_valued(n, 2.0 / n, double(n - 2) / n, [](int i, int j) { return i == j; });
  } else if (family == "circ_sa_2n") {
    two_valued(2 * n, 1.0 / n, double(n - 1) / n, [n](int i, int j) { return j == (i + n) % (2 * n); });
  } else if (family == "circ_shift") {
    two_valued(n, 2.0 / n, double(n - 2) / n, [n](int i, int j) { return j == (i + 1) % n; });
  } else {
    throw std::invalid_argument("unknown family " + family);
  }
  return out;
}

Findings analyze(const Mat& a, double tol) {
  Findings f;
  const Mat g = gram(a);
  std::vector<double> vals;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (std::abs(g[i][i] - 1) > tol) f.unit_norm = false;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const double v = std::abs(g[i][j]);
      if (std::abs(v - 1) <= tol) f.parallel.emplace_back(int(i + 1), int(j + 1));
      vals.push_back(v);
    }
  }
  std::sort(vals.begin(), vals.end());
  for (double v : vals) {
    if (f.angles.empty() || v - f.angles.back() > tol) f.angles.push_back(v);
  }
  return f;
}

FloatCatalog::FloatCatalog(const fs::path& dir) {
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() != ".json") continue;
    std::ifstream in(e.path());
    json j = json::parse(in);
    if (e.path().filename() == "_aliases.json") {
      aliases_ = j.get<std::map<std::string, std::string>>();
    } else {
      const std::string id = j.at("id");
      docs_[id] = std::move(j);
    }
  }
  if (docs_.empty()) throw std::runtime_error("no catalog files in " + dir.string());
}

std::vector<std::string> FloatCatalog::ids() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : docs_) out.push_back(k);
  return out;
}

const json& FloatCatalog::doc(const std::string& id) const { return docs_.at(id); }

const json& FloatCatalog::target(const std::string& id) const {
  const json* d = &docs_.at(id);
  while (!d->contains("as_printed")) d = &docs_.at(d->at("alias_of").get<std::string>());
  return *d;
}

Mat FloatCatalog::as_printed(const std::string& id) const { return variant(target(id).at("as_printed")); }

std::optional<Mat> FloatCatalog::corrected(const std::string& id) const {
  const json& d = target(id);
  if (!d.contains("corrected")) return std::nullopt;
  return variant(d.at("corrected"));
}

Mat FloatCatalog::effective(const std::string& id) const {
  auto c = corrected(id);
  return c ? *c : as_printed(id);
}

Mat FloatCatalog::block(const std::string& name) const {
  const auto at = name.find('@');
  std::string id = name.substr(0, at);
  if (auto it = aliases_.find(id); it != aliases_.end()) id = it->second;
  if (at == std::string::npos) return effective(id);
  if (name.substr(at + 1) == "as_printed") return as_printed(id);
  return corrected(id).value();
}

Mat FloatCatalog::variant(const json& v) const {
  const std::string src = v.at("source");
  if (src == "plan") return apply(v.at("plan"));
  if (src == "generator") return generate(v.at("family"), v.at("n").get<int>());
  Mat out;
  for (const auto& row : v.at("entries")) {
    std::vector<double> r;
    for (const auto& e : row) r.push_back(surd_value(e));
    out.push_back(r);
  }
  return out;
}

Mat FloatCatalog::apply(const json& plan) const {
  const int n = plan.at("ambient_n").get<int>();
  Mat out;
  for (const auto& item : plan.at("items")) {
    const Mat b = block(item.at("block"));
    const json& map = item.at("map");
    const json mags = item.value("magnitudes", json::array());
    for (const auto& brow : b) {
      std::vector<double> r(n, 0.0);
      for (std::size_t j = 0; j < map.size(); ++j) {
        if (map[j].is_null()) continue;
        double v = brow[j];
        if (!mags.empty() && !mags[j].is_null() && v != 0) v = std::copysign(surd_value(mags[j]), v);
        r[map[j].get<int>() - 1] = v;
      }
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace oracle
