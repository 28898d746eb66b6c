#include "eqlines/construct/generators.hpp"

#include <string>

namespace eqlines::construct {

using exact::DomainError;
using exact::make_rational;
using exact::Rational;
using exact::Surd;

namespace {

void require(std::size_t n, std::size_t min, const char* what) {
  if (n < min)
    throw DomainError(std::string(what) + ": size parameter must be at least " + std::to_string(min));
}

Surd root(long num, long den) { return Surd::sqrt(make_rational(num, den)); }

long as_long(std::size_t n) { return static_cast<long>(n); }

struct Rows {
  std::size_t n;
  std::vector<Surd> flat;
  std::size_t m = 0;

  std::vector<Surd>::iterator add() {
    flat.resize(flat.size() + n);
    ++m;
    return flat.end() - static_cast<std::ptrdiff_t>(n);
  }
  LineSet done() { return LineSet(m, n, std::move(flat)); }
};

Surd x_value() { return Surd::theta(); }
Surd y_value() { return (Surd(1) + Surd::sqrt(5)) * Surd(make_rational(1, 2)) * Surd::theta(); }

LineSet one_fifth(std::size_t n, const Surd& u, const Surd& v) {
  Rows r{n, {}};
  const Surd lead = root(1, 5);
  for (std::size_t k = 1; 2 * k + 1 <= n; ++k) {
    for (int s : {1, -1}) {
      auto row = r.add();
      row[0] = lead;
      row[2 * k - 1] = u;
      row[2 * k] = s > 0 ? v : -v;
    }
  }
  if (n % 2 == 0) {
    auto row = r.add();
    row[0] = lead;
    row[n - 1] = root(4, 5);
  }
  return r.done();
}

LineSet two_valued(std::size_t rows, const Rational& a, const Rational& b, auto&& is_b) {
  Rows r{rows, {}};
  for (std::size_t i = 0; i < rows; ++i) {
    auto row = r.add();
    for (std::size_t j = 0; j < rows; ++j) row[static_cast<std::ptrdiff_t>(j)] = is_b(i, j) ? Surd(Rational(-b)) : Surd(a);
  }
  return r.done();
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::simplex: return "simplex";
    case Family::one_third: return "one_third";
    case Family::one_fifth_a: return "one_fifth_a";
    case Family::one_fifth_b: return "one_fifth_b";
    case Family::three_n_plus_one: return "three_n_plus_one";
    case Family::two_angle: return "two_angle";
    case Family::circ_sa_n: return "circ_sa_n";
    case Family::circ_sa_2n: return "circ_sa_2n";
    case Family::circ_shift: return "circ_shift";
  }
  return "";
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> all = {Family::simplex,   Family::one_third,  Family::one_fifth_a,
                                          Family::one_fifth_b, Family::three_n_plus_one, Family::two_angle,
                                          Family::circ_sa_n, Family::circ_sa_2n, Family::circ_shift};
  return all;
}

std::optional<Family> parse_family(std::string_view name) {
  std::string norm(name);
  for (auto& c : norm) {
    if (c == '-') c = '_';
  }
  for (Family f : all_families()) {
    if (family_name(f) == norm) return f;
  }
  return std::nullopt;
}

std::size_t family_min_size(Family f) {
  switch (f) {
    case Family::simplex:
    case Family::three_n_plus_one: return 1;
    case Family::one_third:
    case Family::circ_sa_2n: return 2;
    default: return 3;
  }
}

LineSet simplex(std::size_t n) {
  require(n, 1, "simplex");
  const long d = as_long(n) * as_long(n + 1);
  const Surd off = root(1, d);
  const Surd diag = -root(as_long(n) * as_long(n), d);
  Rows r{n + 1, {}};
  for (std::size_t i = 0; i <= n; ++i) {
    auto row = r.add();
    for (std::size_t j = 0; j <= n; ++j) row[static_cast<std::ptrdiff_t>(j)] = i == j ? diag : off;
  }
  return r.done();
}

LineSet family_one_third(std::size_t n) {
  require(n, 2, "one_third");
  Rows r{n, {}};
  const Surd lead = root(1, 3), v = root(2, 3);
  for (std::size_t k = 1; k < n; ++k) {
    for (int s : {1, -1}) {
      auto row = r.add();
      row[0] = lead;
      row[static_cast<std::ptrdiff_t>(k)] = s > 0 ? v : -v;
    }
  }
  return r.done();
}

LineSet family_one_fifth_a(std::size_t n) {
  require(n, 3, "one_fifth_a");
  return one_fifth(n, root(2, 5), root(2, 5));
}

LineSet family_one_fifth_b(std::size_t n) {
  require(n, 3, "one_fifth_b");
  return one_fifth(n, root(1, 5), root(3, 5));
}

LineSet family_three_n_plus_one(std::size_t k) {
  require(k, 1, "three_n_plus_one");
  const Surd a = root(1, 5), b = root(2, 5);
  // BB5
  const Surd block[4][4] = {{a, a, a, b}, {a, -a, -a, b}, {a, -a, a, -b}, {a, a, -a, -b}};
  Rows r{3 * k + 1, {}};
  for (std::size_t j = 1; j <= k; ++j) {
    for (const auto& brow : block) {
      auto row = r.add();
      row[0] = brow[0];
      for (std::size_t c = 1; c < 4; ++c) row[static_cast<std::ptrdiff_t>(3 * j - 3 + c)] = brow[c];
    }
  }
  return r.done();
}

LineSet two_angle(std::size_t n) {
  require(n, 3, "two_angle");
  const Surd x = x_value(), y = y_value();
  Rows r{n, {}};
  for (std::size_t k = 0; k < n; ++k) {
    for (int s : {1, -1}) {
      auto row = r.add();
      const Surd sx = s > 0 ? x : -x;
      if (k + 1 < n) {
        row[static_cast<std::ptrdiff_t>(k)] = sx;
        row[static_cast<std::ptrdiff_t>(k + 1)] = y;
      } else {
        row[0] = y;
        row[static_cast<std::ptrdiff_t>(n - 1)] = sx;
      }
    }
  }
  return r.done();
}

std::pair<LineSet, LineSet> split_circulant(std::size_t n) {
  require(n, 3, "split_circulant");
  LineSet all = two_angle(n);
  std::vector<Surd> plus, minus;
  for (std::size_t i = 0; i < all.m(); ++i) {
    auto& dst = i % 2 == 0 ? plus : minus;
    dst.insert(dst.end(), all.row(i).begin(), all.row(i).end());
  }
  return {LineSet(n, n, std::move(plus)), LineSet(n, n, std::move(minus))};
}

LineSet circ_sa_n(std::size_t n) {
  require(n, 3, "circ_sa_n");
  return two_valued(n, make_rational(2, as_long(n)), make_rational(as_long(n) - 2, as_long(n)),
                    [](std::size_t i, std::size_t j) { return i == j; });
}

LineSet circ_sa_2n(std::size_t n) {
  require(n, 2, "circ_sa_2n");
  return two_valued(2 * n, make_rational(1, as_long(n)), make_rational(as_long(n) - 1, as_long(n)),
                    [n](std::size_t i, std::size_t j) { return j == (i + n) % (2 * n); });
}

LineSet circ_shift(std::size_t n) {
  require(n, 3, "circ_shift");
  return two_valued(n, make_rational(2, as_long(n)), make_rational(as_long(n) - 2, as_long(n)),
                    [n](std::size_t i, std::size_t j) { return j == (i + 1) % n; });
}

LineSet generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::simplex: return simplex(spec.n);
    case Family::one_third: return family_one_third(spec.n);
    case Family::one_fifth_a: return family_one_fifth_a(spec.n);
    case Family::one_fifth_b: return family_one_fifth_b(spec.n);
    case Family::three_n_plus_one: return family_three_n_plus_one(spec.n);
    case Family::two_angle: return two_angle(spec.n);
    case Family::circ_sa_n: return circ_sa_n(spec.n);
    case Family::circ_sa_2n: return circ_sa_2n(spec.n);
    case Family::circ_shift: return circ_shift(spec.n);
  }
  throw DomainError("unknown family");
}

bool is_circulant(const LineSet& ls) {
  const std::size_t n = ls.n();
  for (std::size_t i = 0; i < ls.m(); ++i) {
    const std::size_t next = (i + 1) % ls.m();
    for (std::size_t j = 0; j < n; ++j) {
      if (!(ls.at(next, (j + 1) % n) == ls.at(i, j))) return false;
    }
  }
  return true;
}

}  // namespace eqlines::construct
