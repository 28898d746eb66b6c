#include "eqlines/frames/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqlines::frames {

using exact::DomainError;

Surd inner_product(std::span<const Surd> u, std::span<const Surd> v) {
  if (u.size() != v.size()) throw DomainError("inner product of vectors with different lengths");
  Surd s;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!u[k].is_zero() && !v[k].is_zero()) s += u[k] * v[k];
  }
  return s;
}

Surd inner_product(const LineSet& ls, std::size_t i, std::size_t j) { return inner_product(ls.row(i), ls.row(j)); }

Matrix gram(const LineSet& ls) {
  Matrix g(ls.m(), ls.m());
  for (std::size_t i = 0; i < ls.m(); ++i) {
    for (std::size_t j = i; j < ls.m(); ++j) {
      g(i, j) = inner_product(ls, i, j);
      if (i != j) g(j, i) = g(i, j);
    }
  }
  return g;
}

Matrix frame_operator(const LineSet& ls) {
  Matrix s(ls.n(), ls.n());
  for (std::size_t a = 0; a < ls.n(); ++a) {
    for (std::size_t b = a; b < ls.n(); ++b) {
      Surd v;
      for (std::size_t i = 0; i < ls.m(); ++i) {
        const Surd& x = ls.at(i, a);
        const Surd& y = ls.at(i, b);
        if (!x.is_zero() && !y.is_zero()) v += x * y;
      }
      s(a, b) = v;
      if (a != b) s(b, a) = std::move(v);
    }
  }
  return s;
}

std::size_t rank(const Matrix& in) {
  Matrix a = in;
  const std::size_t rows = a.rows(), cols = a.cols();
  Surd prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Surd pivot = a(r, c);
    Surd prev_inv = prev.inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Surd lead = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Surd v = pivot * a(i, j);
        if (!lead.is_zero() && !a(r, j).is_zero()) v -= lead * a(r, j);
        a(i, j) = v * prev_inv;
      }
      a(i, c) = Surd();
    }
    prev = pivot;
    ++r;
  }
  return r;
}

std::size_t rank(const LineSet& ls) { return rank(frame_operator(ls)); }

namespace {

Tightness tightness_from(const LineSet& ls, const Matrix& s) {
  Tightness t;
  t.rank = rank(s);
  Surd bound(exact::make_rational(static_cast<long>(ls.m()), static_cast<long>(t.rank)));
  Matrix s2 = s * s;
  bool ok = true;
  for (std::size_t i = 0; i < s.rows() && ok; ++i) {
    for (std::size_t j = 0; j < s.cols() && ok; ++j) ok = s2(i, j) == bound * s(i, j);
  }
  t.tight = ok;
  if (ok) t.frame_bound = bound.to_rational();
  return t;
}

}  // namespace

Tightness is_tight(const LineSet& ls) { return tightness_from(ls, frame_operator(ls)); }

Rational welch_bound_sq(std::size_t m, std::size_t n) {
  if (m < 2 || n == 0 || n > m) throw DomainError("Welch bound needs M >= 2 and 1 <= N <= M");
  return exact::make_rational(static_cast<long>(m - n), static_cast<long>(n * (m - 1)));
}

std::uint64_t gerzon_bound(std::size_t n) { return static_cast<std::uint64_t>(n) * (n + 1) / 2; }

std::string_view to_string(NeumannStatus s) {
  switch (s) {
    case NeumannStatus::not_applicable: return "not-applicable";
    case NeumannStatus::pass: return "pass";
    case NeumannStatus::violation: return "violation";
  }
  return "";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::equiangular: return "equiangular";
    case Status::multiple_angles: return "multiple-angles";
    case Status::not_unit_norm: return "not-unit-norm";
    case Status::parallel_lines: return "parallel-lines";
  }
  return "";
}

NeumannStatus neumann_lint(std::size_t m, std::size_t n, const Surd& c) {
  if (m <= 2 * n || c.is_zero()) return NeumannStatus::not_applicable;
  if (!c.is_rational()) return NeumannStatus::violation;
  Rational q = c.to_rational();
  if (sgn(q) < 0) q = -q;
  bool odd_reciprocal = q.get_num() == 1 && mpz_odd_p(q.get_den_mpz_t());
  return odd_reciprocal ? NeumannStatus::pass : NeumannStatus::violation;
}

bool is_unitary(const LineSet& ls) {
  if (ls.m() != ls.n()) throw DomainError("unitarity needs a square matrix");
  for (std::size_t i = 0; i < ls.m(); ++i) {
    for (std::size_t j = i; j < ls.m(); ++j) {
      if (inner_product(ls, i, j) != Surd(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

namespace {

struct PairAbs {
  std::size_t i, j;
  Surd ip;
  std::size_t cls;  // index into the distinct-value table
};

// Distinct |<f_i, f_j>| over i < j, with the class of each pair.
std::vector<AngleCount> collect_spectrum(const LineSet& ls, std::vector<PairAbs>& pairs) {
  std::vector<AngleCount> distinct;
  for (std::size_t i = 0; i < ls.m(); ++i) {
    for (std::size_t j = i + 1; j < ls.m(); ++j) {
      Surd ip = inner_product(ls, i, j);
      Surd a = ip.abs();
      std::size_t k = 0;
      while (k < distinct.size() && !(distinct[k].angle == a)) ++k;
      if (k == distinct.size()) distinct.push_back({a, 0});
      ++distinct[k].count;
      pairs.push_back({i, j, std::move(ip), k});
    }
  }
  std::vector<std::size_t> order(distinct.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return exact::compare(distinct[a].angle, distinct[b].angle) < 0; });
  std::vector<std::size_t> rank_of(order.size());
  std::vector<AngleCount> sorted;
  for (std::size_t k = 0; k < order.size(); ++k) {
    rank_of[order[k]] = k;
    sorted.push_back(distinct[order[k]]);
  }
  for (auto& p : pairs) p.cls = rank_of[p.cls];
  return sorted;
}

}  // namespace

std::vector<AngleCount> angle_spectrum(const LineSet& ls) {
  for (std::size_t i = 0; i < ls.m(); ++i) {
    if (inner_product(ls, i, i) != Surd(1)) throw DomainError("angle spectrum needs unit-norm rows");
  }
  std::vector<PairAbs> pairs;
  return collect_spectrum(ls, pairs);
}

VerificationReport verify_equiangular(const LineSet& ls) {
  VerificationReport rep;
  rep.m = ls.m();
  rep.n = ls.n();
  rep.gerzon_slack = static_cast<std::int64_t>(gerzon_bound(ls.n())) - static_cast<std::int64_t>(ls.m());

  Tightness t = is_tight(ls);
  rep.is_tight = t.tight;
  rep.frame_bound = t.frame_bound;
  rep.rank = t.rank;

  for (std::size_t i = 0; i < ls.m(); ++i) {
    Surd nrm = inner_product(ls, i, i);
    if (nrm != Surd(1)) rep.offending_pairs.push_back({i + 1, i + 1, std::move(nrm)});
  }
  if (!rep.offending_pairs.empty()) {
    rep.status = Status::not_unit_norm;
    return rep;
  }

  std::vector<PairAbs> pairs;
  rep.angle_spectrum = collect_spectrum(ls, pairs);

  const Surd one(1);
  for (const auto& p : pairs) {
    if (rep.angle_spectrum[p.cls].angle == one) rep.offending_pairs.push_back({p.i + 1, p.j + 1, p.ip});
  }
  if (!rep.offending_pairs.empty()) {
    rep.status = Status::parallel_lines;
    return rep;
  }

  if (rep.angle_spectrum.size() > 1) {
    rep.status = Status::multiple_angles;
    std::size_t modal = 0;
    for (std::size_t k = 1; k < rep.angle_spectrum.size(); ++k) {
      if (rep.angle_spectrum[k].count > rep.angle_spectrum[modal].count) modal = k;
    }
    for (const auto& p : pairs) {
      if (p.cls != modal) rep.offending_pairs.push_back({p.i + 1, p.j + 1, p.ip});
    }
    return rep;
  }

  rep.status = Status::equiangular;
  if (rep.angle_spectrum.size() == 1) {
    const Surd& c = rep.angle_spectrum[0].angle;
    rep.common_angle = c;
    rep.welch_equality = c * c == Surd(welch_bound_sq(rep.m, rep.rank));
    rep.neumann = neumann_lint(rep.m, rep.rank, c);
  }
  return rep;
}

bool is_etf(const LineSet& ls) {
  VerificationReport rep = verify_equiangular(ls);
  if (rep.status != Status::equiangular || rep.m < 2) return false;
  if (rep.welch_equality != rep.is_tight)
    throw std::logic_error("Welch equality and tightness disagree for an equiangular set");
  return rep.welch_equality;
}

}  // namespace eqlines::frames
