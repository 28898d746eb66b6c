#include "radicand.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "eqlines/exact/surd.hpp"

namespace eqlines::exact {

namespace {

mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

std::uint64_t to_u64(const mpz_class& z) {
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, z.get_mpz_t());
  return v;
}

bool fits_u64(const mpz_class& z) { return sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64; }

}  // namespace

std::pair<mpz_class, std::uint64_t> square_free_split(const mpz_class& n_in) {
  if (sgn(n_in) <= 0) throw DomainError("square_free_split: argument must be positive");
  mpz_class n = n_in;
  mpz_class s = 1;
  mpz_class f = 1;
  bool exhausted = false;  // every prime factor <= sqrt(n) has been removed
  for (std::uint64_t p = 2; p <= kTrialDivisionBound; p += (p == 2 ? 1 : 2)) {
    if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) {
      exhausted = true;
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e == 0) continue;
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) f *= p;
  }
  if (n != 1) {
    if (exhausted) {
      f *= n;
    } else if (mpz_perfect_square_p(n.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      s *= r;
    } else {
      // no prime factor <= B remains; below B^3 the cofactor cannot hold a square
      mpz_class b = to_mpz(kTrialDivisionBound);
      if (n >= b * b * b) throw UnsupportedRadicand("radicand exceeds the trial-division bound");
      f *= n;
    }
  }
  if (!fits_u64(f)) throw UnsupportedRadicand("square-free radicand does not fit in 64 bits");
  return {s, to_u64(f)};
}

namespace detail {

RadicalProduct multiply_radicands(std::uint64_t d, std::uint64_t e) {
  std::uint64_t g = std::gcd(d, e);
  const std::uint64_t a = d / g, b = e / g;
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw UnsupportedRadicand("radicand product overflows 64 bits");
  return {a * b, g};
}

std::vector<std::uint64_t> coprime_base(std::vector<std::uint64_t> values) {
  std::vector<std::uint64_t> base;
  for (std::uint64_t v : values) {
    if (v > 1) base.push_back(v);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        std::uint64_t g = std::gcd(base[i], base[j]);
        if (g == 1) continue;
        std::uint64_t a = base[i] / g, b = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        base.push_back(g);
        if (a > 1) base.push_back(a);
        if (b > 1) base.push_back(b);
        changed = true;
      }
    }
  }
  return base;
}

}  // namespace detail
}  // namespace eqlines::exact
