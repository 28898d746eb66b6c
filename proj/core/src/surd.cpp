#include "eqlines/exact/surd.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <mpfr.h>

#include "radicand.hpp"

namespace eqlines::exact {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool term_less(const Surd::Term& a, const Surd::Term& b) {
  if (a.theta != b.theta) return !a.theta;
  return a.rad < b.rad;
}

struct Split {
  Surd a;  // part free of the splitting generator
  Surd b;  // cofactor of the splitting generator
};

Split split_theta(const Surd& s) {
  std::vector<Surd::Term> a, b;
  for (const auto& t : s.terms()) {
    if (t.theta) {
      b.push_back({t.coeff, t.rad, false});
    } else {
      a.push_back(t);
    }
  }
  return {Surd::from_terms(std::move(a)), Surd::from_terms(std::move(b))};
}

Split split_radical(const Surd& s, std::uint64_t p) {
  std::vector<Surd::Term> a, b;
  for (const auto& t : s.terms()) {
    if (t.rad % p == 0) {
      b.push_back({t.coeff, t.rad / p, false});
    } else {
      a.push_back(t);
    }
  }
  return {Surd::from_terms(std::move(a)), Surd::from_terms(std::move(b))};
}

// Largest element of a coprime base for the radicands of a theta-free s.
std::uint64_t splitting_radical(const Surd& s) {
  std::vector<std::uint64_t> rads;
  for (const auto& t : s.terms()) rads.push_back(t.rad);
  auto base = detail::coprime_base(std::move(rads));
  return base.empty() ? 1 : *std::max_element(base.begin(), base.end());
}

// sign(a + b g) for a generator g > 0 with g^2 = g2, from the signs of
// a, b and of a^2 - b^2 g2.
int combine_signs(int sa, int sb, const Surd& a, const Surd& b, const Surd& g2) {
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  return sa * (a * a - b * b * g2).sign();
}

bool is_rational_square(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = make_rational(n, d);
  return true;
}

// a, b with s = a + b sqrt 5, or nullopt when s has other radicals.
std::optional<std::pair<Rational, Rational>> as_quadratic5(const Surd& s) {
  Rational a = 0, b = 0;
  for (const auto& t : s.terms()) {
    if (t.theta) return std::nullopt;
    if (t.rad == 1) {
      a = t.coeff;
    } else if (t.rad == 5) {
      b = t.coeff;
    } else {
      return std::nullopt;
    }
  }
  return std::make_pair(a, b);
}

// sqrt(a + b sqrt 5) as a multiquadratic element, if one exists.
std::optional<Surd> denest5(const Rational& a, const Rational& b) {
  if (sgn(b) == 0) {
    if (sgn(a) < 0) return std::nullopt;
    return Surd::sqrt(a);
  }
  Rational c;
  if (!is_rational_square(a * a - 5 * b * b, c)) return std::nullopt;
  if (sgn(a) <= 0) return std::nullopt;
  Surd u = Surd::sqrt(Rational((a + c) / 2));
  Surd v = Surd::sqrt(Rational((a - c) / 2));
  return sgn(b) > 0 ? u + v : u - v;
}

void append_term(std::ostringstream& os, const Surd::Term& t, bool first) {
  Rational c = t.coeff;
  if (sgn(c) < 0) {
    os << (first ? "-" : " - ");
    c = -c;
  } else if (!first) {
    os << " + ";
  }
  bool unit = t.rad == 1 && !t.theta;
  if (unit || c != 1) {
    os << c.get_str();
    if (!unit) os << "*";
  }
  if (t.rad != 1) os << "sqrt(" << t.rad << ")";
  if (t.theta) os << (t.rad != 1 ? "*theta" : "theta");
}

}  // namespace

Surd::Surd(const Rational& q) {
  if (sgn(q) != 0) terms_.push_back({q, 1, false});
}

Surd::Surd(long v) : Surd(Rational(v)) {}

Surd Surd::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  Surd out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().rad == t.rad && out.terms_.back().theta == t.theta) {
      out.terms_.back().coeff += t.coeff;
      if (sgn(out.terms_.back().coeff) == 0) out.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Surd Surd::term(const Rational& q, const mpz_class& rad, bool theta) {
  if (sgn(rad) < 0) throw DomainError("negative radicand");
  if (sgn(q) == 0 || sgn(rad) == 0) return Surd();
  auto [s, f] = square_free_split(rad);
  Surd out;
  out.terms_.push_back({Rational(q * s), f, theta});
  return out;
}

Surd Surd::sqrt(const Rational& q) {
  if (sgn(q) < 0) throw DomainError("square root of a negative rational");
  if (sgn(q) == 0) return Surd();
  // sqrt(p/d) = sqrt(p d) / d
  mpz_class rad = q.get_num() * q.get_den();
  return term(Rational(1, 1) / q.get_den(), rad);
}

Surd Surd::theta() {
  Surd out;
  out.terms_.push_back({Rational(1), 1, true});
  return out;
}

const Surd& Surd::theta_squared() {
  static const Surd value = from_terms({{make_rational(1, 2), 1, false}, {make_rational(-1, 10), 5, false}});
  return value;
}

Surd Surd::sqrt(const Surd& s) {
  int sg = s.sign();
  if (sg < 0) throw DomainError("square root of a negative number");
  if (sg == 0) return Surd();
  if (s.is_rational()) return sqrt(s.to_rational());
  auto ab = as_quadratic5(s);
  if (!ab) throw UnsupportedRadicand("nested square root outside Q(sqrt 5): " + s.to_string());
  if (auto r = denest5(ab->first, ab->second)) return *r;
  auto cd = as_quadratic5(s / theta_squared());
  if (cd) {
    if (auto r = denest5(cd->first, cd->second)) return *r * theta();
  }
  throw UnsupportedRadicand("nested square root outside the supported extension: " + s.to_string());
}

bool Surd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].rad == 1 && !terms_[0].theta);
}

bool Surd::has_theta() const { return !terms_.empty() && terms_.back().theta; }

Rational Surd::rational_part() const {
  if (!terms_.empty() && terms_[0].rad == 1 && !terms_[0].theta) return terms_[0].coeff;
  return 0;
}

Rational Surd::to_rational() const {
  if (!is_rational()) throw DomainError("value is irrational: " + to_string());
  return rational_part();
}

int Surd::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return sgn(terms_[0].coeff);
  if (has_theta()) {
    auto [a, b] = split_theta(*this);
    return combine_signs(a.sign(), b.sign(), a, b, theta_squared());
  }
  std::uint64_t p = splitting_radical(*this);
  auto [a, b] = split_radical(*this, p);
  return combine_signs(a.sign(), b.sign(), a, b, Surd(static_cast<long>(p)));
}

Surd Surd::abs() const { return sign() < 0 ? -*this : *this; }

Surd Surd::inverse() const {
  if (terms_.empty()) throw DomainError("division by zero");
  if (is_rational()) return Surd(Rational(1 / terms_[0].coeff));
  // (a + b g)^-1 = (a - b g) / (a^2 - b^2 g^2)
  if (has_theta()) {
    auto [a, b] = split_theta(*this);
    Surd conj = a - b * theta();
    return conj * (a * a - b * b * theta_squared()).inverse();
  }
  std::uint64_t p = splitting_radical(*this);
  auto [a, b] = split_radical(*this, p);
  Surd g = term(1, mpz_class(static_cast<unsigned long>(p)));
  Surd conj = a - b * g;
  return conj * (a * a - b * b * Surd(static_cast<long>(p))).inverse();
}

double Surd::to_double() const {
  constexpr mpfr_prec_t kPrec = 128;
  mpfr_t sum, t, th;
  mpfr_inits2(kPrec, sum, t, th, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(sum, 1);
  // theta = sqrt((5 - sqrt 5) / 10)
  mpfr_sqrt_ui(th, 5, MPFR_RNDN);
  mpfr_ui_sub(th, 5, th, MPFR_RNDN);
  mpfr_div_ui(th, th, 10, MPFR_RNDN);
  mpfr_sqrt(th, th, MPFR_RNDN);
  for (const auto& term : terms_) {
    mpfr_sqrt_ui(t, term.rad, MPFR_RNDN);
    mpfr_mul_q(t, t, term.coeff.get_mpq_t(), MPFR_RNDN);
    if (term.theta) mpfr_mul(t, t, th, MPFR_RNDN);
    mpfr_add(sum, sum, t, MPFR_RNDN);
  }
  double out = mpfr_get_d(sum, MPFR_RNDN);
  mpfr_clears(sum, t, th, static_cast<mpfr_ptr>(nullptr));
  return out;
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) append_term(os, terms_[i], i == 0);
  return os.str();
}

Surd Surd::operator-() const {
  Surd out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && term_less(*i, *j))) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || term_less(*j, *i)) {
      merged.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (sgn(c) != 0) merged.push_back({std::move(c), i->rad, i->theta});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) { return *this += -o; }

Surd operator*(const Surd& a, const Surd& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Surd();
  std::vector<Surd::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size() * 2);
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      auto prod = detail::multiply_radicands(x.rad, y.rad);
      Rational c = x.coeff * y.coeff;
      if (prod.gcd != 1) c *= static_cast<unsigned long>(prod.gcd);
      if (x.theta && y.theta) {
        // theta^2 = 1/2 - sqrt(5)/10
        auto five = detail::multiply_radicands(prod.rad, 5);
        out.push_back({Rational(c / 2), prod.rad, false});
        out.push_back({Rational(-c * static_cast<unsigned long>(five.gcd) / 10), five.rad, false});
      } else {
        out.push_back({std::move(c), prod.rad, x.theta != y.theta});
      }
    }
  }
  return Surd::from_terms(std::move(out));
}

Surd& Surd::operator*=(const Surd& o) { return *this = *this * o; }

Surd& Surd::operator/=(const Surd& o) { return *this = *this * o.inverse(); }

int compare(const Surd& a, const Surd& b) { return (a - b).sign(); }

}  // namespace eqlines::exact
