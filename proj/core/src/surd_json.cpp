#include "eqlines/exact/json.hpp"

#include <limits>

namespace eqlines::exact {

namespace {

nlohmann::json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j, const char* what) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError(std::string("bad integer in ") + what);
    return z;
  }
  throw ParseError(std::string("expected integer for ") + what);
}

}  // namespace

nlohmann::json to_json(const Rational& q) {
  return {{"num", integer_json(q.get_num())}, {"den", integer_json(q.get_den())}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num")) throw ParseError("rational must be an object with num and den");
  mpz_class num = integer_from_json(j.at("num"), "num");
  mpz_class den = j.contains("den") ? integer_from_json(j.at("den"), "den") : mpz_class(1);
  if (den == 0) throw ParseError("zero denominator");
  return make_rational(num, den);
}

nlohmann::json to_json(const Surd& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : s.terms()) {
    nlohmann::json o = to_json(t.coeff);
    o["rad"] = t.rad;
    if (t.theta) o["theta"] = 1;
    arr.push_back(std::move(o));
  }
  return arr;
}

Surd surd_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("surd must be an array of terms");
  Surd out;
  for (const auto& t : j) {
    Rational q = rational_from_json(t);
    mpz_class rad = t.contains("rad") ? integer_from_json(t.at("rad"), "rad") : mpz_class(1);
    if (rad <= 0) throw ParseError("radicand must be positive");
    bool theta = false;
    if (t.contains("theta")) {
      const auto& th = t.at("theta");
      if (th.is_boolean()) {
        theta = th.get<bool>();
      } else if (th.is_number_integer() && (th.get<int>() == 0 || th.get<int>() == 1)) {
        theta = th.get<int>() == 1;
      } else {
        throw ParseError("theta must be 0 or 1");
      }
    }
    out += Surd::term(q, rad, theta);
  }
  return out;
}

}  // namespace eqlines::exact
