#pragma once

#include <nlohmann/json.hpp>

#include "eqlines/exact/surd.hpp"

namespace eqlines::exact {

// A Surd serializes as an array of terms {"num", "den", "rad"}, with
// "theta": 1 on terms carrying theta. Zero is the empty array. Integers
// beyond 64 bits are written as decimal strings.
nlohmann::json to_json(const Surd& s);
Surd surd_from_json(const nlohmann::json& j);

// {"num", "den"}
nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

// Raised on malformed numeric JSON.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eqlines::exact
