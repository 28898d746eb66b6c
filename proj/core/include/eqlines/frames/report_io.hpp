#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "eqlines/frames/verify.hpp"

namespace eqlines::frames {

nlohmann::json to_json(const VerificationReport& r);
// Multi-line human summary; at most max_pairs offending pairs are listed.
std::string format_report(const VerificationReport& r, std::size_t max_pairs = 10);

}  // namespace eqlines::frames
