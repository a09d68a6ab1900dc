#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "partid/counting.hpp"
#include "partid/identities.hpp"
#include "partid/solutions.hpp"

namespace partid {

using Json = nlohmann::ordered_json;

/// {"identity","set","alpha","N","all_equal","records":[{"n","lhs","rhs","equal"}]}
/// Big integers are decimal strings. "exploration" is added only for exploration runs.
Json to_json(const VerificationReport& report);
/// Reads back the fields written by to_json. The enumerative value is not
/// serialized, so only rhs_convolution is populated.
VerificationReport report_from_json(const Json& j);

Json to_json(const SolutionMatrix& matrix);
Json to_json(const CountTable& table);
Json to_json(const GammaTable& table);

void write_plain(std::ostream& os, const VerificationReport& report);
void write_csv(std::ostream& os, const VerificationReport& report);

}  // namespace partid
