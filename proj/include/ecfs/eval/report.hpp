#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ecfs/eval/protocol.hpp"

namespace ecfs::eval {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const EvalReport& report);
Json to_json(const StabilityReport& report);

/// Methods as rows, cardinalities then the average as columns; mean AUC in
/// percent with two decimals.
void write_csv(const EvalReport& report, std::ostream& out);
/// Cardinalities as rows, one column per method.
void write_csv(const StabilityReport& report, std::ostream& out);

}  // namespace ecfs::eval
