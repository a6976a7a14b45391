#pragma once

#include <json.hpp>

#include "semiproper/decompose.hpp"
#include "semiproper/exact.hpp"
#include "semiproper/generators.hpp"
#include "semiproper/orienter.hpp"
#include "semiproper/validate.hpp"

namespace semiproper {

inline constexpr const char* kReportSchema = "semiproper.report/1";
inline constexpr const char* kVersion = "0.1.0";

// JSON views of the library's result types. Timing fields are only written
// when `with_timing` is set so that reports are byte-stable across runs.

nlohmann::json to_json(const GraphClass& c);
nlohmann::json to_json(const GeneratorMetadata& m);
nlohmann::json to_json(const TraceStep& s);
nlohmann::json to_json(const OrientResult& r, bool with_trace = true);
nlohmann::json to_json(const SolveReport& r, bool with_timing = false);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const AuditReport& a);
nlohmann::json to_json(const TightnessReport& t);

/// FNV-1a 64-bit digest, hex encoded; identifies report inputs.
std::string digest(std::string_view bytes);

}  // namespace semiproper
