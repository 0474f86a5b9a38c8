// Serialization of cohomology reports.  JSON output is byte-deterministic
// (ordered keys, exact "p/q" strings, no floats) and round-trips through
// report_from_json back to an equal in-memory report.
#pragma once

#include "eiscoh/profile.hpp"

#include <string>

namespace eiscoh {

std::string render_report_json(const CohomologyReport &report);

// inverse of render_report_json; throws std::invalid_argument on input that
// does not follow the schema
CohomologyReport report_from_json(const std::string &text);

std::string render_report_text(const CohomologyReport &report);

} // namespace eiscoh
