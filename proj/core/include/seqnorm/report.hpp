#pragma once

// Report serialization: JSON (full report), CSV (violations table) and a
// short human-readable summary. JSON numbers use the shortest round-trip
// form; infinities are written as the strings "+inf" / "-inf".

#include <string>

#include "seqnorm/probes.hpp"

namespace seqnorm {

std::string report_to_json(const ProbeReport& report);
std::string report_to_csv(const ProbeReport& report);
std::string report_to_text(const ProbeReport& report);

}  // namespace seqnorm
