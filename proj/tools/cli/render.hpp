#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "naples/naples.hpp"

namespace naples::cli {

using nlohmann::json;

/// Spot list with "X" for cars that did not park.
std::string render_outcome(std::span<const Spot> spot_of);

json to_json(const ParkingOutcome& outcome);
json to_json(const ParkingTrace& trace);
json to_json(const Interval& interval);
json to_json(const WitnessCertificate& cert);
json to_json(const CertificateCheck& check);
json to_json(const CountReport& report);

/// CSV columns: n,k,predicate,count,total,elapsed_ms
void write_csv_header(std::ostream& os);
void write_csv_rows(std::ostream& os, const CountReport& report);

}  // namespace naples::cli
