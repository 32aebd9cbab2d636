#include "cli/render.hpp"

#include <ostream>

namespace naples::cli {

std::string render_outcome(std::span<const Spot> spot_of) {
  std::string out;
  for (std::size_t i = 0; i < spot_of.size(); ++i) {
    if (i) out += ',';
    out += spot_of[i] == kUnparked ? std::string("X") : std::to_string(spot_of[i]);
  }
  return out;
}

namespace {

json spot_or_null(Spot s) { return s == kUnparked ? json(nullptr) : json(s); }

}  // namespace

json to_json(const ParkingOutcome& outcome) {
  json spots = json::array();
  for (Spot s : outcome.spot_of) spots.push_back(spot_or_null(s));
  return {{"spot_of", spots}, {"all_parked", outcome.all_parked}};
}

json to_json(const ParkingTrace& trace) {
  json events = json::array();
  for (const auto& ev : trace) {
    events.push_back({{"car", ev.car},
                      {"preferred_spot", ev.preferred},
                      {"backward_checks", ev.backward_checks},
                      {"forward_checks", ev.forward_checks},
                      {"result", spot_or_null(ev.result)}});
  }
  return events;
}

json to_json(const Interval& interval) { return json::array({interval.first, interval.last}); }

json to_json(const WitnessCertificate& cert) {
  return {{"interval", to_json(cert.interval)},
          {"J", cert.cars.values()},
          {"shifted_restriction", cert.shifted_restriction.values()}};
}

json to_json(const CertificateCheck& check) {
  return {{"range", check.in_range},
          {"complete", check.complete},
          {"k_naples", check.k_naples},
          {"size_bound", check.size_bound}};
}

json to_json(const CountReport& report) {
  json counts = json::object();
  for (const auto& [p, c] : report.counts) counts[std::string(to_string(p))] = c;
  json j = {{"n", report.n},
            {"k", report.k},
            {"total", report.total},
            {"counts", counts},
            {"elapsed_ms", report.elapsed.count()},
            {"shards", report.shards}};
  if (report.violation) {
    j["counterexample"] = {{"property", report.violation->property},
                           {"k", report.violation->k},
                           {"preference", to_string(report.violation->preference)}};
  }
  return j;
}

void write_csv_header(std::ostream& os) {
  os << "n,k,predicate,count,total,elapsed_ms\n";
}

void write_csv_rows(std::ostream& os, const CountReport& report) {
  for (const auto& [p, c] : report.counts) {
    os << report.n << ',' << report.k << ',' << to_string(p) << ',' << c << ','
       << report.total << ',' << report.elapsed.count() << '\n';
  }
}

}  // namespace naples::cli
