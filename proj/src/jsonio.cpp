#include "grlie/jsonio.hpp"

namespace grlie {

using nlohmann::json;

std::string config_hash(const std::string& config) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : config) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

json base(const std::string& config_hash) {
  return json{{"schema_version", kSchemaVersion},
              {"tool_version", kToolVersion},
              {"config_hash", config_hash}};
}

}  // namespace

json certificate_json(const DegreeCertificate& cert, const std::string& cfg) {
  json j = base(cfg);
  j["degree"] = cert.degree;
  j["ambient_rank"] = cert.ambient_rank;
  j["span_count"] = cert.span_count;
  j["span_rank"] = cert.span_rank;
  j["quotient_rank"] = cert.quotient_rank;
  j["torsion_free"] = cert.torsion_free;
  j["method"] = method_name(cert.method);
  json divisors = json::array();
  for (const auto& [value, count] : cert.elementary_divisors)
    divisors.push_back({{"value", value.get_str()}, {"count", count}});
  j["elementary_divisors"] = divisors;
  j["primes"] = cert.primes;
  if (cert.rational_rank) j["rational_rank"] = *cert.rational_rank;
  if (!cert.modular_ranks.empty()) j["modular_ranks"] = cert.modular_ranks;
  return j;
}

json report_json(const VerifyReport& rep, const std::string& cfg) {
  json j = base(cfg);
  j["kind"] = rep.kind;
  j["pass"] = rep.pass();
  json items = json::array();
  for (const auto& item : rep.items) {
    json ji = {{"name", item.name}, {"pass", item.pass}};
    if (!item.detail.empty()) ji["detail"] = item.detail;
    items.push_back(ji);
  }
  j["items"] = items;
  j["warnings"] = rep.warnings;
  return j;
}

json relator_report_json(const RelatorImageReport& rep, const std::string& cfg) {
  json j = base(cfg);
  j["kind"] = "magnus";
  j["pass"] = rep.spans_match;
  json items = json::array();
  for (const auto& img : rep.images)
    items.push_back({{"index", img.index},
                     {"relator", img.relator},
                     {"computed", img.computed.str()},
                     {"printed", img.printed.str()},
                     {"matches_printed", img.matches_printed}});
  j["images"] = items;
  j["spans_match"] = rep.spans_match;
  j["warnings"] = rep.warnings;
  return j;
}

}  // namespace grlie
