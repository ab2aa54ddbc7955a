#ifndef GRLIE_JSONIO_HPP
#define GRLIE_JSONIO_HPP

#include <string>

#include "json.hpp"

#include "grlie/ideal.hpp"
#include "grlie/report.hpp"

namespace grlie {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

nlohmann::json certificate_json(const DegreeCertificate& cert, const std::string& config_hash);
nlohmann::json report_json(const VerifyReport& rep, const std::string& config_hash);
nlohmann::json relator_report_json(const RelatorImageReport& rep, const std::string& config_hash);

// stable hex digest of the config string (FNV-1a)
std::string config_hash(const std::string& config);

}  // namespace grlie

#endif
