#ifndef SYMEDGE_SERIALIZE_HPP
#define SYMEDGE_SERIALIZE_HPP

#include <string>

#include "symedge/betti.hpp"
#include "symedge/splitting.hpp"

namespace symedge {

/// Betti table as JSON:
/// {"convention":"quotient","ambient":3,"field":"gf:32003",
///  "entries":[{"i":1,"j":5,"beta":3},...]}
std::string betti_to_json(const BettiTable& table);

/// CSV mirror with header "i,j,beta", entries sorted by (i, j).
std::string betti_to_csv(const BettiTable& table);

/// Macaulay-style triangle (rows j-i, columns i) with the convention marked.
std::string betti_to_pretty(const BettiTable& table);

std::string certificate_to_json(const SplitCertificate& cert);
SplitCertificate certificate_from_json(const std::string& text);

std::string verify_report_to_json(const VerifyReport& report);
std::string verify_report_to_pretty(const VerifyReport& report);

std::string parallel_report_to_json(const ParallelBoundReport& report);
std::string parallel_report_to_pretty(const ParallelBoundReport& report);

}  // namespace symedge

#endif  // SYMEDGE_SERIALIZE_HPP
