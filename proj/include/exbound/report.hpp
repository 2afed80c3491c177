#pragma once

// JSON reports. Numbers are decimal strings; certified intervals are
// {"mid", "rad"}; integers beyond a digit threshold are summarized by their
// edges and a SHA-256 digest of the decimal string.

#include "exbound/exceptional.hpp"
#include "exbound/gate.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace exbound {

inline constexpr const char* kExceptionalSchema = "exbound.exceptional/1";
inline constexpr const char* kCertificateSchema = "exbound.certificate/1";
inline constexpr const char* kInvariantsSchema = "exbound.invariants/1";
inline constexpr const char* kWeilSchema = "exbound.weil/1";
inline constexpr const char* kBoundSchema = "exbound.bound/1";
inline constexpr const char* kQuaternionSchema = "exbound.quaternion/1";

std::string sha256_hex(const std::string& data);

struct IntegerFormat
{
    std::size_t digit_threshold = 10'000;
    bool full_digits = false;
    std::size_t edge_digits = 50;
};

/// {"sign", "digits", "decimal"} or, above the threshold,
/// {"sign", "digits", "leading", "trailing", "sha256"}.
nlohmann::json integer_summary(const mpz_class& value, const IntegerFormat& format = {});
nlohmann::json interval_json(const Interval& x, int digits = 30);
nlohmann::json config_json(const FieldCard& card, const ExceptionalConfig& config);
nlohmann::json field_summary_json(const FieldCard& card);
nlohmann::json constants_json(const BoundConstants& c);

struct ReportExtras
{
    const PrimeListing* listing = nullptr;
    const std::vector<MembershipResult>* queries = nullptr;
    const BestEffortFactors* best_effort = nullptr;
};

nlohmann::json exceptional_report(const FieldCard& card, const ExceptionalRun& run, const ExceptionalConfig& config,
                                  const ReportExtras& extras = {});
nlohmann::json certificate_json(const Certificate& cert, const ExceptionalConfig& config);

/// Structural check of any report written by this library; returns one line
/// per problem, empty when the document conforms to its schema tag.
std::vector<std::string> validate_report(const nlohmann::json& report);

}  // namespace exbound
