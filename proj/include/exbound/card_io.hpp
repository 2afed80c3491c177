#pragma once

// Field-card JSON files.

#include "exbound/field.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace exbound {

inline constexpr const char* kCardSchema = "exbound.fieldcard/1";

/// Malformed card file; one diagnostic per offending field path.
class CardFormatError : public FieldError
{
public:
    explicit CardFormatError(std::vector<std::string> diagnostics);
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    std::vector<std::string> diagnostics_;
};

nlohmann::json card_to_json(const FieldCard& card);
/// Parses and then validates; throws CardFormatError or CardValidationError.
FieldCard card_from_json(const nlohmann::json& j);

FieldCard load_card(const std::filesystem::path& path);
void save_card(const FieldCard& card, const std::filesystem::path& path);

// Shared JSON helpers for big integers and ring elements.
nlohmann::json integer_to_json(const mpz_class& value);
mpz_class integer_from_json(const nlohmann::json& j);

}  // namespace exbound
