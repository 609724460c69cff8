#ifndef NOVBOTT_DOCUMENTS_HPP
#define NOVBOTT_DOCUMENTS_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "novbott/morse_bott.hpp"
#include "novbott/spectral.hpp"
#include "novbott/twisted.hpp"

namespace novbott {

using Json = nlohmann::ordered_json;

// Document formats. Rationals are "p/q" strings in exact contexts; floats
// appear only in period_basis and in spectral outputs.
inline constexpr const char* kComplexFormat = "novbott/complex";
inline constexpr const char* kMorseFormat = "novbott/morse";
inline constexpr const char* kFamilyFormat = "novbott/family";
inline constexpr const char* kBettiFormat = "novbott/betti";

// Parse failures and schema violations throw invalid_input with the
// offending location.
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

std::string document_format(const Json& doc);

ComplexDescription complex_from_json(const Json& doc);

struct MorseDocument {
    std::string name;
    MorseData data;
};
MorseDocument morse_from_json(const Json& doc);

DeformationFamily family_from_json(const Json& doc);

struct BettiDocument {
    std::string name;
    std::size_t fiber_dim = 1;
    std::vector<std::size_t> betti;
};
BettiDocument betti_from_json(const Json& doc);

}  // namespace novbott

#endif
