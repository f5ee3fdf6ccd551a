#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chromaspec/constructive.hpp"
#include "chromaspec/pingpong.hpp"
#include "chromaspec/spectrum.hpp"
#include "chromaspec/verify.hpp"

namespace chromaspec {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Json to_json(const Vec2& v);
Json to_json(const Mat2& m);
Json to_json(const Witness& w);
Json to_json(const Regime& r);
Json to_json(const Certificate& c);
Json to_json(const Spectrum& s);
Json to_json(const ConstructiveReport& r, bool include_values = true);
Json to_json(const LowerBoundAudit& a);
Json to_json(const std::vector<LemmaResult>& results);

/// Inverse of to_json(Witness); throws DomainError on malformed input.
Witness witness_from_json(const Json& j);

inline constexpr const char* kSpectrumCsvHeader = "q,n,class,count";
/// The data row matching kSpectrumCsvHeader.
std::string spectrum_csv_row(const Spectrum& s);

}  // namespace chromaspec
