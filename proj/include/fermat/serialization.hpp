/**
 * @file serialization.hpp
 * @brief JSON forms of the report types. Big integers are decimal strings,
 *        complex numbers are [re, im] pairs.
 */
#pragma once

#include <json.hpp>

#include <optional>

#include "fermat/ed_formulas.hpp"
#include "fermat/expcyclo.hpp"
#include "fermat/homotopy.hpp"
#include "fermat/real_experiments.hpp"

namespace fermat {

using Json = nlohmann::json;

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

void to_json(Json& j, const DeltaTerm& t);
void from_json(const Json& j, DeltaTerm& t);
void to_json(Json& j, const EDBreakdown& b);
void from_json(const Json& j, EDBreakdown& b);

void to_json(Json& j, const TrackingOptions& o);
void from_json(const Json& j, TrackingOptions& o);
void to_json(Json& j, const EndpointCounts& c);
void from_json(const Json& j, EndpointCounts& c);
void to_json(Json& j, const VerificationReport& r);
void from_json(const Json& j, VerificationReport& r);

void to_json(Json& j, const RealScanReport& r);
void from_json(const Json& j, RealScanReport& r);

/// List of {"exponents": [...], "coefficient": "<decimal>"}, descending graded lex order.
Json polynomial_to_json(const SparseIntegerPolynomial& f);
/// num_vars is taken from the first term unless given; required for the empty list.
SparseIntegerPolynomial polynomial_from_json(const Json& j, std::optional<std::size_t> num_vars = std::nullopt);

Json scaled_vanishing_to_json(const ScaledVanishingResult& r);

}  // namespace fermat
