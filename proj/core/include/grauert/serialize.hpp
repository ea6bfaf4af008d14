#pragma once

#include <nlohmann/json.hpp>

#include "grauert/domain.hpp"
#include "grauert/hermitian.hpp"
#include "grauert/rootkit.hpp"

namespace grauert {

using Json = nlohmann::ordered_json;

/// Rationals serialize as [numerator, denominator].
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {schema_version, family, rank, ambient_dim, frame, roots: [{coords, mult}]}; exact round-trip.
Json to_json(const RootSystem& rs);
/// Throws DataError on a malformed document or schema mismatch.
RootSystem root_system_from_json(const Json& j);

/// {rank, ambient_dim, halfspaces: [{alpha, bound: "pi/2"}], vertices: [["pi/4", ...]]}.
Json to_json(const OmegaPolytope& p);

/// {space, verdict, envelope?, evidence: [...], remarks?}.
Json to_json(const Classification& c, const Catalog& catalog);

Json to_json(const Theorem7Result& r);

}  // namespace grauert
