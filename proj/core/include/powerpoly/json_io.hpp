#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "powerpoly/catalog.hpp"
#include "powerpoly/indices.hpp"
#include "powerpoly/integer_reps.hpp"
#include "powerpoly/polytope.hpp"

namespace powerpoly {

using Json = nlohmann::json;

/// {"num": "-3", "den": "4"}
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// ["p/q", ...]
Json fractions_json(const RatVector& v);
/// ["0.611111", ...]
Json decimals_json(const RatVector& v, int places);
RatVector fractions_from_json(const Json& j);

Json axioms_to_json(const AxiomReport& r);

/// {game, kind, dummy_revealing, values, decimals, avg_quota?, axioms?}
Json index_to_json(const WeightedGame& g, const IndexVector& x, int places,
                   const std::optional<AxiomReport>& axioms = std::nullopt);

/// {dim, constraints:[{a, b, label}], vertices, volume, moments}
Json polytope_to_json(const HPolytope& p, const Integrals& integrals);

Json grid_summary_to_json(const GridSummary& s, int places);
Json convergence_to_json(const WeightedGame& g, const ConvergenceTable& t, int places);

/// {"rows": [{game, avg_weight:{values, decimals}, avg_rep:{values, decimals, avg_quota}}]}
Json table_to_json(const std::vector<TableRow>& rows, int places);
std::vector<TableRow> table_from_json(const Json& j);

}  // namespace powerpoly
