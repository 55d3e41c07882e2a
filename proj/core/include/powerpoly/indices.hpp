#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "powerpoly/game.hpp"
#include "powerpoly/rational.hpp"

namespace powerpoly {

/// Voter counts for which the exact polytope pipeline is known to finish in
/// seconds; larger games are attempted up to kMaxExactVoters.
inline constexpr std::size_t kGuaranteedWeightVoters = 5;
inline constexpr std::size_t kGuaranteedRepresentationVoters = 4;
inline constexpr std::size_t kMaxExactVoters = 8;

enum class IndexKind { kAverageWeight, kAverageRepresentation, kShapleyShubik };

/// "avg-weight", "avg-rep", "ssi"
std::string_view to_string(IndexKind kind);
/// Throws InputError for unknown names.
IndexKind parse_index_kind(std::string_view name);

struct IndexVector {
  IndexKind kind = IndexKind::kShapleyShubik;
  bool dummy_revealing = false;
  RatVector values;
  /// Quota coordinate of the representation centroid (avg-rep only).
  std::optional<Rational> avg_quota;
};

/// Subset formula with coefficients |S|!(n-1-|S|)!/n!.
IndexVector shapley_shubik(const WeightedGame& g);

/// Centroid of the normalized weight polyhedron. Throws ScaleError beyond
/// kMaxExactVoters or when vertex enumeration exceeds its budget.
IndexVector average_weight_index(const WeightedGame& g);

/// Weight part of the centroid of the normalized representation polyhedron,
/// together with its quota part.
IndexVector average_representation_index(const WeightedGame& g);

IndexVector compute_index(IndexKind kind, const WeightedGame& g);

/// The base index of the dummy-reduced game, mapped back with exact zeros
/// on the dummies.
IndexVector dummy_revealing(IndexKind kind, const WeightedGame& g);

bool is_representation_compatible_at(const WeightedGame& g, const IndexVector& x);

struct AxiomReport {
  bool symmetric = false;
  bool positive = false;
  bool efficient = false;
  /// Vacuously true when the game has no dummies.
  bool dummy_property = false;
  bool has_dummies = false;
  bool representation_compatible = false;
};

/// Per-game finite checks. Symmetry is judged over every transposition of
/// voters that is an automorphism of the coalition structure.
AxiomReport check_axioms(const WeightedGame& g, const IndexVector& x);

/// True iff swapping voters i and j maps winning coalitions to winning ones.
bool are_symmetric(const WeightedGame& g, Voter i, Voter j);

}  // namespace powerpoly
