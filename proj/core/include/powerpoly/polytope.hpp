#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "powerpoly/game.hpp"
#include "powerpoly/rational.hpp"

namespace powerpoly {

/// a . x <= b
struct Constraint {
  RatVector a;
  Rational b;
  std::string label;
};

/// Closed polyhedron {x in Q^d : a_k . x <= b_k for all k}.
class HPolytope {
 public:
  explicit HPolytope(std::size_t dim) : dim_(dim) {}

  void add(RatVector a, Rational b, std::string label);

  std::size_t dim() const { return dim_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  Rational slack(std::size_t k, std::span<const Rational> x) const;
  bool contains(std::span<const Rational> x) const;

 private:
  std::size_t dim_;
  std::vector<Constraint> constraints_;
};

struct Vertex {
  RatVector coords;
  /// Indices of the constraints of the source polytope tight at coords.
  std::vector<std::size_t> active;
};

/// d+1 indices into a vertex list.
struct Simplex {
  std::vector<std::size_t> vertices;
};

/// Normalized weight polyhedron in the chart (w_1, ..., w_{n-1}) with
/// w_n = 1 - sum_{i<n} w_i.
HPolytope build_weight_polytope(const WeightedGame& g);

/// Normalized representation polyhedron in the chart (q, w_1, ..., w_{n-1}).
HPolytope build_representation_polytope(const WeightedGame& g);

/// Drops trivially satisfied rows, scaled duplicates, and rows implied by a
/// componentwise-larger row over the explicitly nonnegative coordinates.
/// The feasible set is unchanged.
HPolytope remove_redundant(const HPolytope& p);

/// Upper bound on the number of d-subsets the vertex search may visit.
inline constexpr double kMaxVertexCandidates = 5.0e7;

/// All vertices of a bounded polytope, sorted lexicographically. Throws
/// ScaleError if the candidate count exceeds kMaxVertexCandidates.
std::vector<Vertex> enumerate_vertices(const HPolytope& p);

/// Affine dimension of the given points (-1 for an empty set).
int affine_dimension(const std::vector<Vertex>& vertices, std::span<const std::size_t> subset);

enum class ApexRule { kLexSmallest, kLexLargest };

/// Triangulation by recursive facet coning: each face is coned from its
/// apex vertex over the triangulations of the facets not containing it.
/// Returns nothing if the vertices are not full-dimensional.
std::vector<Simplex> triangulate(const HPolytope& p, const std::vector<Vertex>& vertices,
                                 ApexRule rule = ApexRule::kLexSmallest);

Rational simplex_volume(const std::vector<Vertex>& vertices, const Simplex& s);

struct Integrals {
  Rational volume;
  /// integral of x_i over the polytope, per coordinate
  RatVector moments;
  std::vector<Vertex> vertices;
  std::vector<Simplex> simplices;
};

/// Volume and first moments; a 0-dimensional polytope has volume 1.
Integrals integrate(const HPolytope& p, ApexRule rule = ApexRule::kLexSmallest);

Rational volume(const HPolytope& p);
RatVector moments(const HPolytope& p);
/// Throws DegenerateError for a positive-dimensional polytope of zero volume.
RatVector centroid(const HPolytope& p);
RatVector centroid(const Integrals& integrals);

struct McEstimate {
  std::vector<double> mean;
  std::vector<double> standard_error;
  std::size_t samples = 0;
  std::size_t accepted = 0;
};

/// Rejection sampling from the tight bounding box (interval propagation,
/// then one LP per coordinate bound). Deterministic for a fixed seed. Throws
/// InconclusiveError if no sample lands inside.
McEstimate estimate_centroid_mc(const HPolytope& p, std::size_t samples, std::uint64_t seed);

}  // namespace powerpoly
