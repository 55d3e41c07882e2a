#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "powerpoly/game.hpp"
#include "powerpoly/indices.hpp"
#include "powerpoly/rational.hpp"

namespace powerpoly {

/// Nonnegative integer weight vectors (optionally with an integer quota)
/// summing to a fixed total.
struct GridSummary {
  std::int64_t total = 0;
  std::uint64_t count = 0;
  /// Average weight divided by total; empty when count == 0.
  RatVector average;
  bool with_quota = false;
  /// Average quota divided by total (with_quota only).
  std::optional<Rational> avg_quota;
};

/// Upper bound on compositions visited per call.
inline constexpr double kMaxCompositions = 2.0e9;

/// Integer vectors x >= 0 with sum(x) = total that are feasible weights.
GridSummary enumerate_integer_feasible_weights(const WeightedGame& g, std::int64_t total);

/// Pairs (q', x) with integer q' and x as above forming a representation.
GridSummary enumerate_integer_representations(const WeightedGame& g, std::int64_t total);

/// Number of integer quotas q' making (q'; x) a representation:
/// max(0, min winning weight - max losing weight).
std::int64_t integer_quota_count(const WeightedGame& g, std::span<const std::int64_t> x);

struct ConvergenceRow {
  GridSummary summary;
  Rational l1_to_limit;
};

struct ConvergenceTable {
  bool with_quota = false;
  /// Average weight index, or average representation index with quota.
  IndexVector limit;
  std::vector<ConvergenceRow> rows;
};

ConvergenceTable convergence_experiment(const WeightedGame& g, std::span<const std::int64_t> totals,
                                        bool with_quota = false);

}  // namespace powerpoly
