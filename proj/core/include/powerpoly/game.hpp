#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powerpoly/coalition.hpp"
#include "powerpoly/rational.hpp"

namespace powerpoly {

/// A weighted majority game [q; w_1, ..., w_n]. The coalition structure
/// (minimal winning, maximal losing, dummies) is derived on construction by
/// exhaustive enumeration of all 2^n coalitions.
class WeightedGame {
 public:
  static constexpr std::size_t kMaxVoters = 16;

  /// Throws InputError unless n >= 1, q > 0, all weights >= 0 and w(N) >= q.
  WeightedGame(Rational quota, RatVector weights);

  /// Parses "[q; w1, w2, ..., wn]"; entries are integers or "a/b" fractions.
  static WeightedGame parse(std::string_view text);

  std::size_t size() const { return weights_.size(); }
  const Rational& quota() const { return quota_; }
  const RatVector& weights() const { return weights_; }
  Rational total_weight() const { return sum(weights_); }

  Rational weight_of(Coalition s) const;
  bool is_winning(Coalition s) const { return winning_[s.bits()]; }

  /// Sorted lexicographically by member list.
  const std::vector<Coalition>& minimal_winning() const { return minimal_winning_; }
  const std::vector<Coalition>& maximal_losing() const { return maximal_losing_; }
  /// Ascending voter ids.
  const std::vector<Voter>& dummies() const { return dummies_; }
  bool is_dummy(Voter i) const;

  /// True when every weight and the quota is an integer.
  bool has_integer_representation() const;

  /// Same voter count and identical winning coalitions.
  bool same_structure(const WeightedGame& other) const;

  /// "[3; 2, 1, 1]"
  std::string str() const;
  /// "[3;2,1,1]"
  std::string compact_str() const;

 private:
  Rational quota_;
  RatVector weights_;
  std::vector<bool> winning_;
  std::vector<Coalition> minimal_winning_;
  std::vector<Coalition> maximal_losing_;
  std::vector<Voter> dummies_;
};

struct NormalizedRepresentation {
  Rational quota;
  RatVector weights;
};

struct ReducedGame {
  WeightedGame game;
  /// original_voter[k] is the id in the source game of reduced voter k.
  std::vector<Voter> original_voter;
};

/// The game restricted to its non-dummy voters (same quota, same weights).
ReducedGame dummy_reduced(const WeightedGame& g);

/// A weighted representation of v*(S) = 1 - v(N \ S).
WeightedGame dual_game(const WeightedGame& g);

/// x(S) > x(T) for every minimal winning S and maximal losing T.
bool is_feasible_weights(const WeightedGame& g, std::span<const Rational> x);

/// x(S) >= quota for all minimal winning S and x(T) < quota for all maximal
/// losing T.
bool is_representation(const WeightedGame& g, const Rational& quota, std::span<const Rational> x);

NormalizedRepresentation normalize(const WeightedGame& g);

Rational coalition_sum(std::span<const Rational> x, Coalition s);

/// Exact sum of |x_i - y_i|; throws InputError on length mismatch.
Rational l1_distance(std::span<const Rational> x, std::span<const Rational> y);

}  // namespace powerpoly
