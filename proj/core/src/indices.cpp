#include "powerpoly/indices.hpp"

#include <algorithm>

#include "powerpoly/errors.hpp"
#include "powerpoly/polytope.hpp"

namespace powerpoly {

std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::kAverageWeight: return "avg-weight";
    case IndexKind::kAverageRepresentation: return "avg-rep";
    case IndexKind::kShapleyShubik: return "ssi";
  }
  return "unknown";
}

IndexKind parse_index_kind(std::string_view name) {
  if (name == "avg-weight") return IndexKind::kAverageWeight;
  if (name == "avg-rep") return IndexKind::kAverageRepresentation;
  if (name == "ssi") return IndexKind::kShapleyShubik;
  throw InputError("unknown index kind '" + std::string(name) + "' (expected ssi, avg-weight or avg-rep)");
}

IndexVector shapley_shubik(const WeightedGame& g) {
  const std::size_t n = g.size();
  // swings[i][k]: coalitions S of size k without i where i is pivotal
  std::vector<std::vector<unsigned long long>> swings(n, std::vector<unsigned long long>(n, 0));
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t s = 0; s < count; ++s) {
    const Coalition c(s);
    if (g.is_winning(c)) continue;
    for (Voter i = 0; i < n; ++i) {
      if (!c.contains(i) && g.is_winning(c.with(i))) ++swings[i][c.size()];
    }
  }
  std::vector<BigInt> fact(n + 1, BigInt(1));
  for (std::size_t k = 1; k <= n; ++k) fact[k] = fact[k - 1] * static_cast<unsigned long>(k);

  IndexVector out{IndexKind::kShapleyShubik, false, RatVector(n), std::nullopt};
  for (Voter i = 0; i < n; ++i) {
    BigInt acc(0);
    for (std::size_t k = 0; k < n; ++k) {
      if (swings[i][k]) acc += fact[k] * fact[n - 1 - k] * static_cast<unsigned long>(swings[i][k]);
    }
    out.values[i] = Rational(acc, fact[n]);
  }
  return out;
}

namespace {

// Completes a chart point (x_1..x_{n-1}) with x_n = 1 - sum.
RatVector complete_chart(const RatVector& chart, std::size_t offset, std::size_t n) {
  RatVector w(n);
  Rational rest(1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    w[i] = chart[offset + i];
    rest -= w[i];
  }
  w[n - 1] = rest;
  return w;
}

void check_exact_scale(const WeightedGame& g) {
  if (g.size() > kMaxExactVoters) {
    throw ScaleError("exact centroid computation supports at most " + std::to_string(kMaxExactVoters) +
                     " voters; use the Monte Carlo estimator instead");
  }
}

}  // namespace

IndexVector average_weight_index(const WeightedGame& g) {
  check_exact_scale(g);
  const RatVector c = centroid(build_weight_polytope(g));
  return IndexVector{IndexKind::kAverageWeight, false, complete_chart(c, 0, g.size()), std::nullopt};
}

IndexVector average_representation_index(const WeightedGame& g) {
  check_exact_scale(g);
  const RatVector c = centroid(build_representation_polytope(g));
  return IndexVector{IndexKind::kAverageRepresentation, false, complete_chart(c, 1, g.size()), c[0]};
}

IndexVector compute_index(IndexKind kind, const WeightedGame& g) {
  switch (kind) {
    case IndexKind::kAverageWeight: return average_weight_index(g);
    case IndexKind::kAverageRepresentation: return average_representation_index(g);
    case IndexKind::kShapleyShubik: return shapley_shubik(g);
  }
  throw InputError("unknown index kind");
}

IndexVector dummy_revealing(IndexKind kind, const WeightedGame& g) {
  const ReducedGame reduced = dummy_reduced(g);
  IndexVector base = compute_index(kind, reduced.game);
  IndexVector out{kind, true, RatVector(g.size(), Rational(0)), base.avg_quota};
  for (std::size_t k = 0; k < reduced.original_voter.size(); ++k) {
    out.values[reduced.original_voter[k]] = base.values[k];
  }
  return out;
}

bool is_representation_compatible_at(const WeightedGame& g, const IndexVector& x) {
  return is_feasible_weights(g, x.values);
}

bool are_symmetric(const WeightedGame& g, Voter i, Voter j) {
  if (i == j) return true;
  const std::uint32_t count = std::uint32_t{1} << g.size();
  for (std::uint32_t s = 0; s < count; ++s) {
    const Coalition c(s);
    if (c.contains(i) == c.contains(j)) continue;
    const Coalition swapped = c.contains(i) ? c.without(i).with(j) : c.without(j).with(i);
    if (g.is_winning(c) != g.is_winning(swapped)) return false;
  }
  return true;
}

AxiomReport check_axioms(const WeightedGame& g, const IndexVector& x) {
  const std::size_t n = g.size();
  if (x.values.size() != n) throw InputError("index vector length does not match the game");
  AxiomReport r;
  r.symmetric = true;
  for (Voter i = 0; i < n && r.symmetric; ++i) {
    for (Voter j = i + 1; j < n && r.symmetric; ++j) {
      // equal weights always give a structural symmetry; the structural test covers both
      if (x.values[i] != x.values[j] && are_symmetric(g, i, j)) r.symmetric = false;
    }
  }
  r.positive = std::all_of(x.values.begin(), x.values.end(), [](const Rational& v) { return v.sign() >= 0; }) &&
               std::any_of(x.values.begin(), x.values.end(), [](const Rational& v) { return !v.is_zero(); });
  r.efficient = sum(x.values) == Rational(1);
  r.has_dummies = !g.dummies().empty();
  r.dummy_property = std::all_of(g.dummies().begin(), g.dummies().end(),
                                 [&](Voter i) { return x.values[i].is_zero(); });
  r.representation_compatible = is_representation_compatible_at(g, x);
  return r;
}

}  // namespace powerpoly
