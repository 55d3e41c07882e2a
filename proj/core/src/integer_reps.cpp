#include "powerpoly/integer_reps.hpp"

#include <algorithm>
#include <limits>

#include "powerpoly/errors.hpp"

namespace powerpoly {

namespace {

struct Bounds {
  std::int64_t min_winning;
  std::int64_t max_losing;
};

std::int64_t masked_sum(std::span<const std::int64_t> x, std::uint32_t bits) {
  std::int64_t s = 0;
  for (; bits; bits &= bits - 1) s += x[static_cast<std::size_t>(std::countr_zero(bits))];
  return s;
}

class CompositionWalker {
 public:
  CompositionWalker(const WeightedGame& g, std::int64_t total, bool with_quota)
      : n_(g.size()), total_(total), with_quota_(with_quota), x_(g.size(), 0), sums_(g.size(), 0) {
    for (Coalition s : g.minimal_winning()) winning_.push_back(s.bits());
    for (Coalition t : g.maximal_losing()) losing_.push_back(t.bits());
  }

  GridSummary run() {
    assign(0, total_);
    GridSummary out;
    out.total = total_;
    out.count = count_;
    out.with_quota = with_quota_;
    if (count_ == 0) return out;
    const Rational denom = Rational(BigInt(std::to_string(mass_), 10), BigInt(1)) * Rational(total_);
    out.average.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      out.average.push_back(Rational(BigInt(std::to_string(sums_[i]), 10), BigInt(1)) / denom);
    }
    if (with_quota_) {
      out.avg_quota = Rational(BigInt(std::to_string(quota_sum_), 10), BigInt(1)) / denom;
    }
    return out;
  }

 private:
  // Voters [0, k) are assigned; `left` weight remains for voters [k, n).
  bool hopeless(std::size_t k, std::int64_t left) const {
    const std::uint32_t assigned = k >= 32 ? ~0U : (1U << k) - 1;
    for (std::uint32_t t : losing_) {
      const std::int64_t lower_t = masked_sum(x_, t & assigned);
      for (std::uint32_t s : winning_) {
        std::int64_t upper_s = masked_sum(x_, s & assigned);
        if (s & ~assigned) upper_s += left;
        if (upper_s <= lower_t) return true;
      }
    }
    return false;
  }

  void assign(std::size_t k, std::int64_t left) {
    if (k + 1 == n_) {
      x_[k] = left;
      visit();
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      x_[k] = v;
      if (k + 2 < n_ && hopeless(k + 1, left - v)) continue;
      assign(k + 1, left - v);
    }
    x_[k] = 0;
  }

  void visit() {
    std::int64_t min_w = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t s : winning_) min_w = std::min(min_w, masked_sum(x_, s));
    std::int64_t max_l = std::numeric_limits<std::int64_t>::min();
    for (std::uint32_t t : losing_) max_l = std::max(max_l, masked_sum(x_, t));
    if (min_w <= max_l) return;
    const std::int64_t mult = with_quota_ ? (min_w - max_l) : 1;
    count_ += static_cast<std::uint64_t>(mult);
    mass_ += mult;
    for (std::size_t i = 0; i < n_; ++i) sums_[i] += mult * x_[i];
    if (with_quota_) {
      // quotas max_l+1 .. min_w
      quota_sum_ += (max_l + 1 + min_w) * mult / 2;
    }
  }

  std::size_t n_;
  std::int64_t total_;
  bool with_quota_;
  std::vector<std::uint32_t> winning_;
  std::vector<std::uint32_t> losing_;
  std::vector<std::int64_t> x_;
  std::vector<std::int64_t> sums_;
  std::uint64_t count_ = 0;
  std::int64_t mass_ = 0;
  std::int64_t quota_sum_ = 0;
};

GridSummary run_grid(const WeightedGame& g, std::int64_t total, bool with_quota) {
  if (total < 1) throw InputError("weight total must be at least 1");
  double compositions = 1.0;
  for (std::size_t i = 1; i < g.size(); ++i) {
    compositions = compositions * static_cast<double>(total + static_cast<std::int64_t>(i)) / static_cast<double>(i);
  }
  if (compositions > kMaxCompositions) {
    throw ScaleError("integer grid of total " + std::to_string(total) + " over " + std::to_string(g.size()) +
                     " voters is too large to enumerate");
  }
  return CompositionWalker(g, total, with_quota).run();
}

}  // namespace

GridSummary enumerate_integer_feasible_weights(const WeightedGame& g, std::int64_t total) {
  return run_grid(g, total, false);
}

GridSummary enumerate_integer_representations(const WeightedGame& g, std::int64_t total) {
  return run_grid(g, total, true);
}

std::int64_t integer_quota_count(const WeightedGame& g, std::span<const std::int64_t> x) {
  if (x.size() != g.size()) throw InputError("weight vector length does not match the game");
  std::int64_t min_w = std::numeric_limits<std::int64_t>::max();
  for (Coalition s : g.minimal_winning()) min_w = std::min(min_w, masked_sum(x, s.bits()));
  std::int64_t max_l = std::numeric_limits<std::int64_t>::min();
  for (Coalition t : g.maximal_losing()) max_l = std::max(max_l, masked_sum(x, t.bits()));
  return std::max<std::int64_t>(0, min_w - max_l);
}

ConvergenceTable convergence_experiment(const WeightedGame& g, std::span<const std::int64_t> totals,
                                        bool with_quota) {
  if (!std::is_sorted(totals.begin(), totals.end())) throw InputError("totals must be ascending");
  ConvergenceTable table;
  table.with_quota = with_quota;
  table.limit = with_quota ? average_representation_index(g) : average_weight_index(g);
  for (std::int64_t t : totals) {
    GridSummary s = with_quota ? enumerate_integer_representations(g, t) : enumerate_integer_feasible_weights(g, t);
    Rational dist = s.count ? l1_distance(s.average, table.limit.values) : Rational(0);
    table.rows.push_back(ConvergenceRow{std::move(s), std::move(dist)});
  }
  return table;
}

}  // namespace powerpoly
