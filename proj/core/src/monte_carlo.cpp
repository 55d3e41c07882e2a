#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "powerpoly/errors.hpp"
#include "powerpoly/polytope.hpp"

namespace powerpoly {

namespace {

struct DenseRow {
  std::vector<double> a;
  double b;
};

// Interval propagation: a_i x_i <= b - sum_{j != i} min(a_j x_j).
void tighten_box(const std::vector<DenseRow>& rows, std::vector<double>& lo, std::vector<double>& hi) {
  const double inf = std::numeric_limits<double>::infinity();
  const std::size_t d = lo.size();
  for (int round = 0; round < 64; ++round) {
    bool changed = false;
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < d; ++i) {
        if (r.a[i] == 0.0) continue;
        double rest = 0.0;
        for (std::size_t j = 0; j < d && std::isfinite(rest); ++j) {
          if (j == i || r.a[j] == 0.0) continue;
          rest += r.a[j] > 0 ? r.a[j] * lo[j] : r.a[j] * hi[j];
        }
        if (!std::isfinite(rest)) continue;
        const double bound = (r.b - rest) / r.a[i];
        if (r.a[i] > 0 && bound < hi[i] - 1e-15) { hi[i] = bound; changed = true; }
        if (r.a[i] < 0 && bound > lo[i] + 1e-15) { lo[i] = bound; changed = true; }
      }
    }
    if (!changed) break;
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (lo[i] == -inf || hi[i] == inf) {
      throw DegenerateError("cannot derive a bounding box for coordinate " + std::to_string(i + 1));
    }
    // guard the box against rounding in the propagation
    const double pad = 1e-12 * (1.0 + std::abs(lo[i]) + std::abs(hi[i]));
    lo[i] -= pad;
    hi[i] += pad;
  }
}

// Dense two-phase simplex with Bland's rule on y = x - shift >= 0, used to
// shrink the propagated box to the true coordinate ranges.
class BoxLp {
 public:
  BoxLp(const std::vector<DenseRow>& rows, const std::vector<double>& shift) : d_(shift.size()), m_(rows.size()) {
    std::vector<double> rhs(m_);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      double b = rows[i].b;
      for (std::size_t j = 0; j < d_; ++j) b -= rows[i].a[j] * shift[j];
      rhs[i] = b;
      if (b < 0) ++k;
    }
    art_ = d_ + m_;
    cols_ = art_ + k;
    t_.assign(m_, std::vector<double>(cols_ + 1, 0.0));
    basis_.resize(m_);
    std::size_t next = art_;
    for (std::size_t i = 0; i < m_; ++i) {
      const double s = rhs[i] < 0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < d_; ++j) t_[i][j] = s * rows[i].a[j];
      t_[i][d_ + i] = s;
      t_[i][cols_] = s * rhs[i];
      if (s < 0) {
        t_[i][next] = 1.0;
        basis_[i] = next++;
      } else {
        basis_[i] = d_ + i;
      }
    }
    std::vector<double> cost(cols_, 0.0);
    for (std::size_t j = art_; j < cols_; ++j) cost[j] = 1.0;
    run(t_, basis_, cost, cols_);
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= art_) infeasibility += t_[i][cols_];
    }
    feasible_ = infeasibility <= 1e-9;
    if (!feasible_) return;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < art_) continue;
      for (std::size_t j = 0; j < art_; ++j) {
        if (std::abs(t_[i][j]) > kEps) {
          pivot(t_, basis_, i, j);
          break;
        }
      }
    }
  }

  bool feasible() const { return feasible_; }

  // max of sign * y_j over the polytope
  double maximize(std::size_t j, double sign) const {
    auto t = t_;
    auto basis = basis_;
    std::vector<double> cost(cols_, 0.0);
    cost[j] = -sign;
    run(t, basis, cost, art_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis[i] == j) return sign * t[i][cols_];
    }
    return 0.0;
  }

 private:
  static constexpr double kEps = 1e-11;

  void pivot(std::vector<std::vector<double>>& t, std::vector<std::size_t>& basis, std::size_t r,
             std::size_t c) const {
    const double p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t[i][c] == 0.0) continue;
      const double f = t[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // minimizes cost over columns < allowed; stops on optimality
  void run(std::vector<std::vector<double>>& t, std::vector<std::size_t>& basis, const std::vector<double>& cost,
           std::size_t allowed) const {
    for (std::size_t iter = 0; iter < 50000; ++iter) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        double rc = cost[j];
        for (std::size_t i = 0; i < m_; ++i) rc -= cost[basis[i]] * t[i][j];
        if (rc < -1e-10) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return;
      std::size_t leave = m_;
      double best = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t[i][enter] <= kEps) continue;
        const double ratio = t[i][cols_] / t[i][enter];
        if (leave == m_ || ratio < best - 1e-12 || (ratio <= best + 1e-12 && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return;
      pivot(t, basis, leave, enter);
    }
  }

  std::size_t d_, m_, art_ = 0, cols_ = 0;
  std::vector<std::vector<double>> t_;
  std::vector<std::size_t> basis_;
  bool feasible_ = false;
};

void shrink_box(const std::vector<DenseRow>& rows, std::vector<double>& lo, std::vector<double>& hi) {
  const BoxLp lp(rows, lo);
  if (!lp.feasible()) throw InconclusiveError("polytope is empty");
  const std::size_t d = lo.size();
  std::vector<double> new_lo(d), new_hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    new_lo[j] = lo[j] - lp.maximize(j, -1.0);
    new_hi[j] = lo[j] + lp.maximize(j, 1.0);
  }
  for (std::size_t j = 0; j < d; ++j) {
    const double pad = 1e-9 * (1.0 + std::abs(new_lo[j]) + std::abs(new_hi[j]));
    lo[j] = std::max(lo[j], new_lo[j] - pad);
    hi[j] = std::min(hi[j], new_hi[j] + pad);
  }
}

}  // namespace

McEstimate estimate_centroid_mc(const HPolytope& p, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw InputError("Monte Carlo estimate needs at least one sample");
  const std::size_t d = p.dim();
  McEstimate est;
  est.samples = samples;
  if (d == 0) {
    if (!p.contains(RatVector{})) throw InconclusiveError("polytope is empty");
    est.accepted = samples;
    return est;
  }

  std::vector<DenseRow> rows;
  rows.reserve(p.constraints().size());
  for (const auto& c : p.constraints()) {
    DenseRow r{std::vector<double>(d), c.b.to_double()};
    for (std::size_t i = 0; i < d; ++i) r.a[i] = c.a[i].to_double();
    rows.push_back(std::move(r));
  }
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> lo(d, -inf), hi(d, inf);
  tighten_box(rows, lo, hi);
  shrink_box(rows, lo, hi);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(d), total(d, 0.0), squares(d, 0.0);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < d; ++i) x[i] = lo[i] + (hi[i] - lo[i]) * unit(rng);
    bool inside = true;
    for (const auto& r : rows) {
      double lhs = 0.0;
      for (std::size_t i = 0; i < d; ++i) lhs += r.a[i] * x[i];
      if (lhs > r.b) { inside = false; break; }
    }
    if (!inside) continue;
    ++est.accepted;
    for (std::size_t i = 0; i < d; ++i) {
      total[i] += x[i];
      squares[i] += x[i] * x[i];
    }
  }
  if (est.accepted == 0) throw InconclusiveError("no Monte Carlo sample fell inside the polytope");

  const double k = static_cast<double>(est.accepted);
  est.mean.resize(d);
  est.standard_error.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    est.mean[i] = total[i] / k;
    const double var = k > 1 ? std::max(0.0, (squares[i] - k * est.mean[i] * est.mean[i]) / (k - 1)) : 0.0;
    est.standard_error[i] = std::sqrt(var / k);
  }
  return est;
}

}  // namespace powerpoly
