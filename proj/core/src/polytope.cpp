#include "powerpoly/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "powerpoly/errors.hpp"
#include "powerpoly/matrix.hpp"

namespace powerpoly {

void HPolytope::add(RatVector a, Rational b, std::string label) {
  if (a.size() != dim_) throw std::invalid_argument("constraint has wrong dimension");
  constraints_.push_back(Constraint{std::move(a), std::move(b), std::move(label)});
}

Rational HPolytope::slack(std::size_t k, std::span<const Rational> x) const {
  const Constraint& c = constraints_[k];
  Rational lhs;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!c.a[i].is_zero()) lhs += c.a[i] * x[i];
  }
  return c.b - lhs;
}

bool HPolytope::contains(std::span<const Rational> x) const {
  for (std::size_t k = 0; k < constraints_.size(); ++k) {
    if (slack(k, x).sign() < 0) return false;
  }
  return true;
}

namespace {

// Coalition weight w(S) in a chart where the last voter is eliminated:
// w(S) = coeff . (w_1..w_{n-1}) + constant.
struct ChartForm {
  RatVector coeff;
  Rational constant;
};

ChartForm chart_form(Coalition s, std::size_t n) {
  const Voter last = n - 1;
  const long long has_last = s.contains(last) ? 1 : 0;
  ChartForm f{RatVector(n - 1), Rational(has_last)};
  for (Voter i = 0; i < last; ++i) f.coeff[i] = Rational((s.contains(i) ? 1 : 0) - has_last);
  return f;
}

std::string voter_name(Voter i) { return "w" + std::to_string(i + 1); }

}  // namespace

HPolytope build_weight_polytope(const WeightedGame& g) {
  const std::size_t n = g.size();
  const std::size_t d = n - 1;
  HPolytope p(d);
  for (std::size_t i = 0; i < d; ++i) {
    RatVector a(d);
    a[i] = -1;
    p.add(std::move(a), 0, voter_name(i) + " >= 0");
  }
  p.add(RatVector(d, Rational(1)), 1, voter_name(n - 1) + " >= 0");
  for (Coalition s : g.minimal_winning()) {
    const ChartForm fs = chart_form(s, n);
    for (Coalition t : g.maximal_losing()) {
      const ChartForm ft = chart_form(t, n);
      RatVector a(d);
      for (std::size_t i = 0; i < d; ++i) a[i] = ft.coeff[i] - fs.coeff[i];
      p.add(std::move(a), fs.constant - ft.constant, "w" + s.str() + " >= w" + t.str());
    }
  }
  return p;
}

HPolytope build_representation_polytope(const WeightedGame& g) {
  const std::size_t n = g.size();
  const std::size_t d = n;
  HPolytope p(d);
  {
    RatVector a(d);
    a[0] = -1;
    p.add(a, 0, "q >= 0");
    a[0] = 1;
    p.add(std::move(a), 1, "q <= 1");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RatVector a(d);
    a[i + 1] = -1;
    p.add(std::move(a), 0, voter_name(i) + " >= 0");
  }
  {
    RatVector a(d, Rational(1));
    a[0] = 0;
    p.add(std::move(a), 1, voter_name(n - 1) + " >= 0");
  }
  for (Coalition s : g.minimal_winning()) {
    const ChartForm f = chart_form(s, n);
    RatVector a(d);
    a[0] = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) a[i + 1] = -f.coeff[i];
    p.add(std::move(a), f.constant, "w" + s.str() + " >= q");
  }
  for (Coalition t : g.maximal_losing()) {
    const ChartForm f = chart_form(t, n);
    RatVector a(d);
    a[0] = -1;
    for (std::size_t i = 0; i + 1 < n; ++i) a[i + 1] = f.coeff[i];
    p.add(std::move(a), -f.constant, "w" + t.str() + " <= q");
  }
  return p;
}

HPolytope remove_redundant(const HPolytope& p) {
  const std::size_t d = p.dim();
  std::vector<Constraint> rows;
  std::set<std::pair<RatVector, Rational>> seen;
  bool infeasible = false;
  for (const Constraint& c : p.constraints()) {
    auto lead = std::find_if(c.a.begin(), c.a.end(), [](const Rational& v) { return !v.is_zero(); });
    if (lead == c.a.end()) {
      if (c.b.sign() < 0) infeasible = true;
      continue;
    }
    const Rational scale = lead->abs();
    Constraint n{c.a, c.b / scale, c.label};
    for (auto& v : n.a) v /= scale;
    if (seen.emplace(n.a, n.b).second) rows.push_back(std::move(n));
  }
  if (infeasible) {
    HPolytope empty(d);
    // 0 <= -1 keeps the result empty
    empty.add(RatVector(d), -1, "infeasible");
    return empty;
  }

  // Rows of the form -x_i <= b with b <= 0 certify x_i >= 0; they are kept
  // unconditionally so the dominance argument below never becomes circular.
  std::vector<bool> nonneg(d, false);
  std::vector<bool> is_bound(rows.size(), false);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& a = rows[k].a;
    if (rows[k].b.sign() > 0) continue;
    std::size_t nz = 0, idx = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (!a[i].is_zero()) { ++nz; idx = i; }
    }
    if (nz == 1 && a[idx] == Rational(-1)) {
      nonneg[idx] = true;
      is_bound[k] = true;
    }
  }

  auto dominates = [&](const Constraint& big, const Constraint& small) {
    if (big.b > small.b) return false;
    for (std::size_t i = 0; i < d; ++i) {
      if (big.a[i] == small.a[i]) continue;
      if (!nonneg[i] || big.a[i] < small.a[i]) return false;
    }
    return true;
  };

  HPolytope out(d);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    bool redundant = false;
    if (!is_bound[k]) {
      for (std::size_t j = 0; j < rows.size() && !redundant; ++j) {
        redundant = j != k && dominates(rows[j], rows[k]);
      }
    }
    if (!redundant) out.add(rows[k].a, rows[k].b, rows[k].label);
  }
  return out;
}

namespace {

double binomial(std::size_t m, std::size_t k) {
  if (k > m) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(m - k + i) / static_cast<double>(i);
  return r;
}

// Equations kept in reduced row echelon form with unit pivots.
struct EchelonRow {
  RatVector a;
  Rational b;
  std::size_t pivot;
};

class VertexSearch {
 public:
  explicit VertexSearch(const HPolytope& p) : p_(p), d_(p.dim()) {}

  std::set<RatVector> run() {
    std::vector<EchelonRow> basis;
    basis.reserve(d_);
    descend(0, basis);
    return std::move(found_);
  }

 private:
  void descend(std::size_t start, std::vector<EchelonRow>& basis) {
    if (basis.size() == d_) {
      RatVector x(d_);
      for (const auto& r : basis) x[r.pivot] = r.b;
      if (!found_.contains(x) && p_.contains(x)) found_.insert(std::move(x));
      return;
    }
    const std::size_t needed = d_ - basis.size();
    const std::size_t m = p_.constraints().size();
    for (std::size_t k = start; k + needed <= m; ++k) {
      const Constraint& c = p_.constraints()[k];
      EchelonRow row{c.a, c.b, 0};
      for (const auto& r : basis) {
        const Rational f = row.a[r.pivot];
        if (f.is_zero()) continue;
        for (std::size_t i = 0; i < d_; ++i) {
          if (!r.a[i].is_zero()) row.a[i] -= f * r.a[i];
        }
        row.b -= f * r.b;
      }
      auto lead = std::find_if(row.a.begin(), row.a.end(), [](const Rational& v) { return !v.is_zero(); });
      if (lead == row.a.end()) continue;
      row.pivot = static_cast<std::size_t>(lead - row.a.begin());
      const Rational inv = Rational(1) / *lead;
      for (auto& v : row.a) {
        if (!v.is_zero()) v *= inv;
      }
      row.b *= inv;

      std::vector<EchelonRow> next = basis;
      for (auto& r : next) {
        const Rational f = r.a[row.pivot];
        if (f.is_zero()) continue;
        for (std::size_t i = 0; i < d_; ++i) {
          if (!row.a[i].is_zero()) r.a[i] -= f * row.a[i];
        }
        r.b -= f * row.b;
      }
      next.push_back(std::move(row));
      descend(k + 1, next);
    }
  }

  const HPolytope& p_;
  std::size_t d_;
  std::set<RatVector> found_;
};

}  // namespace

std::vector<Vertex> enumerate_vertices(const HPolytope& p) {
  const HPolytope reduced = remove_redundant(p);
  const std::size_t d = p.dim();
  const double candidates = binomial(reduced.constraints().size(), d);
  if (candidates > kMaxVertexCandidates) {
    throw ScaleError("vertex enumeration would visit " + std::to_string(static_cast<long long>(candidates)) +
                     " constraint subsets; use the Monte Carlo estimator instead");
  }
  std::set<RatVector> points;
  if (d == 0) {
    if (p.contains(RatVector{})) points.insert(RatVector{});
  } else {
    points = VertexSearch(reduced).run();
  }
  std::vector<Vertex> out;
  out.reserve(points.size());
  for (const auto& x : points) {
    Vertex v{x, {}};
    for (std::size_t k = 0; k < p.constraints().size(); ++k) {
      if (p.slack(k, x).is_zero()) v.active.push_back(k);
    }
    out.push_back(std::move(v));
  }
  return out;
}

int affine_dimension(const std::vector<Vertex>& vertices, std::span<const std::size_t> subset) {
  if (subset.empty()) return -1;
  if (subset.size() == 1) return 0;
  const auto& base = vertices[subset[0]].coords;
  RatMatrix m(subset.size() - 1, base.size());
  for (std::size_t r = 1; r < subset.size(); ++r) {
    const auto& x = vertices[subset[r]].coords;
    for (std::size_t c = 0; c < base.size(); ++c) m(r - 1, c) = x[c] - base[c];
  }
  return static_cast<int>(rank(m));
}

namespace {

class Triangulator {
 public:
  Triangulator(const HPolytope& p, const std::vector<Vertex>& vertices, ApexRule rule)
      : m_(p.constraints().size()), vertices_(vertices), rule_(rule) {}

  std::vector<Simplex> run(std::size_t dim) {
    std::vector<std::size_t> all(vertices_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (affine_dimension(vertices_, all) != static_cast<int>(dim)) return {};
    std::vector<std::size_t> prefix;
    cone(all, dim, prefix);
    return std::move(out_);
  }

 private:
  bool active(std::size_t v, std::size_t c) const {
    const auto& a = vertices_[v].active;
    return std::binary_search(a.begin(), a.end(), c);
  }

  void cone(const std::vector<std::size_t>& face, std::size_t k, std::vector<std::size_t>& prefix) {
    if (k == 0) {
      Simplex s{prefix};
      s.vertices.push_back(face.front());
      out_.push_back(std::move(s));
      return;
    }
    const std::size_t apex = rule_ == ApexRule::kLexSmallest ? face.front() : face.back();
    std::set<std::vector<std::size_t>> facets;
    for (std::size_t c = 0; c < m_; ++c) {
      if (active(apex, c)) continue;
      std::vector<std::size_t> f;
      for (std::size_t v : face) {
        if (active(v, c)) f.push_back(v);
      }
      if (f.size() < k || facets.contains(f)) continue;
      if (affine_dimension(vertices_, f) != static_cast<int>(k) - 1) continue;
      facets.insert(f);
      prefix.push_back(apex);
      cone(f, k - 1, prefix);
      prefix.pop_back();
    }
  }

  std::size_t m_;
  const std::vector<Vertex>& vertices_;
  ApexRule rule_;
  std::vector<Simplex> out_;
};

Rational factorial(std::size_t k) {
  Rational f(1);
  for (std::size_t i = 2; i <= k; ++i) f *= Rational(static_cast<long long>(i));
  return f;
}

}  // namespace

std::vector<Simplex> triangulate(const HPolytope& p, const std::vector<Vertex>& vertices, ApexRule rule) {
  if (vertices.empty()) return {};
  if (p.dim() == 0) return {Simplex{{0}}};
  return Triangulator(p, vertices, rule).run(p.dim());
}

Rational simplex_volume(const std::vector<Vertex>& vertices, const Simplex& s) {
  const std::size_t d = s.vertices.size() - 1;
  if (d == 0) return Rational(1);
  const auto& base = vertices[s.vertices[0]].coords;
  RatMatrix edges(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const auto& x = vertices[s.vertices[r + 1]].coords;
    for (std::size_t c = 0; c < d; ++c) edges(r, c) = x[c] - base[c];
  }
  return determinant(edges).abs() / factorial(d);
}

Integrals integrate(const HPolytope& p, ApexRule rule) {
  Integrals out;
  out.vertices = enumerate_vertices(p);
  out.simplices = triangulate(p, out.vertices, rule);
  const std::size_t d = p.dim();
  out.moments.assign(d, Rational(0));
  const Rational corners(static_cast<long long>(d + 1));
  for (const Simplex& s : out.simplices) {
    const Rational vol = simplex_volume(out.vertices, s);
    out.volume += vol;
    // the integral of a linear function over a simplex is its volume times
    // the value at the vertex average
    for (std::size_t i = 0; i < d; ++i) {
      Rational acc;
      for (std::size_t v : s.vertices) acc += out.vertices[v].coords[i];
      out.moments[i] += vol * acc / corners;
    }
  }
  return out;
}

Rational volume(const HPolytope& p) { return integrate(p).volume; }

RatVector moments(const HPolytope& p) { return integrate(p).moments; }

RatVector centroid(const Integrals& integrals) {
  if (integrals.vertices.empty()) throw DegenerateError("centroid of an empty polytope");
  if (integrals.volume.is_zero()) throw DegenerateError("centroid of a polytope with zero volume");
  RatVector c = integrals.moments;
  for (auto& v : c) v /= integrals.volume;
  return c;
}

RatVector centroid(const HPolytope& p) { return centroid(integrate(p)); }

}  // namespace powerpoly
