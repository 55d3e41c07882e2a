#include "powerpoly/json_io.hpp"

#include "powerpoly/errors.hpp"

namespace powerpoly {

Json rational_to_json(const Rational& r) {
  return Json{{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

Rational rational_from_json(const Json& j) {
  try {
    return Rational(BigInt(j.at("num").get<std::string>(), 10), BigInt(j.at("den").get<std::string>(), 10));
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad rational JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad rational JSON: ") + e.what());
  }
}

Json fractions_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

Json decimals_json(const RatVector& v, int places) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.to_decimal(places));
  return out;
}

RatVector fractions_from_json(const Json& j) {
  RatVector out;
  for (const auto& e : j) out.push_back(Rational::parse(e.get<std::string>()));
  return out;
}

Json axioms_to_json(const AxiomReport& r) {
  return Json{{"symmetric", r.symmetric},
              {"positive", r.positive},
              {"efficient", r.efficient},
              {"dummy_property", r.dummy_property},
              {"has_dummies", r.has_dummies},
              {"representation_compatible", r.representation_compatible}};
}

Json index_to_json(const WeightedGame& g, const IndexVector& x, int places,
                   const std::optional<AxiomReport>& axioms) {
  Json j{{"game", g.str()},
         {"kind", std::string(to_string(x.kind))},
         {"dummy_revealing", x.dummy_revealing},
         {"values", fractions_json(x.values)},
         {"decimals", decimals_json(x.values, places)}};
  if (x.avg_quota) j["avg_quota"] = x.avg_quota->str();
  if (axioms) j["axioms"] = axioms_to_json(*axioms);
  return j;
}

Json polytope_to_json(const HPolytope& p, const Integrals& integrals) {
  Json constraints = Json::array();
  for (const auto& c : p.constraints()) {
    constraints.push_back(Json{{"a", fractions_json(c.a)}, {"b", c.b.str()}, {"label", c.label}});
  }
  Json vertices = Json::array();
  for (const auto& v : integrals.vertices) vertices.push_back(fractions_json(v.coords));
  return Json{{"dim", p.dim()},
              {"constraints", std::move(constraints)},
              {"vertices", std::move(vertices)},
              {"volume", integrals.volume.str()},
              {"moments", fractions_json(integrals.moments)}};
}

Json grid_summary_to_json(const GridSummary& s, int places) {
  Json j{{"total", s.total},
         {"count", s.count},
         {"with_quota", s.with_quota},
         {"average", fractions_json(s.average)},
         {"decimals", decimals_json(s.average, places)}};
  if (s.avg_quota) j["avg_quota"] = s.avg_quota->str();
  return j;
}

Json convergence_to_json(const WeightedGame& g, const ConvergenceTable& t, int places) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row = grid_summary_to_json(r.summary, places);
    row["l1_to_limit"] = r.l1_to_limit.str();
    row["l1_to_limit_decimal"] = r.l1_to_limit.to_decimal(places);
    rows.push_back(std::move(row));
  }
  return Json{{"game", g.str()},
              {"with_quota", t.with_quota},
              {"limit", index_to_json(g, t.limit, places)},
              {"rows", std::move(rows)}};
}

namespace {

Json index_body(const IndexVector& x, int places) {
  Json j{{"values", fractions_json(x.values)}, {"decimals", decimals_json(x.values, places)}};
  if (x.avg_quota) j["avg_quota"] = x.avg_quota->str();
  return j;
}

IndexVector index_from_body(const Json& j, IndexKind kind) {
  IndexVector x;
  x.kind = kind;
  x.values = fractions_from_json(j.at("values"));
  if (j.contains("avg_quota")) x.avg_quota = Rational::parse(j.at("avg_quota").get<std::string>());
  return x;
}

}  // namespace

Json table_to_json(const std::vector<TableRow>& rows, int places) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"game", r.game},
                       {"avg_weight", index_body(r.avg_weight, places)},
                       {"avg_rep", index_body(r.avg_rep, places)}});
  }
  return Json{{"precision", places}, {"rows", std::move(out)}};
}

std::vector<TableRow> table_from_json(const Json& j) {
  std::vector<TableRow> rows;
  try {
    for (const auto& r : j.at("rows")) {
      rows.push_back(TableRow{r.at("game").get<std::string>(),
                              index_from_body(r.at("avg_weight"), IndexKind::kAverageWeight),
                              index_from_body(r.at("avg_rep"), IndexKind::kAverageRepresentation)});
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad table JSON: ") + e.what());
  }
  return rows;
}

}  // namespace powerpoly
