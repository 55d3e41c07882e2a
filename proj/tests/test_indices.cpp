#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "powerpoly/errors.hpp"
#include "powerpoly/indices.hpp"
#include "test_support.hpp"

using namespace powerpoly;

namespace {

RatVector v(std::initializer_list<Rational> xs) { return RatVector(xs); }

WeightedGame game(const char* spec) { return WeightedGame::parse(spec); }

}  // namespace

TEST_CASE("index kind names") {
  for (auto k : {IndexKind::kAverageWeight, IndexKind::kAverageRepresentation, IndexKind::kShapleyShubik}) {
    CHECK(parse_index_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_index_kind("banzhaf"), InputError);
}

TEST_CASE("shapley_shubik") {
  CHECK(shapley_shubik(game("[3;2,1,1]")).values == v({rat(2, 3), rat(1, 6), rat(1, 6)}));
  CHECK(shapley_shubik(game("[2;1,1,1]")).values == v({rat(1, 3), rat(1, 3), rat(1, 3)}));
  CHECK(shapley_shubik(game("[3;2,1,1,1]")).values == v({rat(1, 2), rat(1, 6), rat(1, 6), rat(1, 6)}));
  CHECK(shapley_shubik(game("[3;2,1,1,1,0,0]")).values ==
        v({rat(1, 2), rat(1, 6), rat(1, 6), rat(1, 6), 0, 0}));
  CHECK(shapley_shubik(game("[1;1,0]")).values == v({1, 0}));
}

TEST_CASE("shapley_shubik agrees with the permutation oracle (n <= 5)") {
  auto games = testing::small_corpus();
  for (auto& g : testing::random_games(5, 20, 77)) games.push_back(g);
  for (const auto& g : games) {
    CAPTURE(g.str());
    CHECK(shapley_shubik(g).values == testing::oracle_ssi_permutations(g));
  }
}

TEST_CASE("average_weight_index") {
  CHECK(average_weight_index(game("[3;2,1,1]")).values == v({rat(11, 18), rat(7, 36), rat(7, 36)}));
  CHECK(average_weight_index(game("[1;1,0]")).values == v({rat(3, 4), rat(1, 4)}));
  CHECK(average_weight_index(game("[4;3,2,2,1]")).values ==
        v({rat(193, 480), rat(31, 120), rat(31, 120), rat(13, 160)}));
  CHECK(average_weight_index(game("[1;1]")).values == v({1}));
  CHECK_FALSE(average_weight_index(game("[1;1]")).avg_quota);
}

TEST_CASE("average_representation_index") {
  const auto x = average_representation_index(game("[3;2,1,1]"));
  CHECK(x.values == v({rat(7, 12), rat(5, 24), rat(5, 24)}));
  REQUIRE(x.avg_quota);
  // quota moment over the volume 1/72
  CHECK(*x.avg_quota == rat(2, 3));
  CHECK(average_representation_index(game("[1;1,0,0]")).values == v({rat(3, 4), rat(1, 8), rat(1, 8)}));
  CHECK(average_representation_index(game("[2;2,1,1,1]")).values ==
        v({rat(139, 300), rat(161, 900), rat(161, 900), rat(161, 900)}));
  CHECK(*average_representation_index(game("[1;1]")).avg_quota == rat(1, 2));
}

TEST_CASE("exact scale limit") {
  const WeightedGame big(5, RatVector(9, Rational(1)));
  CHECK_THROWS_AS(average_weight_index(big), ScaleError);
  CHECK_THROWS_AS(average_representation_index(big), ScaleError);
  CHECK(sum(shapley_shubik(big).values) == Rational(1));
}

TEST_CASE("dummy_revealing") {
  CHECK(dummy_revealing(IndexKind::kAverageWeight, game("[1;1,0]")).values == v({1, 0}));
  CHECK(dummy_revealing(IndexKind::kAverageRepresentation, game("[1;1,0]")).values == v({1, 0}));
  CHECK(dummy_revealing(IndexKind::kAverageWeight, game("[2;2,1,1,0]")).values ==
        v({rat(11, 18), rat(7, 36), rat(7, 36), 0}));
  CHECK(dummy_revealing(IndexKind::kShapleyShubik, game("[1;0,1,0]")).values == v({0, 1, 0}));

  const auto g = game("[3;2,1,1]");
  for (auto k : {IndexKind::kAverageWeight, IndexKind::kAverageRepresentation, IndexKind::kShapleyShubik}) {
    const auto d = dummy_revealing(k, g);
    CHECK(d.dummy_revealing);
    CHECK(d.values == compute_index(k, g).values);
  }
}

TEST_CASE("representation compatibility") {
  const auto g = game("[3;2,1,1]");
  CHECK(is_representation_compatible_at(g, average_weight_index(g)));
  CHECK(is_representation_compatible_at(g, shapley_shubik(g)));
  const auto h = game("[3;2,1,1,1]");
  CHECK_FALSE(is_representation_compatible_at(h, shapley_shubik(h)));
}

TEST_CASE("check_axioms") {
  const auto g = game("[3;2,1,1]");
  auto r = check_axioms(g, average_weight_index(g));
  CHECK(r.symmetric);
  CHECK(r.positive);
  CHECK(r.efficient);
  CHECK_FALSE(r.has_dummies);
  CHECK(r.dummy_property);
  CHECK(r.representation_compatible);

  const auto d = game("[1;1,0]");
  r = check_axioms(d, average_weight_index(d));
  CHECK(r.has_dummies);
  CHECK_FALSE(r.dummy_property);
  r = check_axioms(d, dummy_revealing(IndexKind::kAverageWeight, d));
  CHECK(r.dummy_property);

  // a hand-made asymmetric, inefficient vector
  IndexVector bad{IndexKind::kShapleyShubik, false, v({rat(1, 2), rat(1, 3), rat(1, 4)}), std::nullopt};
  r = check_axioms(g, bad);
  CHECK_FALSE(r.symmetric);
  CHECK_FALSE(r.efficient);
  CHECK(r.positive);
  bad.values = v({2, -1, 0});
  CHECK_FALSE(check_axioms(g, bad).positive);
  bad.values = v({0, 0, 0});
  CHECK_FALSE(check_axioms(g, bad).positive);
}

TEST_CASE("structural symmetry is found even when weights differ") {
  const auto h = game("[5;5,2,3]");
  CHECK(are_symmetric(h, 1, 2));
  CHECK_FALSE(are_symmetric(h, 0, 1));
  IndexVector x{IndexKind::kShapleyShubik, false, v({rat(1, 2), rat(1, 5), rat(3, 10)}), std::nullopt};
  CHECK_FALSE(check_axioms(h, x).symmetric);
  CHECK(check_axioms(h, average_weight_index(h)).symmetric);
}

TEST_CASE("index properties over the small corpus and random 5-voter games") {
  auto games = testing::small_corpus();
  for (auto& g : testing::random_games(5, 20, 404)) games.push_back(g);
  for (const auto& g : games) {
    CAPTURE(g.str());
    const auto aw = average_weight_index(g);
    const auto ar = average_representation_index(g);
    const auto ss = shapley_shubik(g);
    for (const auto* x : {&aw, &ar, &ss}) {
      const auto r = check_axioms(g, *x);
      CHECK(r.efficient);
      CHECK(r.positive);
      CHECK(r.symmetric);
    }
    CHECK(is_feasible_weights(g, aw.values));
    CHECK(is_representation(g, *ar.avg_quota, ar.values));

    const auto d = dual_game(g);
    CHECK(average_weight_index(d).values == aw.values);
    CHECK(average_representation_index(d).values == ar.values);

    for (auto k : {IndexKind::kAverageWeight, IndexKind::kAverageRepresentation, IndexKind::kShapleyShubik}) {
      const auto dr = dummy_revealing(k, g);
      CHECK(check_axioms(g, dr).dummy_property);
      const auto reduced = dummy_reduced(g);
      const auto base = compute_index(k, reduced.game);
      for (std::size_t i = 0; i < reduced.original_voter.size(); ++i) {
        CHECK(dr.values[reduced.original_voter[i]] == base.values[i]);
      }
    }
  }
}
