#include "powerpoly/catalog.hpp"

#include <array>

#include "powerpoly/errors.hpp"

namespace powerpoly {

namespace {

constexpr std::array<std::string_view, 37> kGames = {
    "[1;1]",
    "[1;1,0]",     "[1;1,1]",     "[2;1,1]",
    "[1;1,0,0]",   "[1;1,1,0]",   "[2;1,1,0]",   "[1;1,1,1]",   "[2;1,1,1]",
    "[3;1,1,1]",   "[2;2,1,1]",   "[3;2,1,1]",
    "[1;1,0,0,0]", "[1;1,1,0,0]", "[2;1,1,0,0]", "[1;1,1,1,0]", "[2;1,1,1,0]",
    "[3;1,1,1,0]", "[2;2,1,1,0]", "[3;2,1,1,0]", "[1;1,1,1,1]", "[2;1,1,1,1]",
    "[3;1,1,1,1]", "[4;1,1,1,1]", "[4;2,1,1,1]", "[3;2,1,1,1]", "[2;2,1,1,1]",
    "[3;2,2,1,1]", "[4;2,2,1,1]", "[5;2,2,1,1]", "[2;2,2,1,1]", "[4;3,1,1,1]",
    "[3;3,1,1,1]", "[3;3,2,1,1]", "[5;3,2,1,1]", "[4;3,2,2,1]", "[5;3,2,2,1]",
};

}  // namespace

std::span<const std::string_view> small_game_catalog() { return kGames; }

std::vector<TableRow> compute_table(std::size_t max_voters) {
  if (max_voters > kCatalogMaxVoters) {
    throw ScaleError("the built-in game list covers at most " + std::to_string(kCatalogMaxVoters) + " voters");
  }
  std::vector<TableRow> rows;
  for (std::string_view spec : kGames) {
    const WeightedGame g = WeightedGame::parse(spec);
    if (g.size() > max_voters) continue;
    rows.push_back(TableRow{std::string(spec), average_weight_index(g), average_representation_index(g)});
  }
  return rows;
}

}  // namespace powerpoly
