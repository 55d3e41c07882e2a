#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powerpoly/indices.hpp"

namespace powerpoly {

/// Every weighted majority game with at most four voters, each in its
/// minimum-sum integer representation, ordered by voter count.
std::span<const std::string_view> small_game_catalog();

struct TableRow {
  std::string game;
  IndexVector avg_weight;
  IndexVector avg_rep;
};

/// Both average indices for every catalog game with at most max_voters
/// voters. Throws ScaleError if max_voters exceeds the catalog.
std::vector<TableRow> compute_table(std::size_t max_voters);

inline constexpr std::size_t kCatalogMaxVoters = 4;

}  // namespace powerpoly
