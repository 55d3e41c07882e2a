#include "powerpoly/game.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "powerpoly/errors.hpp"

namespace powerpoly {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational parse_entry(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (s.empty()) throw InputError("empty entry in game '" + std::string(whole) + "'");
  try {
    return Rational::parse(s);
  } catch (const InputError&) {
    throw InputError("malformed entry '" + std::string(s) + "' in game '" + std::string(whole) + "'");
  }
}

void sort_coalitions(std::vector<Coalition>& v) { std::sort(v.begin(), v.end(), member_lex_less); }

}  // namespace

WeightedGame::WeightedGame(Rational quota, RatVector weights)
    : quota_(std::move(quota)), weights_(std::move(weights)) {
  const std::size_t n = weights_.size();
  if (n == 0) throw InputError("a game needs at least one voter");
  if (n > kMaxVoters) {
    throw ScaleError("games are limited to " + std::to_string(kMaxVoters) + " voters");
  }
  if (quota_.sign() <= 0) throw InputError("quota must be positive");
  for (const auto& w : weights_) {
    if (w.sign() < 0) throw InputError("weights must be nonnegative");
  }
  if (total_weight() < quota_) throw InputError("grand coalition must be winning (w(N) >= q)");

  const std::uint32_t count = std::uint32_t{1} << n;
  winning_.assign(count, false);
  // weight of S = weight of S without its lowest member + that member
  std::vector<Rational> weight(count);
  for (std::uint32_t s = 1; s < count; ++s) {
    const std::uint32_t low = s & (~s + 1);
    weight[s] = weight[s ^ low] + weights_[static_cast<std::size_t>(std::countr_zero(low))];
    winning_[s] = weight[s] >= quota_;
  }
  for (std::uint32_t s = 0; s < count; ++s) {
    const Coalition c(s);
    if (winning_[s]) {
      bool minimal = true;
      for (Voter i : c.members()) {
        if (winning_[c.without(i).bits()]) { minimal = false; break; }
      }
      if (minimal) minimal_winning_.push_back(c);
    } else {
      bool maximal = true;
      for (Voter i = 0; i < n; ++i) {
        if (!c.contains(i) && !winning_[c.with(i).bits()]) { maximal = false; break; }
      }
      if (maximal) maximal_losing_.push_back(c);
    }
  }
  sort_coalitions(minimal_winning_);
  sort_coalitions(maximal_losing_);

  std::uint32_t pivotal = 0;
  for (Coalition s : minimal_winning_) pivotal |= s.bits();
  for (Voter i = 0; i < n; ++i) {
    if (!((pivotal >> i) & 1U)) dummies_.push_back(i);
  }
}

WeightedGame WeightedGame::parse(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw InputError("game must look like [q; w1, ..., wn], got '" + std::string(whole) + "'");
  }
  text = text.substr(1, text.size() - 2);
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw InputError("missing ';' after the quota in '" + std::string(whole) + "'");
  }
  Rational quota = parse_entry(text.substr(0, semi), whole);
  std::string_view rest = text.substr(semi + 1);
  RatVector weights;
  while (true) {
    const auto comma = rest.find(',');
    weights.push_back(parse_entry(rest.substr(0, comma), whole));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return WeightedGame(std::move(quota), std::move(weights));
}

Rational WeightedGame::weight_of(Coalition s) const { return coalition_sum(weights_, s); }

bool WeightedGame::is_dummy(Voter i) const {
  return std::binary_search(dummies_.begin(), dummies_.end(), i);
}

bool WeightedGame::has_integer_representation() const {
  return quota_.is_integer() &&
         std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w.is_integer(); });
}

bool WeightedGame::same_structure(const WeightedGame& other) const {
  return size() == other.size() && winning_ == other.winning_;
}

std::string WeightedGame::str() const {
  std::string out = "[" + quota_.str() + ";";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    out += (i ? ", " : " ") + weights_[i].str();
  }
  return out + "]";
}

std::string WeightedGame::compact_str() const {
  std::string out = "[" + quota_.str() + ";";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out.push_back(',');
    out += weights_[i].str();
  }
  return out + "]";
}

ReducedGame dummy_reduced(const WeightedGame& g) {
  RatVector weights;
  std::vector<Voter> map;
  for (Voter i = 0; i < g.size(); ++i) {
    if (g.is_dummy(i)) continue;
    weights.push_back(g.weights()[i]);
    map.push_back(i);
  }
  return ReducedGame{WeightedGame(g.quota(), std::move(weights)), std::move(map)};
}

WeightedGame dual_game(const WeightedGame& g) {
  const Rational total = g.total_weight();
  const Rational base = total - g.quota();
  if (g.has_integer_representation()) return WeightedGame(base + 1, g.weights());

  // S wins in the dual iff w(S) > w(N) - q. The smallest positive gap
  // q - w(T) over losing T bounds how far the quota may be raised.
  std::optional<Rational> gap;
  const std::uint32_t count = std::uint32_t{1} << g.size();
  for (std::uint32_t s = 0; s < count; ++s) {
    const Coalition c(s);
    if (g.is_winning(c)) continue;
    const Rational d = g.quota() - g.weight_of(c);
    if (!gap || d < *gap) gap = d;
  }
  // the empty coalition always loses, so gap is set
  return WeightedGame(base + *gap / 2, g.weights());
}

Rational coalition_sum(std::span<const Rational> x, Coalition s) {
  Rational total;
  for (Voter i : s.members()) total += x[i];
  return total;
}

bool is_feasible_weights(const WeightedGame& g, std::span<const Rational> x) {
  if (x.size() != g.size()) throw InputError("weight vector length does not match the game");
  std::optional<Rational> min_winning;
  for (Coalition s : g.minimal_winning()) {
    Rational w = coalition_sum(x, s);
    if (!min_winning || w < *min_winning) min_winning = std::move(w);
  }
  for (Coalition t : g.maximal_losing()) {
    if (coalition_sum(x, t) >= *min_winning) return false;
  }
  return true;
}

bool is_representation(const WeightedGame& g, const Rational& quota, std::span<const Rational> x) {
  if (x.size() != g.size()) throw InputError("weight vector length does not match the game");
  for (Coalition s : g.minimal_winning()) {
    if (coalition_sum(x, s) < quota) return false;
  }
  for (Coalition t : g.maximal_losing()) {
    if (coalition_sum(x, t) >= quota) return false;
  }
  return true;
}

NormalizedRepresentation normalize(const WeightedGame& g) {
  const Rational total = g.total_weight();
  if (total.is_zero()) throw InputError("cannot normalize a game with zero total weight");
  NormalizedRepresentation out{g.quota() / total, {}};
  out.weights.reserve(g.size());
  for (const auto& w : g.weights()) out.weights.push_back(w / total);
  return out;
}

Rational l1_distance(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size()) throw InputError("l1_distance: vectors have different lengths");
  Rational total;
  for (std::size_t i = 0; i < x.size(); ++i) total += (x[i] - y[i]).abs();
  return total;
}

}  // namespace powerpoly
