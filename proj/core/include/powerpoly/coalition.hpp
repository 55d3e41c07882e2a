#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace powerpoly {

/// Voters are indexed from 0 inside the library; text output shows them
/// 1-based.
using Voter = std::size_t;

/// Subset of voters as a bitmask (bit i = voter i).
class Coalition {
 public:
  static constexpr std::size_t kMaxVoters = 32;

  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t bits) : bits_(bits) {}

  static Coalition of(std::initializer_list<Voter> members);
  static constexpr Coalition grand(std::size_t n) {
    return Coalition(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Voter i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(Coalition o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr Coalition with(Voter i) const { return Coalition(bits_ | (std::uint32_t{1} << i)); }
  constexpr Coalition without(Voter i) const { return Coalition(bits_ & ~(std::uint32_t{1} << i)); }
  constexpr Coalition complement(std::size_t n) const { return Coalition(~bits_ & grand(n).bits_); }

  /// Members in ascending voter order.
  std::vector<Voter> members() const;

  /// "{1,3}" (1-based); "{}" for the empty coalition.
  std::string str() const;

  friend constexpr bool operator==(Coalition, Coalition) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Orders coalitions lexicographically by their ascending member lists.
bool member_lex_less(Coalition a, Coalition b);

}  // namespace powerpoly
