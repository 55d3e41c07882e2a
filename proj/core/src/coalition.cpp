#include "powerpoly/coalition.hpp"

#include <algorithm>

namespace powerpoly {

Coalition Coalition::of(std::initializer_list<Voter> members) {
  std::uint32_t bits = 0;
  for (Voter v : members) bits |= std::uint32_t{1} << v;
  return Coalition(bits);
}

std::vector<Voter> Coalition::members() const {
  std::vector<Voter> out;
  for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(static_cast<Voter>(std::countr_zero(b)));
  return out;
}

std::string Coalition::str() const {
  std::string out = "{";
  bool first = true;
  for (Voter v : members()) {
    if (!first) out.push_back(',');
    out += std::to_string(v + 1);
    first = false;
  }
  out.push_back('}');
  return out;
}

bool member_lex_less(Coalition a, Coalition b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace powerpoly
