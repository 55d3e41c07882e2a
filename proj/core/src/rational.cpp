#include "powerpoly/rational.hpp"

#include <cctype>
#include <ostream>

#include "powerpoly/errors.hpp"

namespace powerpoly {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw InputError("malformed number '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num), BigInt(1));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw InputError("malformed number '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), parse_integer(den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int places) const {
  if (places < 0) places = 0;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const BigInt num = ::abs(value_.get_num()) * scale;
  const BigInt den = value_.get_den();
  // round(num/den) half away from zero on the magnitude
  BigInt q = (2 * num + den) / (2 * den);
  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
  }
  std::string out;
  if (sign() < 0 && q != 0) out.push_back('-');
  out.append(digits, 0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) {
    out.push_back('.');
    out.append(digits, digits.size() - static_cast<std::size_t>(places));
  }
  return out;
}

Rational rat(long long num, long long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  return Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

Rational sum(const RatVector& values) {
  Rational total;
  for (const auto& v : values) total += v;
  return total;
}

std::string join(const RatVector& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.append(sep);
    out += values[i].str();
  }
  return out;
}

std::string join_decimal(const RatVector& values, int places, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.append(sep);
    out += values[i].to_decimal(places);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace powerpoly
