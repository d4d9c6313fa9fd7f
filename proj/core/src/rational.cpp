#include "kee/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace kee {
namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rat parse_rat(std::string_view text, bool allow_decimal) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rat r(parse_integer(num), d);
    r.canonicalize();
    return r;
  }

  if (is_integer_literal(s)) return Rat(parse_integer(s));

  auto dot = s.find('.');
  bool decimal_shape = dot != std::string_view::npos && s.find('.', dot + 1) == std::string_view::npos;
  if (decimal_shape) {
    std::string whole(s.substr(0, dot));
    std::string frac(s.substr(dot + 1));
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    auto digits_only = [](const std::string& t) {
      return std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
    };
    if ((!whole.empty() || !frac.empty()) && digits_only(whole) && digits_only(frac)) {
      if (!allow_decimal) {
        throw std::invalid_argument("decimal literal '" + std::string(text) +
                                    "' rejected; pass rationals as p/q or enable --lossy");
      }
      mpz_class num(whole.empty() ? std::string("0") : whole, 10);
      mpz_class den = 1;
      for (char c : frac) {
        num = num * 10 + (c - '0');
        den *= 10;
      }
      Rat r(negative ? mpz_class(-num) : num, den);
      r.canonicalize();
      return r;
    }
  }
  throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
}

std::string to_string(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rat& value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value.get_d());
  return buf;
}

std::optional<Rat> exact_sqrt(const Rat& value) {
  if (value < 0) return std::nullopt;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace kee
