#include "regionbound/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace regionbound {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

BigInt parse_integer_literal(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigInt power_of_two(std::uint64_t exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
  return result;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_decimal(std::string_view text) { return parse_integer_literal(text); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer_literal(text.substr(0, slash));
    BigInt den = parse_integer_literal(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    std::string digits(whole);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    if (!frac.empty() && !is_integer_literal(frac)) {
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    if (frac.find_first_of("+-") != std::string_view::npos) {
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    BigInt int_part = parse_integer_literal(digits);
    BigInt frac_part = frac.empty() ? BigInt(0) : BigInt(std::string(frac), 10);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(frac.size()));
    Rational r(frac_part, scale);
    r.canonicalize();
    if (negative) return Rational(int_part) - r;
    return Rational(int_part) + r;
  }
  return Rational(parse_integer_literal(text));
}

}  // namespace regionbound
