#include "rbt/dyadic.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace rbt {

Dyadic Dyadic::from_parts(std::int64_t numerator, int exponent) {
  if (exponent < 0) {
    Dyadic d;
    d.num_ = checked::shl(numerator, -exponent);
    return d;
  }
  while (exponent > 0 && numerator % 2 == 0) {
    numerator /= 2;
    --exponent;
  }
  if (numerator == 0)
    exponent = 0;
  if (exponent > max_exponent)
    throw OverflowError("dyadic exponent out of range");
  Dyadic d;
  d.num_ = numerator;
  d.exp_ = exponent;
  return d;
}

namespace {

std::int64_t parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Dyadic Dyadic::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Dyadic(parse_int(text));
  std::int64_t num = parse_int(trim(text.substr(0, slash)));
  std::string_view den = trim(text.substr(slash + 1));
  if (den.starts_with("2^")) {
    std::int64_t k = parse_int(den.substr(2));
    if (k < 0 || k > max_exponent)
      throw std::invalid_argument("dyadic exponent out of range: '" + std::string(text) + "'");
    return from_parts(num, static_cast<int>(k));
  }
  std::int64_t q = parse_int(den);
  if (q <= 0 || (q & (q - 1)) != 0)
    throw std::invalid_argument("denominator is not a power of two: '" + std::string(text) + "'");
  int k = 0;
  while ((std::int64_t{1} << k) != q)
    ++k;
  return from_parts(num, k);
}

std::int64_t Dyadic::floor() const {
  if (exp_ == 0)
    return num_;
  return num_ >> exp_;  // arithmetic shift rounds toward -inf
}

Dyadic Dyadic::frac() const { return *this - Dyadic(floor()); }

double Dyadic::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(std::int64_t{1} << exp_);
}

std::string Dyadic::str() const {
  if (exp_ == 0)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exp_, b.exp_);
  std::int64_t x = checked::shl(a.num_, e - a.exp_);
  std::int64_t y = checked::shl(b.num_, e - b.exp_);
  return Dyadic::from_parts(checked::add(x, y), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic::from_parts(checked::mul(a.num_, b.num_), a.exp_ + b.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  Dyadic d = a - b;
  return d.num_ <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

}  // namespace rbt
