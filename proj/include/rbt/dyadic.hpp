// Exact dyadic rationals p / 2^k.

#ifndef RBT_DYADIC_HPP_
#define RBT_DYADIC_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rbt {

// Thrown whenever an exact integer or dyadic operation would leave the
// range of std::int64_t.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t shl(std::int64_t a, int k) {
  if (k >= 63 && a != 0)
    throw OverflowError("integer overflow in shift");
  if (k >= 63)
    return 0;
  return mul(a, std::int64_t{1} << k);
}

}  // namespace checked

// Value numerator / 2^exponent, always stored in lowest terms: either the
// numerator is odd or the exponent is zero. Equality is therefore structural.
class Dyadic {
public:
  static constexpr int max_exponent = 62;

  constexpr Dyadic() = default;
  constexpr Dyadic(std::int64_t integer) : num_(integer) {}  // NOLINT: implicit by design of the arithmetic

  // Builds numerator / 2^exponent and normalizes.
  static Dyadic from_parts(std::int64_t numerator, int exponent);
  // 1 / 2^k
  static Dyadic pow2_inverse(int k) { return from_parts(1, k); }

  // Accepts "p", "p/q" with q a power of two, and "p/2^k".
  static Dyadic parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }
  bool is_zero() const { return num_ == 0; }

  // Largest integer not exceeding the value.
  std::int64_t floor() const;
  // Value minus floor(); lies in [0, 1).
  Dyadic frac() const;
  double to_double() const;

  // "p" for integers, "p/q" otherwise (q written out in decimal).
  std::string str() const;

  Dyadic operator-() const { return from_parts(checked::sub(0, num_), exp_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

}  // namespace rbt

#endif
