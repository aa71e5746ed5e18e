#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace avstab {

/// Exact rational scalar backed by GMP. Always in lowest terms with a
/// positive denominator; every arithmetic operation is exact.
class Rat {
 public:
  Rat() = default;

  template <std::signed_integral T>
  Rat(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rat(long numerator, long denominator);

  explicit Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p", "p/q" or a plain decimal "d.ddd" (converted exactly).
  /// Throws Error{parse_error} on anything else.
  static Rat parse(std::string_view text);

  /// "p" for integers, "p/q" otherwise. parse(str()) reproduces the value.
  std::string str() const;
  double to_double() const { return value_.get_d(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  const mpq_class& raw() const { return value_; }

  Rat operator-() const { return Rat(mpq_class(-value_)); }

  Rat& operator+=(const Rat& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rat& operator-=(const Rat& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rat& operator*=(const Rat& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace avstab
