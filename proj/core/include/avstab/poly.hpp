#pragma once

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "avstab/rational.hpp"

namespace avstab {

/// Univariate polynomial with exact coefficients in ascending degree.
/// Canonical: the leading coefficient is nonzero; the zero polynomial has no
/// coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

  static Poly constant(const Rat& c) { return Poly({c}); }
  /// a + b x
  static Poly linear(const Rat& a, const Rat& b) { return Poly({a, b}); }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k, zero beyond the degree.
  Rat coeff(int k) const;
  const Rat& leading() const { return coeffs_.back(); }

  Rat operator()(const Rat& x) const;

  Poly derivative() const;
  /// Antiderivative with zero constant term.
  Poly antiderivative() const;
  /// x -> p(scale * x + shift)
  Poly compose_affine(const Rat& scale, const Rat& shift) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const { return *this * Rat(-1); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace avstab
