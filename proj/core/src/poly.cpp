#include "avstab/poly.hpp"

#include <algorithm>
#include <ostream>

namespace avstab {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rat> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * Rat(static_cast<long>(k)));
  return Poly(std::move(out));
}

Poly Poly::antiderivative() const {
  if (is_zero()) return {};
  std::vector<Rat> out{Rat(0)};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] / Rat(static_cast<long>(k + 1)));
  return Poly(std::move(out));
}

Poly Poly::compose_affine(const Rat& scale, const Rat& shift) const {
  const Poly inner = Poly::linear(shift, scale);
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly::constant(*it);
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  os << '[';
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k) os << ", ";
    os << p.coeffs()[k];
  }
  return os << ']';
}

}  // namespace avstab
