#include "avstab/rational.hpp"

#include <cctype>
#include <ostream>

#include "avstab/error.hpp"

namespace avstab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void reject(std::string_view text) {
  throw Error(ErrorCode::parse_error, "not an exact rational literal: '" + std::string(text) + "'");
}

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::out_of_domain: return "OutOfDomain";
    case ErrorCode::ambiguous_at_jump: return "AmbiguousAtJump";
    case ErrorCode::empty_domain_intersection: return "EmptyDomainIntersection";
    case ErrorCode::out_of_support: return "OutOfSupport";
    case ErrorCode::alpha_non_positive: return "AlphaNonPositive";
    case ErrorCode::domain_too_narrow: return "DomainTooNarrow";
    case ErrorCode::degree_too_high: return "DegreeTooHigh";
    case ErrorCode::plateau_detected: return "PlateauDetected";
    case ErrorCode::non_generic: return "NonGeneric";
    case ErrorCode::precondition: return "PreconditionViolated";
  }
  return "Unknown";
}

Rat::Rat(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::invalid_argument, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpq_class value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) reject(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) reject(text);
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) reject(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class digits(std::string(whole) + std::string(frac), 10);
    value = mpq_class(digits, scale);
  } else {
    if (!all_digits(body)) reject(text);
    value = mpq_class(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rat(std::move(value));
}

std::string Rat::str() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace avstab
