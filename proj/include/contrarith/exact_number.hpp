#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace contrarith {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Every gold answer in the repository is computed in this type;
/// nothing downstream ever rounds.
class ExactNumber {
public:
  using Rational = boost::multiprecision::cpp_rational;
  using Integer = boost::multiprecision::cpp_int;

  ExactNumber() = default;
  ExactNumber(std::int64_t value) : value_(value) {} // NOLINT(google-explicit-constructor)
  ExactNumber(std::int64_t num, std::int64_t den);
  explicit ExactNumber(Rational value) : value_(std::move(value)) {}

  /// Parses "-?[0-9]+(\.[0-9]+)?" or a "p/q" fraction. Throws FormatError.
  static ExactNumber parse(std::string_view text);

  ExactNumber operator+(const ExactNumber& rhs) const { return ExactNumber(value_ + rhs.value_); }
  ExactNumber operator-(const ExactNumber& rhs) const { return ExactNumber(value_ - rhs.value_); }
  ExactNumber operator*(const ExactNumber& rhs) const { return ExactNumber(value_ * rhs.value_); }
  ExactNumber operator-() const { return ExactNumber(-value_); }

  /// Exact division; throws DomainError when rhs == 0.
  ExactNumber operator/(const ExactNumber& rhs) const;

  bool operator==(const ExactNumber& rhs) const = default;
  std::strong_ordering operator<=>(const ExactNumber& rhs) const {
    if (value_ < rhs.value_) return std::strong_ordering::less;
    if (value_ > rhs.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return value_ == 0; }
  bool is_negative() const { return value_ < 0; }
  bool is_integer() const { return denominator() == 1; }

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }
  const Rational& raw() const { return value_; }

  /// True when the value renders exactly with at most `scale` decimal places,
  /// i.e. denominator divides 10^scale.
  bool exact_at_scale(unsigned scale) const;

  /// Exact decimal rendering. Trailing zeros (and a trailing point) are
  /// stripped, so 5/2 -> "2.5" and 4 -> "4". Throws DomainError when the value
  /// is not exact at `scale`.
  std::string to_decimal_string(unsigned scale) const;

  /// Debug rendering as "p/q" (or "p" for integers).
  std::string to_fraction_string() const;

private:
  Rational value_{0};
};

} // namespace contrarith
