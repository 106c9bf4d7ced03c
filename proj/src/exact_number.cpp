#include "contrarith/exact_number.hpp"

#include "contrarith/errors.hpp"

#include <cctype>

namespace contrarith {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

ExactNumber::Integer pow10(unsigned n) {
  ExactNumber::Integer p = 1;
  for (unsigned i = 0; i < n; ++i) p *= 10;
  return p;
}

} // namespace

ExactNumber::ExactNumber(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = Rational(Integer(num), Integer(den));
}

ExactNumber ExactNumber::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw FormatError("empty numeric string");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    bool neg = !num.empty() && num.front() == '-';
    if (neg) num.erase(0, 1);
    if (!all_digits(num) || !all_digits(den)) throw FormatError("malformed fraction: " + s);
    Integer d(den);
    if (d == 0) throw DomainError("fraction with zero denominator: " + s);
    Rational r(Integer(num), d);
    return ExactNumber(neg ? Rational(-r) : r);
  }

  bool neg = s.front() == '-';
  std::string_view body = neg ? std::string_view(s).substr(1) : std::string_view(s);
  std::string int_part;
  std::string frac_part;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    int_part = std::string(body.substr(0, dot));
    frac_part = std::string(body.substr(dot + 1));
    if (frac_part.empty()) throw FormatError("malformed decimal: " + s);
  } else {
    int_part = std::string(body);
  }
  if (!all_digits(int_part) || (!frac_part.empty() && !all_digits(frac_part))) {
    throw FormatError("malformed numeral: " + s);
  }

  Integer scaled(int_part + frac_part);
  Rational r(scaled, pow10(static_cast<unsigned>(frac_part.size())));
  return ExactNumber(neg ? Rational(-r) : r);
}

ExactNumber ExactNumber::operator/(const ExactNumber& rhs) const {
  if (rhs.is_zero()) throw DomainError("division by zero");
  return ExactNumber(Rational(value_ / rhs.value_));
}

bool ExactNumber::exact_at_scale(unsigned scale) const {
  return pow10(scale) % denominator() == 0;
}

std::string ExactNumber::to_decimal_string(unsigned scale) const {
  if (!exact_at_scale(scale)) {
    throw DomainError("value " + to_fraction_string() + " is not exact at scale " +
                      std::to_string(scale));
  }
  Integer num = numerator();
  bool neg = num < 0;
  if (neg) num = -num;
  Integer scaled = num * (pow10(scale) / denominator());

  std::string digits = scaled.str();
  if (digits.size() <= scale) digits.insert(0, scale - digits.size() + 1, '0');

  std::string int_part = digits.substr(0, digits.size() - scale);
  std::string frac_part = scale == 0 ? std::string() : digits.substr(digits.size() - scale);
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();

  std::string out = neg && (int_part != "0" || !frac_part.empty()) ? "-" : "";
  out += int_part;
  if (!frac_part.empty()) {
    out += '.';
    out += frac_part;
  }
  return out;
}

std::string ExactNumber::to_fraction_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

} // namespace contrarith
