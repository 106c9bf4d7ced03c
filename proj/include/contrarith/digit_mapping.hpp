#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace contrarith {

class Rng;

/// A permutation of the ten digit characters. Applying it to a numeral string
/// rewrites each digit and leaves sign and decimal point untouched.
class DigitMapping {
public:
  /// Identity permutation.
  DigitMapping();

  /// Builds from a 10-entry table where table[d] is the image of digit d.
  /// Throws LoadError unless the table is a bijection on {0,...,9}.
  explicit DigitMapping(const std::array<std::uint8_t, 10>& table);

  /// Builds from the JSON-ish map form {"0":"0","1":"2",...}.
  static DigitMapping from_map(const std::map<std::string, std::string>& entries);

  /// The mapping published with the worked examples: 1->2, 2->3, ..., 8->9,
  /// 9->1 and 0->0.
  static DigitMapping shift_by_one();

  /// Random permutation. When `pin_zero` is set, 0 maps to 0 (keeps mapped
  /// numerals free of new leading zeros).
  static DigitMapping random(Rng& rng, bool pin_zero = true);

  bool is_identity() const;
  DigitMapping inverse() const;

  std::uint8_t apply_digit(std::uint8_t d) const { return table_[d]; }

  /// Digit-wise application to "-?[0-9]+(\.[0-9]+)?". Throws FormatError for
  /// anything else. Digit count, sign and point position are preserved.
  std::string apply(std::string_view numeral) const;

  /// Inverse application; apply(unapply(s)) == s.
  std::string unapply(std::string_view numeral) const;

  std::map<std::string, std::string> to_map() const;

  bool operator==(const DigitMapping&) const = default;

private:
  std::array<std::uint8_t, 10> table_;
};

/// Free-function spellings used throughout generation code.
std::string map_numeral(std::string_view numeral, const DigitMapping& mapping);
std::string unmap_numeral(std::string_view numeral, const DigitMapping& mapping);

} // namespace contrarith
