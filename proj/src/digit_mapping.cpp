#include "contrarith/digit_mapping.hpp"

#include "contrarith/errors.hpp"
#include "contrarith/rng.hpp"

#include <algorithm>
#include <numeric>

namespace contrarith {

namespace {

void check_bijection(const std::array<std::uint8_t, 10>& table) {
  std::array<bool, 10> seen{};
  for (std::uint8_t img : table) {
    if (img > 9 || seen[img]) throw LoadError("digit mapping is not a permutation of 0-9");
    seen[img] = true;
  }
}

void check_numeral(std::string_view numeral) {
  std::string_view body = numeral;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  if (body.empty()) throw FormatError("malformed numeral: " + std::string(numeral));
  bool seen_point = false;
  bool digit_before = false;
  bool digit_after = false;
  for (char c : body) {
    if (c == '.') {
      if (seen_point || !digit_before) throw FormatError("malformed numeral: " + std::string(numeral));
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      (seen_point ? digit_after : digit_before) = true;
    } else {
      throw FormatError("malformed numeral: " + std::string(numeral));
    }
  }
  if (!digit_before || (seen_point && !digit_after)) {
    throw FormatError("malformed numeral: " + std::string(numeral));
  }
}

} // namespace

DigitMapping::DigitMapping() {
  std::iota(table_.begin(), table_.end(), std::uint8_t{0});
}

DigitMapping::DigitMapping(const std::array<std::uint8_t, 10>& table) : table_(table) {
  check_bijection(table_);
}

DigitMapping DigitMapping::from_map(const std::map<std::string, std::string>& entries) {
  if (entries.size() != 10) throw LoadError("digit mapping must have exactly 10 entries");
  std::array<std::uint8_t, 10> table{};
  for (const auto& [from, to] : entries) {
    if (from.size() != 1 || to.size() != 1 || from[0] < '0' || from[0] > '9' || to[0] < '0' ||
        to[0] > '9') {
      throw LoadError("digit mapping entries must map single digits: \"" + from + "\":\"" + to +
                      "\"");
    }
    table[static_cast<std::uint8_t>(from[0] - '0')] = static_cast<std::uint8_t>(to[0] - '0');
  }
  return DigitMapping(table);
}

DigitMapping DigitMapping::shift_by_one() {
  return DigitMapping({0, 2, 3, 4, 5, 6, 7, 8, 9, 1});
}

DigitMapping DigitMapping::random(Rng& rng, bool pin_zero) {
  std::array<std::uint8_t, 10> table{};
  std::iota(table.begin(), table.end(), std::uint8_t{0});
  std::size_t first = pin_zero ? 1 : 0;
  // Fisher-Yates over the movable tail.
  for (std::size_t i = table.size() - 1; i > first; --i) {
    std::size_t j = first + rng.below(i - first + 1);
    std::swap(table[i], table[j]);
  }
  return DigitMapping(table);
}

bool DigitMapping::is_identity() const {
  for (std::size_t d = 0; d < table_.size(); ++d) {
    if (table_[d] != d) return false;
  }
  return true;
}

DigitMapping DigitMapping::inverse() const {
  std::array<std::uint8_t, 10> inv{};
  for (std::uint8_t d = 0; d < 10; ++d) inv[table_[d]] = d;
  return DigitMapping(inv);
}

std::string DigitMapping::apply(std::string_view numeral) const {
  check_numeral(numeral);
  std::string out(numeral);
  for (char& c : out) {
    if (c >= '0' && c <= '9') c = static_cast<char>('0' + table_[c - '0']);
  }
  return out;
}

std::string DigitMapping::unapply(std::string_view numeral) const {
  return inverse().apply(numeral);
}

std::map<std::string, std::string> DigitMapping::to_map() const {
  std::map<std::string, std::string> out;
  for (std::uint8_t d = 0; d < 10; ++d) {
    out[std::string(1, static_cast<char>('0' + d))] =
        std::string(1, static_cast<char>('0' + table_[d]));
  }
  return out;
}

std::string map_numeral(std::string_view numeral, const DigitMapping& mapping) {
  return mapping.apply(numeral);
}

std::string unmap_numeral(std::string_view numeral, const DigitMapping& mapping) {
  return mapping.unapply(numeral);
}

} // namespace contrarith
