#pragma once

#include "contrarith/digit_mapping.hpp"
#include "contrarith/exact_number.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace contrarith {

enum class Op { add, sub, mul, div };

constexpr std::array<Op, 4> kAllOps{Op::add, Op::sub, Op::mul, Op::div};

std::string_view op_name(Op op);                 // "add" / "sub" / "mul" / "div"
Op op_from_name(std::string_view name);          // throws LoadError
std::string_view op_glyph(Op op);                // "+", "-", "×", "/"
std::optional<Op> op_from_glyph(std::string_view glyph); // accepts aliases ÷, *, −

/// Closed forms an operator can take. The affine/scaled pair admits exact
/// inverse derivations; the four complex forms do not and stand alone.
enum class RuleForm {
  standard,
  affine_add,             // a {+} b = a + b + k
  derived_sub,            // a {-} b = a - b - k       (from affine_add)
  scaled_mul,             // a {x} b = a * b * k
  derived_div,            // a {/} b = a / (b * k)     (from scaled_mul)
  add_square_left,        // a {+} b = a^2 + b
  add_square_plus_product,// a {+} b = a^2 + a * b
  mul_plus_k,             // a {x} b = a * b + k
  mul_times_right,        // a {x} b = a * b * b
};

std::string_view rule_form_name(RuleForm form);
RuleForm rule_form_from_name(std::string_view name);
bool rule_form_has_k(RuleForm form);

/// One operator's semantics under a rule set.
struct OperatorRule {
  Op op = Op::add;
  RuleForm form = RuleForm::standard;
  ExactNumber k;                  // meaningful only when rule_form_has_k(form)
  std::optional<Op> derived_from; // set on derived_sub / derived_div

  static OperatorRule standard(Op op) { return {op, RuleForm::standard, ExactNumber(0), {}}; }
  static OperatorRule affine_add(ExactNumber k) {
    return {Op::add, RuleForm::affine_add, std::move(k), {}};
  }
  static OperatorRule scaled_mul(ExactNumber k) {
    return {Op::mul, RuleForm::scaled_mul, std::move(k), {}};
  }
  static OperatorRule add_square_left() {
    return {Op::add, RuleForm::add_square_left, ExactNumber(0), {}};
  }
  static OperatorRule add_square_plus_product() {
    return {Op::add, RuleForm::add_square_plus_product, ExactNumber(0), {}};
  }
  static OperatorRule mul_plus_k(ExactNumber k) {
    return {Op::mul, RuleForm::mul_plus_k, std::move(k), {}};
  }
  static OperatorRule mul_times_right() {
    return {Op::mul, RuleForm::mul_times_right, ExactNumber(0), {}};
  }

  bool is_standard() const { return form == RuleForm::standard; }
  bool operator==(const OperatorRule&) const = default;
};

/// Subtraction/division obtained from the identity and inverse elements of an
/// affine_add / scaled_mul rule. Throws DomainError for every other form (the
/// complex forms have no usable inverse derivation) and for scaled_mul with
/// k = 0, whose identity element does not exist.
OperatorRule derive_inverse_rule(const OperatorRule& rule);

/// Identity element of an invertible rule: -k for affine_add, 1/k for
/// scaled_mul, and the usual 0/1 for standard add/mul.
ExactNumber identity_element(const OperatorRule& rule);

/// Inverse of `a` under an invertible rule: -2k - a for affine_add,
/// 1/(a * k^2) for scaled_mul.
ExactNumber inverse_element(const OperatorRule& rule, const ExactNumber& a);

/// Evaluates one binary operation under `rule`, exactly. The derived forms are
/// computed through the inverse-element route (a {+} inv(b), a {x} inv(b)), so
/// tests can pin them against the closed forms independently.
ExactNumber eval_overloaded(const ExactNumber& a, const ExactNumber& b, const OperatorRule& rule);

/// A complete contradictory-rule specification: an optional digit permutation
/// plus one rule per operator. This is the intervention object every dataset
/// embeds verbatim.
struct RuleSet {
  std::string id;
  std::optional<DigitMapping> digit_mapping;
  std::map<Op, OperatorRule> op_rules; // one entry per operator, always
  std::string description;
  unsigned scale = 2; // decimal rendering scale for non-integer values

  RuleSet();
  explicit RuleSet(std::string id);

  static RuleSet standard_rules(std::string id = "standard");
  static RuleSet number_overloading(std::string id, DigitMapping mapping);
  /// Installs `rule` and, for affine_add / scaled_mul, its derived inverse.
  static RuleSet operator_overloading(std::string id, const OperatorRule& rule);

  const OperatorRule& rule_for(Op op) const { return op_rules.at(op); }
  bool has_digit_mapping() const { return digit_mapping.has_value(); }
  bool all_ops_standard() const;
  /// True when the set mixes a digit mapping with non-standard operator rules.
  bool is_mixed() const;

  /// Gold answer for (a op b) rendered at this rule set's scale.
  std::string gold_answer(const ExactNumber& a, Op op, const ExactNumber& b) const;

  nlohmann::json to_json() const;
  static RuleSet from_json(const nlohmann::json& j);
};

/// Oracle for number-overloading problems stated in mapped notation: unmap the
/// operands, apply the (standard) operation, re-map the rendered result.
/// Requires a digit mapping and a standard rule for `op`; throws
/// ConstraintError when a quotient is not exact at the rule set's scale.
std::string answer_in_mapped_notation(std::string_view lhs, Op op, std::string_view rhs,
                                      const RuleSet& ruleset);

/// One law checked by verify_group_axioms.
struct AxiomCheck {
  std::string name;
  bool required = true;   // distributivity is reported but not required
  bool passed = false;
  std::uint64_t trials = 0;
  std::string counterexample; // first failing instance, when any
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_required_passed() const;
  std::string to_text() const;
};

/// Exhaustive randomized check of the group laws for an affine_add rule, a
/// scaled_mul rule, and the consistency of their derived inverses. Joint
/// distributivity is evaluated too but reported as not required.
AxiomReport verify_group_axioms(const OperatorRule& add_rule, const OperatorRule& mul_rule,
                                std::uint64_t trials, std::uint64_t seed);

} // namespace contrarith
