#include "contrarith/rules.hpp"

#include "contrarith/errors.hpp"
#include "contrarith/rng.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <sstream>

namespace contrarith {

std::string_view op_name(Op op) {
  switch (op) {
    case Op::add: return "add";
    case Op::sub: return "sub";
    case Op::mul: return "mul";
    case Op::div: return "div";
  }
  throw DomainError("unknown operator");
}

Op op_from_name(std::string_view name) {
  for (Op op : kAllOps) {
    if (op_name(op) == name) return op;
  }
  throw LoadError("unknown operator name: " + std::string(name));
}

std::string_view op_glyph(Op op) {
  switch (op) {
    case Op::add: return "+";
    case Op::sub: return "-";
    case Op::mul: return "\xc3\x97"; // ×
    case Op::div: return "/";
  }
  throw DomainError("unknown operator");
}

std::optional<Op> op_from_glyph(std::string_view glyph) {
  if (glyph == "+") return Op::add;
  if (glyph == "-" || glyph == "\xe2\x88\x92") return Op::sub; // accepts U+2212
  if (glyph == "\xc3\x97" || glyph == "*" || glyph == "x") return Op::mul;
  if (glyph == "/" || glyph == "\xc3\xb7") return Op::div; // accepts ÷
  return std::nullopt;
}

std::string_view rule_form_name(RuleForm form) {
  switch (form) {
    case RuleForm::standard: return "standard";
    case RuleForm::affine_add: return "affine_add";
    case RuleForm::derived_sub: return "derived_sub";
    case RuleForm::scaled_mul: return "scaled_mul";
    case RuleForm::derived_div: return "derived_div";
    case RuleForm::add_square_left: return "add_square_left";
    case RuleForm::add_square_plus_product: return "add_square_plus_product";
    case RuleForm::mul_plus_k: return "mul_plus_k";
    case RuleForm::mul_times_right: return "mul_times_right";
  }
  throw DomainError("unknown rule form");
}

RuleForm rule_form_from_name(std::string_view name) {
  for (RuleForm f :
       {RuleForm::standard, RuleForm::affine_add, RuleForm::derived_sub, RuleForm::scaled_mul,
        RuleForm::derived_div, RuleForm::add_square_left, RuleForm::add_square_plus_product,
        RuleForm::mul_plus_k, RuleForm::mul_times_right}) {
    if (rule_form_name(f) == name) return f;
  }
  throw LoadError("unknown rule form: " + std::string(name));
}

bool rule_form_has_k(RuleForm form) {
  switch (form) {
    case RuleForm::affine_add:
    case RuleForm::derived_sub:
    case RuleForm::scaled_mul:
    case RuleForm::derived_div:
    case RuleForm::mul_plus_k:
      return true;
    default:
      return false;
  }
}

OperatorRule derive_inverse_rule(const OperatorRule& rule) {
  switch (rule.form) {
    case RuleForm::affine_add:
      return {Op::sub, RuleForm::derived_sub, rule.k, Op::add};
    case RuleForm::scaled_mul:
      if (rule.k.is_zero()) {
        throw DomainError("scaled_mul with k = 0 has no identity element to derive from");
      }
      return {Op::div, RuleForm::derived_div, rule.k, Op::mul};
    default:
      throw DomainError(std::string("no inverse derivation for rule form ") +
                        std::string(rule_form_name(rule.form)));
  }
}

ExactNumber identity_element(const OperatorRule& rule) {
  switch (rule.form) {
    case RuleForm::standard:
      if (rule.op == Op::add) return ExactNumber(0);
      if (rule.op == Op::mul) return ExactNumber(1);
      throw DomainError("identity element only defined for add/mul rules");
    case RuleForm::affine_add:
      return -rule.k;
    case RuleForm::scaled_mul:
      if (rule.k.is_zero()) throw DomainError("scaled_mul with k = 0 has no identity element");
      return ExactNumber(1) / rule.k;
    default:
      throw DomainError(std::string("no identity element for rule form ") +
                        std::string(rule_form_name(rule.form)));
  }
}

ExactNumber inverse_element(const OperatorRule& rule, const ExactNumber& a) {
  switch (rule.form) {
    case RuleForm::standard:
      if (rule.op == Op::add) return -a;
      if (rule.op == Op::mul) {
        if (a.is_zero()) throw DomainError("zero has no multiplicative inverse");
        return ExactNumber(1) / a;
      }
      throw DomainError("inverse element only defined for add/mul rules");
    case RuleForm::affine_add:
      return -rule.k - rule.k - a;
    case RuleForm::scaled_mul: {
      if (rule.k.is_zero()) throw DomainError("scaled_mul with k = 0 has no inverses");
      if (a.is_zero()) throw DomainError("zero has no inverse under scaled multiplication");
      return ExactNumber(1) / (a * rule.k * rule.k);
    }
    default:
      throw DomainError(std::string("no inverse element for rule form ") +
                        std::string(rule_form_name(rule.form)));
  }
}

ExactNumber eval_overloaded(const ExactNumber& a, const ExactNumber& b, const OperatorRule& rule) {
  switch (rule.form) {
    case RuleForm::standard:
      switch (rule.op) {
        case Op::add: return a + b;
        case Op::sub: return a - b;
        case Op::mul: return a * b;
        case Op::div: return a / b;
      }
      throw DomainError("unknown operator");
    case RuleForm::affine_add:
      return a + b + rule.k;
    case RuleForm::derived_sub: {
      // a {-} b = a {+} inv(b) under the generating affine_add rule.
      OperatorRule gen = OperatorRule::affine_add(rule.k);
      return eval_overloaded(a, inverse_element(gen, b), gen);
    }
    case RuleForm::scaled_mul:
      return a * b * rule.k;
    case RuleForm::derived_div: {
      if (rule.k.is_zero()) throw DomainError("derived division requires k != 0");
      if (b.is_zero()) throw DomainError("division by zero");
      OperatorRule gen = OperatorRule::scaled_mul(rule.k);
      return eval_overloaded(a, inverse_element(gen, b), gen);
    }
    case RuleForm::add_square_left:
      return a * a + b;
    case RuleForm::add_square_plus_product:
      return a * a + a * b;
    case RuleForm::mul_plus_k:
      return a * b + rule.k;
    case RuleForm::mul_times_right:
      return a * b * b;
  }
  throw DomainError("unknown rule form");
}

RuleSet::RuleSet() : RuleSet("standard") {}

RuleSet::RuleSet(std::string id_) : id(std::move(id_)) {
  for (Op op : kAllOps) op_rules.emplace(op, OperatorRule::standard(op));
}

RuleSet RuleSet::standard_rules(std::string id) {
  RuleSet rs(std::move(id));
  rs.description = "standard arithmetic";
  return rs;
}

RuleSet RuleSet::number_overloading(std::string id, DigitMapping mapping) {
  RuleSet rs(std::move(id));
  rs.digit_mapping = std::move(mapping);
  rs.description = "digit-permutation number overloading";
  return rs;
}

RuleSet RuleSet::operator_overloading(std::string id, const OperatorRule& rule) {
  RuleSet rs(std::move(id));
  rs.op_rules[rule.op] = rule;
  if (rule.form == RuleForm::affine_add || rule.form == RuleForm::scaled_mul) {
    OperatorRule derived = derive_inverse_rule(rule);
    rs.op_rules[derived.op] = derived;
  }
  rs.description = std::string("operator overloading: ") + std::string(rule_form_name(rule.form));
  return rs;
}

bool RuleSet::all_ops_standard() const {
  for (const auto& [op, rule] : op_rules) {
    if (!rule.is_standard()) return false;
  }
  return true;
}

bool RuleSet::is_mixed() const {
  return has_digit_mapping() && !digit_mapping->is_identity() && !all_ops_standard();
}

std::string RuleSet::gold_answer(const ExactNumber& a, Op op, const ExactNumber& b) const {
  if (has_digit_mapping() && !digit_mapping->is_identity()) {
    return answer_in_mapped_notation(map_numeral(a.to_decimal_string(scale), *digit_mapping), op,
                                     map_numeral(b.to_decimal_string(scale), *digit_mapping),
                                     *this);
  }
  ExactNumber result = eval_overloaded(a, b, rule_for(op));
  return result.to_decimal_string(scale);
}

nlohmann::json RuleSet::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  if (has_digit_mapping()) {
    j["digit_mapping"] = digit_mapping->to_map();
  } else {
    j["digit_mapping"] = nullptr;
  }
  nlohmann::json rules = nlohmann::json::object();
  for (const auto& [op, rule] : op_rules) {
    nlohmann::json r;
    r["form"] = std::string(rule_form_name(rule.form));
    if (rule_form_has_k(rule.form)) r["k"] = rule.k.to_decimal_string(rule.k.is_integer() ? 0 : 9);
    if (rule.derived_from) r["derived_from"] = std::string(op_name(*rule.derived_from));
    rules[std::string(op_name(op))] = std::move(r);
  }
  j["op_rules"] = std::move(rules);
  j["description"] = description;
  j["scale"] = scale;
  return j;
}

RuleSet RuleSet::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("id") || !j.contains("op_rules")) {
    throw LoadError("rule set JSON must contain \"id\" and \"op_rules\"");
  }
  RuleSet rs(j.at("id").get<std::string>());
  if (j.contains("digit_mapping") && !j.at("digit_mapping").is_null()) {
    rs.digit_mapping =
        DigitMapping::from_map(j.at("digit_mapping").get<std::map<std::string, std::string>>());
  }
  for (const auto& [name, r] : j.at("op_rules").items()) {
    Op op = op_from_name(name);
    OperatorRule rule;
    rule.op = op;
    rule.form = rule_form_from_name(r.at("form").get<std::string>());
    if (rule_form_has_k(rule.form)) {
      if (!r.contains("k")) throw LoadError("rule form requires parameter k: " + name);
      rule.k = ExactNumber::parse(r.at("k").get<std::string>());
    }
    if (r.contains("derived_from") && !r.at("derived_from").is_null()) {
      rule.derived_from = op_from_name(r.at("derived_from").get<std::string>());
    }
    rs.op_rules[op] = rule;
  }
  for (Op op : kAllOps) {
    if (!rs.op_rules.contains(op)) rs.op_rules.emplace(op, OperatorRule::standard(op));
  }
  if (j.contains("description")) rs.description = j.at("description").get<std::string>();
  if (j.contains("scale")) rs.scale = j.at("scale").get<unsigned>();
  return rs;
}

std::string answer_in_mapped_notation(std::string_view lhs, Op op, std::string_view rhs,
                                      const RuleSet& ruleset) {
  if (!ruleset.has_digit_mapping()) {
    throw ConstraintError("answer_in_mapped_notation requires a digit mapping");
  }
  const OperatorRule& rule = ruleset.rule_for(op);
  if (!rule.is_standard()) {
    throw ConstraintError("answer_in_mapped_notation requires a standard rule for " +
                          std::string(op_name(op)));
  }
  const DigitMapping& mapping = *ruleset.digit_mapping;
  ExactNumber a = ExactNumber::parse(unmap_numeral(lhs, mapping));
  ExactNumber b = ExactNumber::parse(unmap_numeral(rhs, mapping));
  ExactNumber result = eval_overloaded(a, b, rule);
  if (!result.exact_at_scale(ruleset.scale)) {
    throw ConstraintError("quotient " + result.to_fraction_string() + " is not exact at scale " +
                          std::to_string(ruleset.scale));
  }
  return map_numeral(result.to_decimal_string(ruleset.scale), mapping);
}

bool AxiomReport::all_required_passed() const {
  for (const auto& c : checks) {
    if (c.required && !c.passed) return false;
  }
  return true;
}

std::string AxiomReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS" : (c.required ? "FAIL" : "fail (not required)")) << "  " << c.name
        << "  [" << c.trials << " trials]";
    if (!c.passed && !c.counterexample.empty()) out << "  counterexample: " << c.counterexample;
    out << "\n";
  }
  return out.str();
}

namespace {

ExactNumber random_rational(Rng& rng) {
  std::int64_t num = rng.range(-1000, 1000);
  std::int64_t den = rng.range(1, 30);
  return ExactNumber(num, den);
}

ExactNumber random_nonzero_rational(Rng& rng) {
  for (;;) {
    ExactNumber x = random_rational(rng);
    if (!x.is_zero()) return x;
  }
}

std::string show(const ExactNumber& a) { return a.to_fraction_string(); }

} // namespace

AxiomReport verify_group_axioms(const OperatorRule& add_rule, const OperatorRule& mul_rule,
                                std::uint64_t trials, std::uint64_t seed) {
  if (add_rule.form != RuleForm::affine_add || mul_rule.form != RuleForm::scaled_mul) {
    throw DomainError("verify_group_axioms expects an affine_add and a scaled_mul rule");
  }
  OperatorRule sub_rule = derive_inverse_rule(add_rule);
  OperatorRule div_rule = derive_inverse_rule(mul_rule);

  auto add = [&](const ExactNumber& a, const ExactNumber& b) {
    return eval_overloaded(a, b, add_rule);
  };
  auto mul = [&](const ExactNumber& a, const ExactNumber& b) {
    return eval_overloaded(a, b, mul_rule);
  };

  struct Law {
    std::string name;
    bool required;
    // Returns empty string on success, else a counterexample description.
    std::function<std::string(Rng&)> run;
  };

  ExactNumber add_id = identity_element(add_rule);
  ExactNumber mul_id = identity_element(mul_rule);

  std::vector<Law> laws;
  laws.push_back({"additive commutativity: a {+} b == b {+} a", true, [&](Rng& rng) {
                    ExactNumber a = random_rational(rng), b = random_rational(rng);
                    return add(a, b) == add(b, a) ? "" : show(a) + ", " + show(b);
                  }});
  laws.push_back({"additive associativity: (a {+} b) {+} c == a {+} (b {+} c)", true,
                  [&](Rng& rng) {
                    ExactNumber a = random_rational(rng), b = random_rational(rng),
                                c = random_rational(rng);
                    return add(add(a, b), c) == add(a, add(b, c))
                               ? ""
                               : show(a) + ", " + show(b) + ", " + show(c);
                  }});
  laws.push_back({"additive identity: a {+} (-k) == a", true, [&](Rng& rng) {
                    ExactNumber a = random_rational(rng);
                    return add(a, add_id) == a ? "" : show(a);
                  }});
  laws.push_back({"additive inverse: a {+} (-2k - a) == -k", true, [&](Rng& rng) {
                    ExactNumber a = random_rational(rng);
                    return add(a, inverse_element(add_rule, a)) == add_id ? "" : show(a);
                  }});
  laws.push_back({"multiplicative commutativity: a {x} b == b {x} a", true, [&](Rng& rng) {
                    ExactNumber a = random_rational(rng), b = random_rational(rng);
                    return mul(a, b) == mul(b, a) ? "" : show(a) + ", " + show(b);
                  }});
  laws.push_back({"multiplicative associativity: (a {x} b) {x} c == a {x} (b {x} c)", true,
                  [&](Rng& rng) {
                    ExactNumber a = random_rational(rng), b = random_rational(rng),
                                c = random_rational(rng);
                    return mul(mul(a, b), c) == mul(a, mul(b, c))
                               ? ""
                               : show(a) + ", " + show(b) + ", " + show(c);
                  }});
  laws.push_back({"multiplicative identity: a {x} (1/k) == a", true, [&](Rng& rng) {
                    ExactNumber a = random_rational(rng);
                    return mul(a, mul_id) == a ? "" : show(a);
                  }});
  laws.push_back({"multiplicative inverse: a {x} (1/(a k^2)) == 1/k", true, [&](Rng& rng) {
                    ExactNumber a = random_nonzero_rational(rng);
                    return mul(a, inverse_element(mul_rule, a)) == mul_id ? "" : show(a);
                  }});
  laws.push_back({"derived subtraction: a {-} b == a {+} inv(b)", true, [&](Rng& rng) {
                    ExactNumber a = random_rational(rng), b = random_rational(rng);
                    return eval_overloaded(a, b, sub_rule) == add(a, inverse_element(add_rule, b))
                               ? ""
                               : show(a) + ", " + show(b);
                  }});
  laws.push_back({"derived division: a {/} b == a {x} inv(b)", true, [&](Rng& rng) {
                    ExactNumber a = random_rational(rng), b = random_nonzero_rational(rng);
                    return eval_overloaded(a, b, div_rule) == mul(a, inverse_element(mul_rule, b))
                               ? ""
                               : show(a) + ", " + show(b);
                  }});
  laws.push_back({"joint distributivity: a {x} (b {+} c) == (a {x} b) {+} (a {x} c)", false,
                  [&](Rng& rng) {
                    ExactNumber a = random_rational(rng), b = random_rational(rng),
                                c = random_rational(rng);
                    return mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
                               ? ""
                               : show(a) + ", " + show(b) + ", " + show(c);
                  }});

  AxiomReport report;
  for (std::size_t i = 0; i < laws.size(); ++i) {
    Rng rng = Rng::derive(seed, "axioms", i);
    AxiomCheck check;
    check.name = laws[i].name;
    check.required = laws[i].required;
    check.passed = true;
    check.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::string cex = laws[i].run(rng);
      if (!cex.empty()) {
        check.passed = false;
        check.counterexample = cex;
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

} // namespace contrarith
