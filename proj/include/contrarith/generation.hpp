#pragma once

#include "contrarith/exact_number.hpp"
#include "contrarith/rules.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace contrarith {

/// A single binary operation over true (unmapped) values.
struct Expression {
  ExactNumber lhs;
  Op op = Op::add;
  ExactNumber rhs;
};

enum class ProblemKind { symbolic, verbal, word, image };
enum class Split { train, ft_test, mwp_test, image_warmup, image_baseline, image_test };

std::string_view problem_kind_name(ProblemKind kind);
ProblemKind problem_kind_from_name(std::string_view name);
std::string_view split_name(Split split);
Split split_from_name(std::string_view name);

/// One evaluation or training item. `surface` is what the model sees (mapped
/// numerals when the rule set has a digit mapping); `expression` keeps the
/// true operand values; `gold_answer` is always the oracle output in surface
/// form.
struct Problem {
  std::string id;
  ProblemKind kind = ProblemKind::symbolic;
  std::string surface;
  Expression expression;
  std::string gold_answer;
  std::string ruleset_id;
  Split split = Split::train;
  std::string image_path; // relative path, image splits only
};

/// A multi-problem fine-tuning record under the direct-answer prompt.
struct Dialogue {
  std::string id;
  std::string system_prompt;
  std::vector<std::pair<std::string, std::string>> turns; // (user, assistant)
};

/// Inclusive sampling interval on the decimal grid of the active scale.
struct Range {
  ExactNumber lo;
  ExactNumber hi;
  bool contains(const ExactNumber& x) const { return lo <= x && x <= hi; }
};

struct OperandRanges {
  Range lhs;
  Range rhs;
};

struct SplitCounts {
  std::size_t train = 0;
  std::size_t ft_test = 0;
  std::size_t mwp_test = 0;
  std::size_t image_warmup = 0;
  std::size_t image_baseline = 0;
  std::size_t image_test = 0;
};

struct GenerationConfig {
  RuleSet ruleset;
  std::uint64_t seed = 0;
  SplitCounts counts;
  std::vector<Op> operators{Op::add, Op::sub, Op::mul, Op::div};
  std::map<Op, OperandRanges> train_ranges;
  std::map<Op, OperandRanges> mwp_ranges;
  std::map<Op, std::vector<std::string>> verbal_words;
  std::pair<unsigned, unsigned> turns_per_dialogue{3, 6};
  bool decimal_mode = false;
  unsigned scale = 2;
  std::string system_prompt = "Answer with only the final number. Do not show any work.";
  bool require_nonnegative_answers = true;
  unsigned resample_budget = 10000;

  /// Fills train_ranges/mwp_ranges/verbal_words that were left empty and
  /// checks the invariants (counts, mwp ⊆ train, decimal-mode operator set).
  /// Throws GenerationError on violations.
  void finalize();

  nlohmann::json to_json() const;
  static GenerationConfig from_json(const nlohmann::json& j);
};

/// Renders a true value the way the model sees it (digit-mapped when the rule
/// set has a mapping).
std::string display_numeral(const ExactNumber& value, const RuleSet& ruleset);

/// n symbolic training problems ("A × B"). Deterministic in (config, n).
std::vector<Problem> gen_symbolic(const GenerationConfig& config, std::size_t n);

/// n verbal training problems ("A times B").
std::vector<Problem> gen_verbal(const GenerationConfig& config, std::size_t n);

/// The full training split: symbolic and verbal interleaved 1:1 (odd counts
/// get the extra symbolic item).
std::vector<Problem> gen_train_mix(const GenerationConfig& config);

/// Sequentially partitions problems into dialogues with sampled turn counts;
/// the last dialogue takes the remainder.
std::vector<Dialogue> wrap_dialogues(const std::vector<Problem>& problems,
                                     const GenerationConfig& config);

/// In-distribution test split: same sampler and mix as training, disjoint id
/// space, exact duplicates (by surface) removed and resampled.
std::vector<Problem> gen_ft_testset(const GenerationConfig& config, std::size_t n);

} // namespace contrarith
