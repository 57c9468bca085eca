#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sasaki/fields/chart.hpp"

namespace sasaki {

struct ResidualStats {
  double max = 0.0;
  double mean = 0.0;
  std::size_t points = 0;
};

// Max and mean of per-point residuals, evaluated point-parallel and reduced
// in point order so the result does not depend on the worker count.
ResidualStats residual_over(std::span<const fields::Point> points,
                            const std::function<double(const fields::Point&)>& residual_at);
// Reductions of already computed per-point values (same order semantics).
ResidualStats stats_of(std::span<const double> residuals);
ResidualStats margin_of(std::span<const double> values);
// Same reduction for separation values: `max` holds the smallest sampled
// value, which is the one an above-threshold check is judged on.
ResidualStats margin_over(std::span<const fields::Point> points,
                          const std::function<double(const fields::Point&)>& value_at);

// How a check's measured value is judged against its threshold.
enum class Sense {
  below,  // identity residual: pass iff value <= threshold
  above,  // separation (non-degeneracy, expected failure): pass iff value > threshold
};

struct Check {
  std::string name;
  // Stable identifier of the identity being verified (shared across suites
  // and models, used as the row key of the coverage matrix).
  std::string tag;
  // worst sampled value: largest residual (below) or smallest margin (above)
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double threshold = 0.0;
  Sense sense = Sense::below;
  bool applicable = true;
  bool pass = false;
  // Hypothesis of the suite rather than one of its conclusions; a failed
  // precondition means the suite does not apply to the input.
  bool precondition = false;
  std::size_t points = 0;
  std::string note;
};

Check make_check(std::string name, std::string tag, const ResidualStats& stats,
                 double threshold, Sense sense = Sense::below);
Check not_applicable(std::string name, std::string tag, std::string why);

struct FittedConstant {
  std::string name;
  double value = 0.0;
  // max |pointwise value - value| over the sample
  double spread = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  std::vector<FittedConstant> constants;
  std::vector<std::string> notes;

  // Conjunction of applicable checks. A suite with no applicable check does
  // not pass.
  bool pass() const;
  const Check* find(const std::string& name) const;
  const Check& at(const std::string& name) const;
  const FittedConstant* constant(const std::string& name) const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const SuiteReport& other);
  // Appends with every incoming check marked as a precondition.
  void append_preconditions(const SuiteReport& other);
  bool preconditions_met() const;
};

}  // namespace sasaki
