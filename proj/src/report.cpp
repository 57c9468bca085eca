#include "sasaki/report.hpp"

#include <cmath>

#include "sasaki/errors.hpp"
#include "sasaki/parallel.hpp"

namespace sasaki {

ResidualStats stats_of(std::span<const double> residuals) {
  ResidualStats s;
  s.points = residuals.size();
  double sum = 0.0;
  for (double r : residuals) {
    if (std::isnan(r) || r > s.max) s.max = r;
    sum += r;
  }
  s.mean = residuals.empty() ? 0.0 : sum / static_cast<double>(residuals.size());
  return s;
}

ResidualStats margin_of(std::span<const double> values) {
  ResidualStats s;
  s.points = values.size();
  if (values.empty()) return s;
  s.max = values.front();
  double sum = 0.0;
  for (double v : values) {
    if (std::isnan(v) || v < s.max) s.max = v;
    sum += v;
  }
  s.mean = sum / static_cast<double>(values.size());
  return s;
}

ResidualStats residual_over(std::span<const fields::Point> points,
                            const std::function<double(const fields::Point&)>& residual_at) {
  return stats_of(parallel_map(points.size(), [&](std::size_t i) { return residual_at(points[i]); }));
}

ResidualStats margin_over(std::span<const fields::Point> points,
                          const std::function<double(const fields::Point&)>& value_at) {
  return margin_of(parallel_map(points.size(), [&](std::size_t i) { return value_at(points[i]); }));
}

Check make_check(std::string name, std::string tag, const ResidualStats& stats, double threshold,
                 Sense sense) {
  Check c;
  c.name = std::move(name);
  c.tag = std::move(tag);
  c.max_residual = stats.max;
  c.mean_residual = stats.mean;
  c.threshold = threshold;
  c.sense = sense;
  c.points = stats.points;
  // a NaN residual fails either way
  c.pass = sense == Sense::below ? stats.max <= threshold : stats.max > threshold;
  return c;
}

Check not_applicable(std::string name, std::string tag, std::string why) {
  Check c;
  c.name = std::move(name);
  c.tag = std::move(tag);
  c.applicable = false;
  c.pass = false;
  c.note = std::move(why);
  return c;
}

bool SuiteReport::pass() const {
  bool any = false;
  for (const auto& c : checks) {
    if (!c.applicable) continue;
    any = true;
    if (!c.pass) return false;
  }
  return any;
}

const Check* SuiteReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const Check& SuiteReport::at(const std::string& name) const {
  if (const Check* c = find(name)) return *c;
  throw InvalidArgument("suite '" + suite + "' has no check named '" + name + "'");
}

const FittedConstant* SuiteReport::constant(const std::string& name) const {
  for (const auto& c : constants) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void SuiteReport::append(const SuiteReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  constants.insert(constants.end(), other.constants.begin(), other.constants.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

void SuiteReport::append_preconditions(const SuiteReport& other) {
  const std::size_t first = checks.size();
  append(other);
  for (std::size_t i = first; i < checks.size(); ++i) checks[i].precondition = true;
}

bool SuiteReport::preconditions_met() const {
  for (const auto& c : checks) {
    if (c.precondition && c.applicable && !c.pass) return false;
  }
  return true;
}

}  // namespace sasaki
