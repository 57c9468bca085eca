#include "sasaki/fields/chart.hpp"

#include <cmath>
#include <random>
#include <set>

#include "sasaki/errors.hpp"

namespace sasaki::fields {

Box Box::cube(int dim, double half_width) {
  return Box{std::vector<double>(static_cast<std::size_t>(dim), -half_width),
             std::vector<double>(static_cast<std::size_t>(dim), half_width)};
}

bool Box::contains(const std::vector<double>& x) const {
  if (x.size() != lo.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  }
  return true;
}

Chart::Chart(std::vector<std::string> names, std::optional<Box> domain)
    : names_(std::move(names)), domain_(std::move(domain)) {
  if (names_.empty()) throw InvalidArgument("chart needs at least one coordinate");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size()) {
    throw InvalidArgument("chart coordinate names must be distinct");
  }
  if (domain_ && (domain_->lo.size() != names_.size() || domain_->hi.size() != names_.size())) {
    throw InvalidArgument("chart domain dimension mismatch");
  }
}

Chart Chart::numbered(int dim, const std::string& prefix) {
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i + 1));
  return Chart(std::move(names));
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double c : coords_) {
    if (!std::isfinite(c)) throw DomainError("point coordinates must be finite");
  }
}

std::vector<Point> sample_box(const Box& box, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<double> x(box.lo.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * unit(rng);
    }
    pts.emplace_back(std::move(x));
  }
  return pts;
}

}  // namespace sasaki::fields
