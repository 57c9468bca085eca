#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sasaki::fields {

struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  static Box cube(int dim, double half_width);
  bool contains(const std::vector<double>& x) const;
};

/// A single coordinate chart. `domain`, when present, bounds where component
/// functions are defined; it is unrelated to the sampling box.
class Chart {
 public:
  Chart(std::vector<std::string> names, std::optional<Box> domain = std::nullopt);
  static Chart numbered(int dim, const std::string& prefix = "x");

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::optional<Box>& domain() const { return domain_; }

  friend bool operator==(const Chart& a, const Chart& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::optional<Box> domain_;
};

class Point {
 public:
  explicit Point(std::vector<double> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& coords() const { return coords_; }

 private:
  std::vector<double> coords_;
};

// Uniform samples in `box`, reproducible from `seed`.
std::vector<Point> sample_box(const Box& box, std::size_t count, std::uint64_t seed);

}  // namespace sasaki::fields
