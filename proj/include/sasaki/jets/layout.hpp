#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace sasaki::jets {

// Highest truncation order a jet may carry. Third metric derivatives feed the
// curvature-derivative identities; the scalar Laplacian of curvature needs a
// fourth.
inline constexpr int kMaxOrder = 4;

// Exponent of each chart variable; total degree = sum of entries.
using MultiIndex = std::vector<int>;

struct JetSpec {
  int dim = 1;
  int order = 3;

  friend bool operator==(const JetSpec&, const JetSpec&) = default;
};

// Throws InvalidArgument unless 1 <= dim and 0 <= order <= kMaxOrder.
void validate(const JetSpec& spec);

// Number of multi-indices of total degree <= order in dim variables.
std::size_t coefficient_count(const JetSpec& spec);

/// Precomputed index tables for one (dim, order) pair.
///
/// Coefficients are stored densely in graded-lexicographic order: all
/// monomials of degree 0, then degree 1, ... and within one degree in
/// descending lexicographic order of the exponent vector, so for dim = 2 the
/// order is 1, x, y, x^2, xy, y^2. Because the ordering is graded, the layout
/// of a lower order is a prefix of the layout of a higher one; truncation is
/// a prefix copy and every table below is prefix-stable.
class Layout {
 public:
  explicit Layout(const JetSpec& spec);

  const JetSpec& spec() const { return spec_; }
  std::size_t size() const { return monomials_.size(); }
  const MultiIndex& monomial(std::size_t k) const { return monomials_[k]; }
  int degree(std::size_t k) const { return degrees_[k]; }
  // First coefficient index of the given degree (degree_begin(order + 1) == size()).
  std::size_t degree_begin(int degree) const { return degree_offsets_[degree]; }
  // Product of factorials of the exponents of monomial k.
  double factorial(std::size_t k) const { return factorials_[k]; }

  // Returns -1 when the multi-index is not part of this layout.
  long index_of(const MultiIndex& alpha) const;

  // Truncated product table: output coefficient k receives
  // sum over p in [pair_begin(k), pair_begin(k+1)) of a[lhs(p)] * b[rhs(p)],
  // pairs ordered by ascending lhs index.
  std::size_t pair_begin(std::size_t k) const { return pair_offsets_[k]; }
  std::size_t pair_count() const { return pair_lhs_.size(); }
  const std::uint32_t* pair_lhs() const { return pair_lhs_.data(); }
  const std::uint32_t* pair_rhs() const { return pair_rhs_.data(); }

  // For d/dx_var: coefficient k of the derivative (a jet one order lower)
  // equals factor * c[source], where the source monomial is monomial(k) + e_var.
  std::size_t derivative_source(int var, std::size_t k) const { return deriv_src_[var][k]; }
  double derivative_factor(int var, std::size_t k) const { return deriv_factor_[var][k]; }

 private:
  JetSpec spec_;
  std::vector<MultiIndex> monomials_;
  std::vector<int> degrees_;
  std::vector<std::size_t> degree_offsets_;
  std::vector<double> factorials_;
  std::map<MultiIndex, std::size_t> lookup_;
  std::vector<std::size_t> pair_offsets_;
  std::vector<std::uint32_t> pair_lhs_;
  std::vector<std::uint32_t> pair_rhs_;
  std::vector<std::vector<std::size_t>> deriv_src_;
  std::vector<std::vector<double>> deriv_factor_;
};

// Shared, immortal layout for a spec. Thread-safe.
const Layout& layout_for(const JetSpec& spec);

}  // namespace sasaki::jets
