#include "sasaki/jets/layout.hpp"

#include <memory>
#include <mutex>
#include <string>

#include "sasaki/errors.hpp"

namespace sasaki::jets {

namespace {

// Appends all exponent vectors of total degree `remaining` over variables
// [var, dim), highest power of the earliest variable first.
void enumerate_degree(int dim, int var, int remaining, MultiIndex& cur,
                      std::vector<MultiIndex>& out) {
  if (var == dim - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    enumerate_degree(dim, var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

double factorial_int(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

void validate(const JetSpec& spec) {
  if (spec.dim < 1) {
    throw InvalidArgument("jet dimension must be >= 1, got " + std::to_string(spec.dim));
  }
  if (spec.order < 0 || spec.order > kMaxOrder) {
    throw InvalidArgument("jet order must lie in [0, " + std::to_string(kMaxOrder) +
                          "], got " + std::to_string(spec.order));
  }
}

std::size_t coefficient_count(const JetSpec& spec) {
  validate(spec);
  // C(dim + order, order)
  std::size_t c = 1;
  for (int i = 1; i <= spec.order; ++i) {
    c = c * static_cast<std::size_t>(spec.dim + i) / static_cast<std::size_t>(i);
  }
  return c;
}

Layout::Layout(const JetSpec& spec) : spec_(spec) {
  validate(spec);
  const int dim = spec.dim;
  MultiIndex cur(dim, 0);
  degree_offsets_.push_back(0);
  for (int d = 0; d <= spec.order; ++d) {
    enumerate_degree(dim, 0, d, cur, monomials_);
    degree_offsets_.push_back(monomials_.size());
  }
  const std::size_t n = monomials_.size();
  degrees_.resize(n);
  factorials_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    int deg = 0;
    double fac = 1.0;
    for (int e : monomials_[k]) {
      deg += e;
      fac *= factorial_int(e);
    }
    degrees_[k] = deg;
    factorials_[k] = fac;
    lookup_.emplace(monomials_[k], k);
  }

  pair_offsets_.reserve(n + 1);
  pair_offsets_.push_back(0);
  MultiIndex rest(dim);
  for (std::size_t k = 0; k < n; ++k) {
    const MultiIndex& target = monomials_[k];
    for (std::size_t i = 0; i < n && degrees_[i] <= degrees_[k]; ++i) {
      bool divides = true;
      for (int v = 0; v < dim; ++v) {
        rest[v] = target[v] - monomials_[i][v];
        if (rest[v] < 0) {
          divides = false;
          break;
        }
      }
      if (!divides) continue;
      pair_lhs_.push_back(static_cast<std::uint32_t>(i));
      pair_rhs_.push_back(static_cast<std::uint32_t>(lookup_.at(rest)));
    }
    pair_offsets_.push_back(pair_lhs_.size());
  }

  if (spec.order > 0) {
    const std::size_t lower = degree_offsets_[spec.order];
    deriv_src_.assign(dim, std::vector<std::size_t>(lower));
    deriv_factor_.assign(dim, std::vector<double>(lower));
    for (int v = 0; v < dim; ++v) {
      for (std::size_t k = 0; k < lower; ++k) {
        MultiIndex up = monomials_[k];
        up[v] += 1;
        deriv_src_[v][k] = lookup_.at(up);
        deriv_factor_[v][k] = static_cast<double>(up[v]);
      }
    }
  }
}

long Layout::index_of(const MultiIndex& alpha) const {
  auto it = lookup_.find(alpha);
  return it == lookup_.end() ? -1 : static_cast<long>(it->second);
}

const Layout& layout_for(const JetSpec& spec) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Layout>> cache;
  validate(spec);
  std::lock_guard lock(mu);
  auto& slot = cache[{spec.dim, spec.order}];
  if (!slot) slot = std::make_unique<Layout>(spec);
  return *slot;
}

}  // namespace sasaki::jets
