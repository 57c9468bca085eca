#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sasaki/jets/jet.hpp"

namespace sasaki::fields {

/// Components of a (up, down) tensor at one point, row-major, contravariant
/// indices first. T is double for values or jets::Jet for local expansions.
template <class T>
class TensorArray {
 public:
  TensorArray(int dim, int up, int down, const T& fill)
      : dim_(dim), up_(up), down_(down), data_(ipow(dim, up + down), fill) {}

  int dim() const { return dim_; }
  int up() const { return up_; }
  int down() const { return down_; }
  int rank() const { return up_ + down_; }
  std::size_t size() const { return data_.size(); }

  T& operator[](std::size_t flat) { return data_[flat]; }
  const T& operator[](std::size_t flat) const { return data_[flat]; }

  template <class... I>
  T& operator()(I... idx) {
    return data_[flat_index(idx...)];
  }
  template <class... I>
  const T& operator()(I... idx) const {
    return data_[flat_index(idx...)];
  }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  std::size_t flat(std::span<const int> idx) const {
    std::size_t f = 0;
    for (int i : idx) f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    return f;
  }
  // Inverse of flat(): writes rank() indices into idx.
  void unflatten(std::size_t f, std::span<int> idx) const {
    for (int r = rank() - 1; r >= 0; --r) {
      idx[static_cast<std::size_t>(r)] = static_cast<int>(f % static_cast<std::size_t>(dim_));
      f /= static_cast<std::size_t>(dim_);
    }
  }

 private:
  static std::size_t ipow(int b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(b);
    return r;
  }
  template <class... I>
  std::size_t flat_index(I... idx) const {
    std::size_t f = 0;
    ((f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(idx)), ...);
    return f;
  }

  int dim_;
  int up_;
  int down_;
  std::vector<T> data_;
};

using Tensor = TensorArray<double>;
using JetTensor = TensorArray<jets::Jet>;

inline Tensor zeros(int dim, int up, int down) { return Tensor(dim, up, down, 0.0); }
JetTensor jet_zeros(int dim, int up, int down, const jets::JetSpec& spec);

int order_of(const JetTensor& t);
Tensor values(const JetTensor& t);
JetTensor truncate(const JetTensor& t, int order);
JetTensor differentiate(const JetTensor& t, int var);

// Pointwise (1,1)-tensor algebra: endomorphisms A^a_b as dim×dim matrices.
Tensor identity(int dim);
Tensor compose(const Tensor& A, const Tensor& B);  // (AB)^a_b = A^a_c B^c_b
double trace(const Tensor& A);
// Lowers the first index of a (1,q) tensor: g_{ac} T^c_{b..}.
Tensor lower(const Tensor& g, const Tensor& T);

double max_abs(const Tensor& t);
double max_abs_diff(const Tensor& a, const Tensor& b);

}  // namespace sasaki::fields
