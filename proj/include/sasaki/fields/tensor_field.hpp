#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sasaki/fields/chart.hpp"
#include "sasaki/fields/tensor.hpp"

namespace sasaki::fields {

/// A (up, down) tensor field on a chart, evaluable as component jets.
///
/// evaluate(p, k) returns every component as a jet of order k expanded at p.
/// Derived fields request their inputs at a higher order, so the order budget
/// of the closed-form leaves bounds how many derivatives a computation may
/// take; running out raises CapabilityError.
class TensorField {
 public:
  using Evaluator = std::function<JetTensor(const Point&, int order)>;

  TensorField(Chart chart, int up, int down, std::string name, Evaluator eval);

  const Chart& chart() const { return *chart_; }
  int dim() const { return chart_->dim(); }
  int up() const { return up_; }
  int down() const { return down_; }
  const std::string& name() const { return name_; }

  // Throws InvalidArgument (point dimension), DomainError (outside the chart
  // domain), CapabilityError (order unavailable), NumericError (non-finite
  // component).
  JetTensor evaluate(const Point& p, int order) const;
  Tensor value(const Point& p) const;

  TensorField renamed(std::string name) const;

 private:
  std::shared_ptr<const Chart> chart_;
  int up_;
  int down_;
  std::string name_;
  std::shared_ptr<const Evaluator> eval_;
};

/// Scalar (0,0) field.
class ScalarField {
 public:
  explicit ScalarField(TensorField f);

  jets::Jet evaluate(const Point& p, int order) const { return field_.evaluate(p, order)[0]; }
  double value(const Point& p) const { return evaluate(p, 0).value(); }
  const TensorField& field() const { return field_; }
  const Chart& chart() const { return field_.chart(); }

 private:
  TensorField field_;
};

// Components as functions of the seeded coordinate jets x[0..dim).
using ComponentFn = std::function<std::vector<jets::Jet>(std::span<const jets::Jet> x)>;

// Field whose components are closed-form expressions of the coordinates.
// `max_order` is the derivative budget of this leaf.
TensorField closed_form(const Chart& chart, int up, int down, std::string name, ComponentFn fn,
                        int max_order = jets::kMaxOrder);
ScalarField closed_form_scalar(const Chart& chart, std::string name,
                               std::function<jets::Jet(std::span<const jets::Jet> x)> fn,
                               int max_order = jets::kMaxOrder);

// Field with constant components (row-major, contravariant first).
TensorField constant_field(const Chart& chart, int up, int down, std::string name,
                           std::vector<double> components);

// Pointwise combination: every input is evaluated at the requested order and
// handed to fn, which returns the (up, down) result at that order.
using CombineFn = std::function<JetTensor(std::span<const JetTensor> inputs)>;
TensorField combine(std::string name, int up, int down, std::vector<TensorField> inputs,
                    CombineFn fn);

TensorField scaled(const TensorField& f, double s, std::string name = "");
TensorField sum(const TensorField& a, const TensorField& b, std::string name = "");
TensorField difference(const TensorField& a, const TensorField& b, std::string name = "");
// (a ⊗ b), indices: a's up, b's up, a's down, b's down.
TensorField tensor_product(const TensorField& a, const TensorField& b, std::string name = "");

}  // namespace sasaki::fields
