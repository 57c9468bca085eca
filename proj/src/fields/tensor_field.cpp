#include "sasaki/fields/tensor_field.hpp"

#include <cmath>

#include "sasaki/errors.hpp"

namespace sasaki::fields {

TensorField::TensorField(Chart chart, int up, int down, std::string name, Evaluator eval)
    : chart_(std::make_shared<const Chart>(std::move(chart))),
      up_(up),
      down_(down),
      name_(std::move(name)),
      eval_(std::make_shared<const Evaluator>(std::move(eval))) {
  if (up < 0 || down < 0) throw InvalidArgument("tensor ranks must be non-negative");
}

JetTensor TensorField::evaluate(const Point& p, int order) const {
  if (p.dim() != dim()) {
    throw InvalidArgument("point of dimension " + std::to_string(p.dim()) + " on a chart of dimension " +
                          std::to_string(dim()));
  }
  if (chart_->domain() && !chart_->domain()->contains(p.coords())) {
    throw DomainError("point outside the domain of chart for field '" + name_ + "'");
  }
  if (order < 0 || order > jets::kMaxOrder) {
    throw CapabilityError("field '" + name_ + "' requested at order " + std::to_string(order) +
                          "; jets carry at most order " + std::to_string(jets::kMaxOrder));
  }
  JetTensor t = (*eval_)(p, order);
  if (t.up() != up_ || t.down() != down_ || t.dim() != dim()) {
    throw InvalidArgument("evaluator of field '" + name_ + "' returned a tensor of the wrong shape");
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].order() != order) {
      throw InvalidArgument("evaluator of field '" + name_ + "' returned jets of the wrong order");
    }
    for (double c : t[i].coeffs()) {
      if (!std::isfinite(c)) throw NumericError("non-finite component in field '" + name_ + "'");
    }
  }
  return t;
}

Tensor TensorField::value(const Point& p) const { return values(evaluate(p, 0)); }

TensorField TensorField::renamed(std::string name) const {
  TensorField f = *this;
  f.name_ = std::move(name);
  return f;
}

ScalarField::ScalarField(TensorField f) : field_(std::move(f)) {
  if (field_.up() != 0 || field_.down() != 0) throw InvalidArgument("scalar field must have rank (0,0)");
}

TensorField closed_form(const Chart& chart, int up, int down, std::string name, ComponentFn fn,
                        int max_order) {
  const int dim = chart.dim();
  const std::string label = name;
  return TensorField(chart, up, down, std::move(name),
                     [fn = std::move(fn), dim, up, down, max_order, label](const Point& p, int order) {
                       if (order > max_order) {
                         throw CapabilityError("field '" + label + "' requested at order " +
                                               std::to_string(order) + " but its jet budget is " +
                                               std::to_string(max_order));
                       }
                       const jets::JetSpec spec{dim, order};
                       std::vector<jets::Jet> x;
                       x.reserve(static_cast<std::size_t>(dim));
                       for (int i = 0; i < dim; ++i) x.push_back(jets::Jet::variable(spec, i, p[i]));
                       std::vector<jets::Jet> comps = fn(x);
                       JetTensor t = jet_zeros(dim, up, down, spec);
                       if (comps.size() != t.size()) {
                         throw InvalidArgument("field '" + label + "' produced " +
                                               std::to_string(comps.size()) + " components, expected " +
                                               std::to_string(t.size()));
                       }
                       for (std::size_t i = 0; i < comps.size(); ++i) t[i] = std::move(comps[i]);
                       return t;
                     });
}

ScalarField closed_form_scalar(const Chart& chart, std::string name,
                               std::function<jets::Jet(std::span<const jets::Jet> x)> fn,
                               int max_order) {
  return ScalarField(closed_form(
      chart, 0, 0, std::move(name),
      [fn = std::move(fn)](std::span<const jets::Jet> x) { return std::vector<jets::Jet>{fn(x)}; },
      max_order));
}

TensorField constant_field(const Chart& chart, int up, int down, std::string name,
                           std::vector<double> components) {
  const int dim = chart.dim();
  if (components.size() != zeros(dim, up, down).size()) {
    throw InvalidArgument("constant field '" + name + "' has the wrong number of components");
  }
  return TensorField(chart, up, down, std::move(name),
                     [components = std::move(components), dim, up, down](const Point&, int order) {
                       const jets::JetSpec spec{dim, order};
                       JetTensor t = jet_zeros(dim, up, down, spec);
                       for (std::size_t i = 0; i < components.size(); ++i) {
                         t[i] = jets::Jet::constant(spec, components[i]);
                       }
                       return t;
                     });
}

TensorField combine(std::string name, int up, int down, std::vector<TensorField> inputs, CombineFn fn) {
  if (inputs.empty()) throw InvalidArgument("combine needs at least one input field");
  for (const auto& f : inputs) {
    if (!(f.chart() == inputs.front().chart())) {
      throw InvalidArgument("combine: inputs live on different charts");
    }
  }
  Chart chart = inputs.front().chart();
  return TensorField(std::move(chart), up, down, std::move(name),
                     [inputs = std::move(inputs), fn = std::move(fn)](const Point& p, int order) {
                       std::vector<JetTensor> vals;
                       vals.reserve(inputs.size());
                       for (const auto& f : inputs) vals.push_back(f.evaluate(p, order));
                       return fn(vals);
                     });
}

TensorField scaled(const TensorField& f, double s, std::string name) {
  if (name.empty()) name = f.name() + "_scaled";
  return combine(std::move(name), f.up(), f.down(), {f}, [s](std::span<const JetTensor> in) {
    JetTensor t = in[0];
    for (std::size_t i = 0; i < t.size(); ++i) t[i] *= s;
    return t;
  });
}

namespace {

void require_same_shape(const TensorField& a, const TensorField& b) {
  if (a.up() != b.up() || a.down() != b.down()) throw InvalidArgument("tensor rank mismatch");
  if (!(a.chart() == b.chart())) throw InvalidArgument("fields live on different charts");
}

}  // namespace

TensorField sum(const TensorField& a, const TensorField& b, std::string name) {
  require_same_shape(a, b);
  if (name.empty()) name = a.name() + "+" + b.name();
  return combine(std::move(name), a.up(), a.down(), {a, b}, [](std::span<const JetTensor> in) {
    JetTensor t = in[0];
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += in[1][i];
    return t;
  });
}

TensorField difference(const TensorField& a, const TensorField& b, std::string name) {
  require_same_shape(a, b);
  if (name.empty()) name = a.name() + "-" + b.name();
  return combine(std::move(name), a.up(), a.down(), {a, b}, [](std::span<const JetTensor> in) {
    JetTensor t = in[0];
    for (std::size_t i = 0; i < t.size(); ++i) t[i] -= in[1][i];
    return t;
  });
}

TensorField tensor_product(const TensorField& a, const TensorField& b, std::string name) {
  if (!(a.chart() == b.chart())) throw InvalidArgument("fields live on different charts");
  if (name.empty()) name = a.name() + "*" + b.name();
  const int pa = a.up(), qa = a.down(), pb = b.up(), qb = b.down();
  return combine(std::move(name), pa + pb, qa + qb, {a, b}, [=](std::span<const JetTensor> in) {
    const JetTensor& A = in[0];
    const JetTensor& B = in[1];
    const int dim = A.dim();
    JetTensor out = jet_zeros(dim, pa + pb, qa + qb, A[0].spec());
    std::vector<int> idx(static_cast<std::size_t>(pa + pb + qa + qb));
    std::vector<int> ia(static_cast<std::size_t>(pa + qa)), ib(static_cast<std::size_t>(pb + qb));
    for (std::size_t f = 0; f < out.size(); ++f) {
      out.unflatten(f, idx);
      // layout: a-up, b-up, a-down, b-down
      for (int r = 0; r < pa; ++r) ia[r] = idx[r];
      for (int r = 0; r < pb; ++r) ib[r] = idx[pa + r];
      for (int r = 0; r < qa; ++r) ia[pa + r] = idx[pa + pb + r];
      for (int r = 0; r < qb; ++r) ib[pb + r] = idx[pa + pb + qa + r];
      out[f] = A[A.flat(ia)] * B[B.flat(ib)];
    }
    return out;
  });
}

}  // namespace sasaki::fields
