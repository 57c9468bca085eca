#include <string>

#include "sasaki/errors.hpp"
#include "sasaki/riemann/geometry.hpp"

namespace sasaki::riemann {

using jets::Jet;
using jets::JetSpec;

TensorField lie_derivative(const TensorField& V, const TensorField& T) {
  if (V.up() != 1 || V.down() != 0) throw InvalidArgument("lie_derivative: V must be a vector field");
  if (!(V.chart() == T.chart())) throw InvalidArgument("lie_derivative: fields live on different charts");
  const int up = T.up(), down = T.down();
  const bool supported = (up == 0 && down <= 4) || (up == 1 && down <= 3);
  if (!supported) {
    throw CapabilityError("lie_derivative: rank (" + std::to_string(up) + "," + std::to_string(down) +
                          ") is not supported; use (0,q) with q <= 4 or (1,q) with q <= 3");
  }
  return TensorField(T.chart(), up, down, "L_" + V.name() + " " + T.name(),
                     [V, T, up, down](const Point& p, int order) {
                       const int n = T.dim();
                       const JetTensor v1 = V.evaluate(p, order + 1);
                       const JetTensor t1 = T.evaluate(p, order + 1);
                       const JetTensor v = fields::truncate(v1, order);
                       const JetTensor t = fields::truncate(t1, order);
                       std::vector<JetTensor> dv, dt;  // dv[c](a) = ∂_c V^a
                       for (int c = 0; c < n; ++c) {
                         dv.push_back(fields::differentiate(v1, c));
                         dt.push_back(fields::differentiate(t1, c));
                       }
                       JetTensor out = fields::jet_zeros(n, up, down, JetSpec{n, order});
                       std::vector<int> idx(static_cast<std::size_t>(up + down));
                       for (std::size_t f = 0; f < out.size(); ++f) {
                         out.unflatten(f, idx);
                         Jet s(JetSpec{n, order});
                         for (int c = 0; c < n; ++c) s.add_product(v(c), dt[c][f]);
                         for (int r = 0; r < up; ++r) {
                           const int a = idx[r];
                           for (int c = 0; c < n; ++c) {
                             idx[r] = c;
                             s.sub_product(t[t.flat(idx)], dv[c](a));
                           }
                           idx[r] = a;
                         }
                         for (int q = up; q < up + down; ++q) {
                           const int b = idx[q];
                           for (int c = 0; c < n; ++c) {
                             idx[q] = c;
                             s.add_product(t[t.flat(idx)], dv[b](c));
                           }
                           idx[q] = b;
                         }
                         out[f] = std::move(s);
                       }
                       return out;
                     });
}

}  // namespace sasaki::riemann
