#include "sasaki/models/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "sasaki/errors.hpp"
#include "sasaki/models/random.hpp"
#include "sasaki/models/specimens.hpp"

namespace sasaki::models {

using fields::Chart;
using fields::TensorField;

namespace {

struct Selector {
  std::string family;
  std::map<std::string, std::string> params;
};

Selector parse(const std::string& text) {
  Selector s;
  const auto colon = text.find(':');
  s.family = text.substr(0, colon);
  if (s.family.empty()) throw InvalidArgument("empty model selector");
  if (colon == std::string::npos) return s;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidArgument("malformed selector parameter '" + item + "'");
    const std::string key = item.substr(0, eq);
    if (s.params.count(key)) throw InvalidArgument("duplicate selector parameter '" + key + "'");
    s.params[key] = item.substr(eq + 1);
  }
  return s;
}

class Params {
 public:
  Params(const Selector& s, std::vector<std::string> allowed) : s_(s) {
    for (const auto& [k, v] : s.params) {
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
        throw InvalidArgument("model '" + s.family + "' has no parameter '" + k + "'");
      }
    }
  }

  long integer(const std::string& key, long fallback) const {
    const auto it = s_.params.find(key);
    if (it == s_.params.end()) return fallback;
    long v = 0;
    const auto& t = it->second;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) throw InvalidArgument("parameter " + key + " is not an integer");
    return v;
  }

  double real(const std::string& key, double fallback) const {
    const auto it = s_.params.find(key);
    if (it == s_.params.end()) return fallback;
    double v = 0.0;
    const auto& t = it->second;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) throw InvalidArgument("parameter " + key + " is not a number");
    return v;
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    const auto it = s_.params.find(key);
    return it == s_.params.end() ? fallback : it->second;
  }

 private:
  const Selector& s_;
};

std::string num(double v) {
  std::ostringstream o;
  o << v;
  return o.str();
}

TensorField zero_vector(const Chart& chart) {
  return fields::constant_field(chart, 1, 0, "0", std::vector<double>(static_cast<std::size_t>(chart.dim()), 0.0));
}

fields::ScalarField probe_on(const Chart& chart, int max_order) {
  // fixed smooth function with nonzero mixed partials
  const int d = chart.dim();
  return fields::closed_form_scalar(chart, "f", [d](std::span<const jets::Jet> x) {
    jets::Jet f = x[0] * x[0] * x[d - 1];
    for (int i = 1; i < d; ++i) f += jets::sin(x[i] * x[i - 1]);
    return f;
  }, max_order);
}

double half_width(const Params& p, double fallback) {
  const double b = p.real("box", fallback);
  if (!(b > 0.0) || !std::isfinite(b)) throw InvalidArgument("box half width must be positive");
  return b;
}

int positive_n(long n) {
  if (n < 1 || n > 8) throw InvalidArgument("n must be in 1..8");
  return static_cast<int>(n);
}

}  // namespace

ModelInstance resolve_model(const std::string& selector, const ModelDefaults& defaults, int max_order) {
  const Selector sel = parse(selector);
  const std::string& fam = sel.family;

  if (fam == "heisenberg") {
    const Params p(sel, {"n", "v", "box"});
    const int n = positive_n(p.integer("n", defaults.n));
    const std::string v = p.text("v", "soliton");
    const double box = half_width(p, 1.0);
    HeisenbergModel m = build_heisenberg(n, max_order);
    TensorField V = m.soliton_V;
    std::optional<double> lambda = m.lambda;
    if (v == "xi") {
      V = m.structure.xi();
      lambda.reset();
    } else if (v == "zero") {
      V = heisenberg_vector(n, HeisenbergVector::zero, max_order);
      lambda.reset();
    } else if (v == "soliton+xi") {
      V = heisenberg_vector(n, HeisenbergVector::soliton_plus_reeb, max_order);
    } else if (v == "2v") {
      V = heisenberg_vector(n, HeisenbergVector::soliton_scaled2, max_order);
      lambda.reset();
    } else if (v == "soliton+x1dz") {
      V = pde_candidate(n, PdeCandidate::vz_plus_x1, max_order);
      lambda.reset();
    } else if (v == "soliton+y1dz") {
      V = pde_candidate(n, PdeCandidate::vz_plus_y1, max_order);
      lambda.reset();
    } else if (v != "soliton") {
      throw InvalidArgument("unknown Heisenberg vector field '" + v + "'");
    }
    const Chart chart = m.structure.chart();
    ModelInstance out{"heisenberg:n=" + std::to_string(n) + ",v=" + v + ",box=" + num(box),
                      fam,
                      m.structure.g(),
                      m.structure,
                      m,
                      V,
                      lambda,
                      probe_on(chart, max_order),
                      fields::Box::cube(2 * n + 1, box),
                      ""};
    return out;
  }

  if (fam == "heisenberg-deformed") {
    const Params p(sel, {"n", "a", "v", "box"});
    const int n = positive_n(p.integer("n", defaults.n));
    const double a = p.real("a", defaults.a);
    const std::string v = p.text("v", "xi");
    const double box = half_width(p, 1.0);
    const HeisenbergModel m = build_heisenberg(n, max_order);
    const contact::ContactStructure s = contact::d_homothetic_deform(m.structure, a);
    TensorField V = s.xi();
    if (v == "zero") {
      V = zero_vector(s.chart());
    } else if (v != "xi") {
      throw InvalidArgument("unknown deformed-Heisenberg vector field '" + v + "'");
    }
    return ModelInstance{"heisenberg-deformed:n=" + std::to_string(n) + ",a=" + num(a) + ",v=" + v + ",box=" + num(box),
                         fam,
                         s.g(),
                         s,
                         std::nullopt,
                         V,
                         std::nullopt,
                         probe_on(s.chart(), max_order),
                         fields::Box::cube(2 * n + 1, box),
                         ""};
  }

  if (fam == "random") {
    const Params p(sel, {"dim", "seed", "degree", "eps", "box"});
    RandomMetricSpec spec;
    const long dim = p.integer("dim", 3);
    const long seed = p.integer("seed", 0);
    const long degree = p.integer("degree", 2);
    if (dim < 1 || dim > 9) throw InvalidArgument("random metric dim must be in 1..9");
    if (seed < 0) throw InvalidArgument("seed must be non-negative");
    spec.dim = static_cast<int>(dim);
    spec.seed = static_cast<std::uint64_t>(seed);
    spec.degree = static_cast<int>(degree);
    spec.epsilon = p.real("eps", spec.epsilon);
    spec.box_half_width = half_width(p, spec.box_half_width);
    const TensorField g = random_metric_field(spec, max_order);
    return ModelInstance{"random:dim=" + std::to_string(spec.dim) + ",seed=" + std::to_string(spec.seed) +
                             ",degree=" + std::to_string(spec.degree) + ",eps=" + num(spec.epsilon) +
                             ",box=" + num(spec.box_half_width),
                         fam,
                         g,
                         std::nullopt,
                         std::nullopt,
                         random_vector_field(spec.dim, spec.degree, spec.seed, max_order),
                         std::nullopt,
                         random_scalar_field(spec.dim, 3, spec.seed, max_order),
                         fields::Box::cube(spec.dim, spec.box_half_width),
                         ""};
  }

  if (fam == "flat-contact") {
    const Params p(sel, {"v", "box"});
    const std::string v = p.text("v", "zero");
    const double box = half_width(p, 1.0);
    const fields::Box b = fields::Box::cube(3, box);
    const auto gate_points = fields::sample_box(b, 32, 0x9a7e);
    GatedStructure gated = gated_flat_contact_candidate(gate_points, 1e-9, max_order);
    const contact::ContactStructure s = flat_contact_candidate(max_order);
    TensorField V = zero_vector(s.chart());
    std::optional<double> lambda = 0.0;
    if (v == "xi") {
      V = s.xi();
      lambda.reset();
    } else if (v != "zero") {
      throw InvalidArgument("unknown flat-contact vector field '" + v + "'");
    }
    return ModelInstance{"flat-contact:v=" + v + ",box=" + num(box),
                         fam,
                         s.g(),
                         gated.structure,
                         std::nullopt,
                         V,
                         lambda,
                         probe_on(s.chart(), max_order),
                         b,
                         gated.notice};
  }

  if (fam == "euclidean") {
    const Params p(sel, {"dim", "box"});
    const long dim = p.integer("dim", 3);
    if (dim < 1 || dim > 9) throw InvalidArgument("euclidean dim must be in 1..9");
    const double box = half_width(p, 1.0);
    const TensorField g = euclidean_metric(static_cast<int>(dim));
    return ModelInstance{"euclidean:dim=" + std::to_string(dim) + ",box=" + num(box),
                         fam,
                         g,
                         std::nullopt,
                         std::nullopt,
                         zero_vector(g.chart()),
                         0.0,
                         probe_on(g.chart(), max_order),
                         fields::Box::cube(static_cast<int>(dim), box),
                         ""};
  }

  if (fam == "sphere") {
    const Params p(sel, {"box"});
    const double box = half_width(p, 1.0);
    const TensorField g = stereographic_sphere_metric(max_order);
    // unit sphere: Ric = g, so V = 0 is a shrinking soliton with λ = −1
    return ModelInstance{"sphere:box=" + num(box),
                         fam,
                         g,
                         std::nullopt,
                         std::nullopt,
                         zero_vector(g.chart()),
                         -1.0,
                         probe_on(g.chart(), max_order),
                         fields::Box::cube(2, box),
                         ""};
  }

  throw InvalidArgument("unknown model family '" + fam + "'");
}

std::vector<std::string> matrix_selectors(int n_max) {
  std::vector<std::string> out;
  for (int n = 1; n <= n_max; ++n) out.push_back("heisenberg:n=" + std::to_string(n));
  out.push_back("heisenberg-deformed:n=1,a=2");
  out.push_back("flat-contact");
  out.push_back("random:dim=3,seed=7");
  out.push_back("random:dim=5,seed=7");
  out.push_back("euclidean:dim=3");
  out.push_back("sphere");
  return out;
}

}  // namespace sasaki::models
