#include "sasaki/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "sasaki/contact/structure.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/models/random.hpp"
#include "sasaki/soliton/soliton.hpp"

using nlohmann::json;

namespace sasaki::cli {

namespace {

SuiteReport unavailable(const std::string& suite, const std::string& what, const std::string& why) {
  SuiteReport r;
  r.suite = suite;
  r.add(not_applicable(what, what, why));
  return r;
}

std::string no_structure_reason(const models::ModelInstance& m) {
  return m.notice.empty() ? "model " + m.selector + " carries no contact structure" : m.notice;
}

// Maps an exception to the exit-code contract.
int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const TheoremViolation*>(&e) || dynamic_cast<const PreconditionError*>(&e)) return kExitFail;
  return kExitNumeric;
}

struct Coverage {
  bool applicable = false;
  bool pass = true;
  double residual = 0.0;
  std::string suite;
};

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string fmt(double v) {
  std::ostringstream o;
  o << std::setprecision(3) << v;
  return o.str();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"axioms",   "identities", "classify",      "theorem1", "lemma1",
                                                 "theorem2", "pde",        "integrability", "universal"};
  return names;
}

SuiteReport run_suite(const std::string& suite, const models::ModelInstance& m, std::span<const fields::Point> points,
                      double tolerance, std::uint64_t seed) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw InvalidArgument("unknown suite '" + suite + "'");
  }
  if (suite == "universal") {
    SuiteReport r = models::universal_suite(m.geometry(), m.V, m.probe, points, tolerance);
    return r;
  }
  if (suite == "integrability") {
    const soliton::SolitonData data{m.V, m.lambda};
    return m.structure ? soliton::integrability_check(*m.structure, data, points, tolerance)
                       : soliton::integrability_check(m.geometry(), data, points, tolerance);
  }
  if (suite == "pde") {
    if (!m.heisenberg) {
      return unavailable(suite, "heisenberg-chart", "the PDE system is stated on the undeformed Heisenberg chart");
    }
    return models::pde_check(*m.heisenberg, m.V, points, tolerance);
  }
  if (!m.structure) return unavailable(suite, "contact-structure", no_structure_reason(m));
  const contact::ContactStructure& s = *m.structure;
  if (suite == "axioms") {
    SuiteReport r = contact::verify_axioms(s, points, tolerance);
    r.suite = "axioms";
    return r;
  }
  if (suite == "identities") return contact::identity_suite(s, points, tolerance);
  if (suite == "classify") {
    const contact::StructureClass cls = contact::classify(s, points, tolerance);
    SuiteReport r = cls.report;
    if (cls.sasakian) r.append(contact::transverse_ricci_check(s, points, tolerance, seed));
    return r;
  }
  if (suite == "theorem1") return soliton::theorem1_suite(s, m.V, points, tolerance);
  if (suite == "lemma1") return soliton::lemma1_suite(s, m.V, points, tolerance).report;
  return soliton::theorem2_suite(s, m.V, points, tolerance).report;
}

std::string status_of(const SuiteReport& report) {
  const bool any = std::any_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.applicable; });
  if (!any || !report.preconditions_met()) return "not-applicable";
  return report.pass() ? "pass" : "fail";
}

std::string render_text(const VerificationReport& r) {
  std::ostringstream o;
  o << "suite " << r.result.suite << " on " << r.model << " (" << r.config.samples << " points, tolerance "
    << r.config.tolerance << ")\n";
  for (const Check& c : r.result.checks) {
    o << "  " << std::left << std::setw(30) << c.name << std::setw(30) << ("[" + c.tag + "]");
    if (!c.applicable) {
      o << "n/a   " << c.note << "\n";
      continue;
    }
    o << (c.pass ? "PASS  " : "FAIL  ") << (c.sense == Sense::below ? "max " : "min ") << fmt(c.max_residual)
      << (c.sense == Sense::below ? " <= " : " > ") << fmt(c.threshold);
    if (c.precondition) o << "  (precondition)";
    o << "\n";
  }
  for (const FittedConstant& k : r.result.constants) {
    o << "  constant " << k.name << " = " << std::setprecision(12) << k.value << " (spread " << fmt(k.spread)
      << ")\n";
  }
  for (const std::string& n : r.result.notes) o << "  note: " << n << "\n";
  o << "overall: " << (r.pass ? "PASS" : "FAIL") << "\n";
  return o.str();
}

CommandResult cmd_verify(const RunConfig& config) {
  CommandResult out;
  std::optional<models::ModelInstance> model;
  try {
    validate(config);
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), config.suite) == names.end()) {
      throw InvalidArgument("unknown suite '" + config.suite + "'");
    }
    model = models::resolve_model(config.model, {config.n, config.a}, config.jet_order);
  } catch (const InvalidArgument& e) {
    out.exit_code = kExitUsage;
    out.diagnostic = std::string("usage error: ") + e.what();
    return out;
  } catch (const std::exception& e) {
    out.exit_code = kExitNumeric;
    out.diagnostic = std::string("model construction failed: ") + e.what();
    return out;
  }

  VerificationReport rep;
  rep.model = model->selector;
  rep.config = config;
  try {
    const auto points = fields::sample_box(model->box, static_cast<std::size_t>(config.samples), config.seed);
    rep.result = run_suite(config.suite, *model, points, config.tolerance, config.seed);
  } catch (const std::exception& e) {
    out.exit_code = exit_code_for(e);
    out.diagnostic = std::string(out.exit_code == kExitFail ? "verification failed: " : "numeric capability error: ") +
                     e.what();
    return out;
  }
  if (!model->notice.empty()) rep.result.notes.push_back(model->notice);
  rep.pass = rep.result.pass();
  out.output = config.format == Format::json ? json(rep).dump(2) + "\n" : render_text(rep);
  out.exit_code = rep.pass ? kExitPass : kExitFail;
  return out;
}

CommandResult cmd_report_matrix(const RunConfig& config) {
  CommandResult out;
  try {
    validate(config);
  } catch (const InvalidArgument& e) {
    out.exit_code = kExitUsage;
    out.diagnostic = std::string("usage error: ") + e.what();
    return out;
  }

  const std::vector<std::string> selectors = models::matrix_selectors(config.n_max);
  json cells = json::array();
  json models_json = json::array();
  // tag -> model -> worst applicable check (null in the output when only n/a)
  std::map<std::string, std::map<std::string, Coverage>> coverage;
  std::set<std::string> applicable_tags;
  bool all_ok = true;
  std::ostringstream text;
  text << std::left << std::setw(34) << "model";
  for (const auto& s : suite_names()) text << std::setw(15) << s;
  text << "\n";

  for (const std::string& sel : selectors) {
    text << std::setw(34) << sel;
    std::optional<models::ModelInstance> model;
    std::string build_error;
    try {
      model = models::resolve_model(sel, {config.n, config.a}, config.jet_order);
      models_json.push_back({{"selector", sel}, {"canonical", model->selector}, {"notice", model->notice}});
    } catch (const std::exception& e) {
      build_error = e.what();
      models_json.push_back({{"selector", sel}, {"error", build_error}});
    }
    std::vector<fields::Point> points;
    if (model) points = fields::sample_box(model->box, static_cast<std::size_t>(config.samples), config.seed);

    for (const std::string& suite : suite_names()) {
      json cell{{"model", sel}, {"suite", suite}};
      std::string status;
      if (!model) {
        status = "error";
        cell["error"] = "model construction failed: " + build_error;
      } else {
        try {
          const SuiteReport r = run_suite(suite, *model, points, config.tolerance, config.seed);
          status = status_of(r);
          cell["report"] = r;
          for (const Check& c : r.checks) {
            Coverage& slot = coverage[c.tag][sel];
            if (!c.applicable) continue;
            applicable_tags.insert(c.tag);
            const bool worse = !slot.applicable || (slot.pass && !c.pass) ||
                               (slot.pass == c.pass && c.max_residual > slot.residual);
            if (worse) slot = Coverage{true, c.pass, c.max_residual, suite};
          }
        } catch (const std::exception& e) {
          status = "error";
          cell["error"] = e.what();
          cell["exit_code"] = exit_code_for(e);
        }
      }
      if (status == "fail" || status == "error") all_ok = false;
      cell["status"] = status;
      cells.push_back(std::move(cell));
      text << std::setw(15) << status;
    }
    text << "\n";
  }

  json cov = json::object();
  for (const auto& [tag, row] : coverage) {
    json r = json::object();
    for (const auto& [m, v] : row) {
      r[m] = v.applicable ? json{{"residual", number(v.residual)}, {"pass", v.pass}, {"suite", v.suite}} : json(nullptr);
    }
    cov[tag] = r;
  }
  json doc{{"schema_version", kSchemaVersion},
           {"kind", "coverage-matrix"},
           {"config", config},
           {"models", models_json},
           {"suites", suite_names()},
           {"cells", cells},
           {"coverage", cov},
           {"tag_count", applicable_tags.size()},
           {"pass", all_ok}};
  text << "distinct identity tags exercised: " << applicable_tags.size() << "\n";
  text << "overall: " << (all_ok ? "PASS" : "FAIL") << "\n";
  out.output = config.format == Format::json ? doc.dump(2) + "\n" : text.str();
  out.exit_code = all_ok ? kExitPass : kExitFail;
  return out;
}

CommandResult cmd_list_models() {
  CommandResult out;
  out.output =
      "heisenberg           n, v = soliton|xi|zero|soliton+xi|2v|soliton+x1dz|soliton+y1dz, box\n"
      "heisenberg-deformed  n, a, v = xi|zero, box\n"
      "random               dim, seed, degree (0..3), eps, box\n"
      "flat-contact         v = zero|xi, box\n"
      "euclidean            dim, box\n"
      "sphere               box\n";
  return out;
}

}  // namespace sasaki::cli
