#include "sasaki/cli/config.hpp"

#include <cmath>
#include <limits>

#include "sasaki/errors.hpp"

using nlohmann::json;

namespace {

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double read_number(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw sasaki::InvalidArgument("not a number: " + s);
  }
  return j.get<double>();
}

const char* sense_name(sasaki::Sense s) { return s == sasaki::Sense::below ? "below" : "above"; }

}  // namespace

namespace sasaki {

void to_json(json& j, const Check& c) {
  j = json{{"name", c.name},
           {"tag", c.tag},
           {"max_residual", number(c.max_residual)},
           {"mean_residual", number(c.mean_residual)},
           {"threshold", number(c.threshold)},
           {"sense", sense_name(c.sense)},
           {"applicable", c.applicable},
           {"precondition", c.precondition},
           {"pass", c.pass},
           {"points", c.points},
           {"note", c.note}};
}

void from_json(const json& j, Check& c) {
  c.name = j.at("name").get<std::string>();
  c.tag = j.at("tag").get<std::string>();
  c.max_residual = read_number(j.at("max_residual"));
  c.mean_residual = read_number(j.at("mean_residual"));
  c.threshold = read_number(j.at("threshold"));
  c.sense = j.at("sense").get<std::string>() == "above" ? Sense::above : Sense::below;
  c.applicable = j.at("applicable").get<bool>();
  c.precondition = j.at("precondition").get<bool>();
  c.pass = j.at("pass").get<bool>();
  c.points = j.at("points").get<std::size_t>();
  c.note = j.at("note").get<std::string>();
}

void to_json(json& j, const FittedConstant& c) {
  j = json{{"name", c.name}, {"value", number(c.value)}, {"spread", number(c.spread)}};
}

void from_json(const json& j, FittedConstant& c) {
  c.name = j.at("name").get<std::string>();
  c.value = read_number(j.at("value"));
  c.spread = read_number(j.at("spread"));
}

void to_json(json& j, const SuiteReport& r) {
  j = json{{"suite", r.suite}, {"checks", r.checks}, {"constants", r.constants}, {"notes", r.notes}};
}

void from_json(const json& j, SuiteReport& r) {
  r.suite = j.at("suite").get<std::string>();
  r.checks = j.at("checks").get<std::vector<Check>>();
  r.constants = j.at("constants").get<std::vector<FittedConstant>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
}

}  // namespace sasaki

namespace sasaki::cli {

void validate(const RunConfig& c) {
  if (!(c.tolerance > 0.0) || !std::isfinite(c.tolerance)) throw InvalidArgument("tolerance must be positive");
  if (c.samples < 1) throw InvalidArgument("sample count must be at least 1");
  if (c.jet_order < 1 || c.jet_order > 4) throw InvalidArgument("jet order must be in 1..4");
  if (c.n < 1) throw InvalidArgument("n must be at least 1");
  if (!(c.a > 0.0) || !std::isfinite(c.a)) throw InvalidArgument("a must be positive");
  if (c.n_max < 1 || c.n_max > 4) throw InvalidArgument("matrix n range must be in 1..4");
}

void to_json(json& j, const RunConfig& c) {
  j = json{{"command", c.command},
           {"suite", c.suite},
           {"model", c.model},
           {"n", c.n},
           {"a", number(c.a)},
           {"tolerance", number(c.tolerance)},
           {"jet_order", c.jet_order},
           {"samples", c.samples},
           {"seed", c.seed},
           {"format", c.format == Format::json ? "json" : "text"},
           {"n_max", c.n_max},
           {"output", c.output ? json(*c.output) : json(nullptr)}};
}

void from_json(const json& j, RunConfig& c) {
  c.command = j.at("command").get<std::string>();
  c.suite = j.at("suite").get<std::string>();
  c.model = j.at("model").get<std::string>();
  c.n = j.at("n").get<int>();
  c.a = read_number(j.at("a"));
  c.tolerance = read_number(j.at("tolerance"));
  c.jet_order = j.at("jet_order").get<int>();
  c.samples = j.at("samples").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.format = j.at("format").get<std::string>() == "json" ? Format::json : Format::text;
  c.n_max = j.at("n_max").get<int>();
  c.output.reset();
  if (j.contains("output") && !j.at("output").is_null()) c.output = j.at("output").get<std::string>();
}

void to_json(json& j, const VerificationReport& r) {
  j = json{{"schema_version", r.schema_version},
           {"model", r.model},
           {"config", r.config},
           {"suite", r.result.suite},
           {"checks", r.result.checks},
           {"constants", r.result.constants},
           {"notes", r.result.notes},
           {"pass", r.pass}};
}

void from_json(const json& j, VerificationReport& r) {
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kSchemaVersion) {
    throw InvalidArgument("unsupported report schema version " + std::to_string(r.schema_version));
  }
  r.model = j.at("model").get<std::string>();
  r.config = j.at("config").get<RunConfig>();
  r.result.suite = j.at("suite").get<std::string>();
  r.result.checks = j.at("checks").get<std::vector<Check>>();
  r.result.constants = j.at("constants").get<std::vector<FittedConstant>>();
  r.result.notes = j.at("notes").get<std::vector<std::string>>();
  r.pass = j.at("pass").get<bool>();
}

}  // namespace sasaki::cli
