#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "sasaki/report.hpp"

namespace sasaki::cli {

inline constexpr int kSchemaVersion = 1;

enum class Format { text, json };

struct RunConfig {
  std::string command = "verify";  // verify | matrix
  std::string suite;
  std::string model = "heisenberg";
  int n = 1;
  double a = 2.0;
  double tolerance = 1e-7;
  int jet_order = 4;
  int samples = 64;
  std::uint64_t seed = 0;
  Format format = Format::text;
  std::optional<std::string> output;
  int n_max = 3;  // matrix: Heisenberg dimensions covered
};

// Throws InvalidArgument unless tolerance > 0, samples >= 1, jet order in
// 1..4, n >= 1 and a > 0.
void validate(const RunConfig& config);

/// One suite run on one model.
struct VerificationReport {
  int schema_version = kSchemaVersion;
  std::string model;  // canonical selector
  RunConfig config;
  SuiteReport result;
  bool pass = false;
};

}  // namespace sasaki::cli

// JSON encoding. Non-finite numbers are written as the strings "inf", "-inf"
// and "nan" so that reports round-trip exactly.
namespace sasaki {
void to_json(nlohmann::json& j, const Check& c);
void from_json(const nlohmann::json& j, Check& c);
void to_json(nlohmann::json& j, const FittedConstant& c);
void from_json(const nlohmann::json& j, FittedConstant& c);
void to_json(nlohmann::json& j, const SuiteReport& r);
void from_json(const nlohmann::json& j, SuiteReport& r);
}  // namespace sasaki

namespace sasaki::cli {
void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);
}  // namespace sasaki::cli
