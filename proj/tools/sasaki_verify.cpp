// Command line front end: verify one suite on one model, or emit the full
// coverage matrix.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sasaki/cli/commands.hpp"

using namespace sasaki::cli;

namespace {

void add_common(CLI::App& cmd, RunConfig& c, std::string& format, std::string& output) {
  cmd.add_option("--n", c.n, "contact half-dimension used when the model selector omits n");
  cmd.add_option("--a", c.a, "deformation constant used when the model selector omits a");
  cmd.add_option("--tolerance", c.tolerance, "pass threshold for residuals");
  cmd.add_option("--jet-order", c.jet_order, "derivative budget of model fields (1..4)");
  cmd.add_option("--samples", c.samples, "sample points per check");
  cmd.add_option("--seed", c.seed, "sampling seed");
  cmd.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  cmd.add_option("--output", output, "write the report here instead of stdout");
}

int emit(const CommandResult& r, const RunConfig& c) {
  if (!r.diagnostic.empty()) std::cerr << r.diagnostic << "\n";
  if (c.output) {
    std::ofstream f(*c.output, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open " << *c.output << " for writing\n";
      return kExitUsage;
    }
    f << r.output;
  } else {
    std::cout << r.output;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of contact metric and Ricci soliton identities"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "text", output;

  auto* verify = app.add_subcommand("verify", "run one suite on one model");
  verify->add_option("suite", config.suite, "axioms | identities | classify | theorem1 | lemma1 | theorem2 | pde | "
                                            "integrability | universal")
      ->required();
  verify->add_option("--model", config.model, "model selector, e.g. heisenberg:n=2 or random:dim=3,seed=7");
  add_common(*verify, config, format, output);

  auto* matrix = app.add_subcommand("matrix", "run every suite on every catalog model");
  matrix->add_option("--n-max", config.n_max, "largest Heisenberg n in the matrix");
  add_common(*matrix, config, format, output);

  app.add_subcommand("models", "list model selectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  config.format = format == "json" ? Format::json : Format::text;
  if (!output.empty()) config.output = output;

  if (verify->parsed()) {
    config.command = "verify";
    return emit(cmd_verify(config), config);
  }
  if (matrix->parsed()) {
    config.command = "matrix";
    return emit(cmd_report_matrix(config), config);
  }
  return emit(cmd_list_models(), config);
}
