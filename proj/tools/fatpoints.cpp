#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fatpoints/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Minimal free resolutions of fat point ideals supported on plane curves of degree <= 3"};
  app.require_subcommand(1);
  fatpoints::RunSpec spec;
  std::string format = "table";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", spec.input, "scheme configuration (JSON)")->required();
    sub->add_option("--format", format, "table or machine")->check(CLI::IsMember({"table", "machine"}));
  };

  auto* resolve = app.add_subcommand("resolve", "Hilbert function, generator degrees, F0 and F1");
  add_common(resolve);

  auto* hilbert = app.add_subcommand("hilbert", "values of the Hilbert function of the ideal");
  add_common(hilbert);
  fatpoints::Int max_degree = -1;
  auto* max_opt = hilbert->add_option("--max-degree", max_degree, "last degree to print")->check(CLI::NonNegativeNumber);

  auto* zariski = app.add_subcommand("zariski", "Zariski decomposition of one divisor class");
  add_common(zariski);
  zariski->add_option("--class", spec.class_text, "d,m1,...,mr for d*e0 - m1*e1 - ... - mr*er")->required();

  auto* negcurves = app.add_subcommand("negcurves", "candidate negative curves of the configuration");
  add_common(negcurves);

  auto* oracle = app.add_subcommand("oracle-check", "compare against rank computations over a prime field");
  add_common(oracle);
  oracle->add_option("--seed", spec.seed, "sampling seed");
  oracle->add_option("--prime", spec.prime, "field characteristic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fatpoints::exit_code::invalid;
  }

  spec.command = app.get_subcommands().front()->get_name();
  spec.format = format == "machine" ? fatpoints::OutputFormat::machine : fatpoints::OutputFormat::table;
  if (*max_opt) spec.max_degree = max_degree;
  return fatpoints::run(spec, std::cout, std::cerr);
}
