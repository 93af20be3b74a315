#include <iostream>

#include <CLI11.hpp>

#include "isgx/cli_commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "isgx — finite inverse semigroups, partial actions on C(X), covariant\n"
      "representations, and their relative crossed products"};
  app.require_subcommand(1);

  isgx::CliOptions opt;
  bool json_mode = false;

  auto add_common = [&](CLI::App* cmd, bool with_family) {
    cmd->add_option("scenario", opt.path, "scenario JSON file")->required();
    cmd->add_option("--out", opt.out, "also write the JSON report to this file");
    cmd->add_option("--tol", opt.tol, "override the scenario tolerance");
    cmd->add_option("--seed", opt.seed, "override the scenario seed");
    cmd->add_flag("--text", opt.text, "human-readable summary instead of JSON");
    cmd->add_flag("--json", json_mode, "JSON report (the default)");
    if (with_family)
      cmd->add_option("--family", opt.family,
                      "representation names forming the family (default: all)");
  };

  CLI::App* validate =
      app.add_subcommand("validate", "semigroup laws, action axioms, covariance");
  add_common(validate, true);
  CLI::App* crossed =
      app.add_subcommand("crossed", "convolution algebra and relative crossed product");
  add_common(crossed, true);
  CLI::App* equivalence =
      app.add_subcommand("equivalence", "S_G lift and the crossed-product comparison");
  add_common(equivalence, true);

  CLI11_PARSE(app, argc, argv);
  if (json_mode) opt.text = false;

  if (validate->parsed()) return isgx::cmd_validate(opt, std::cout, std::cerr);
  if (crossed->parsed()) return isgx::cmd_crossed(opt, std::cout, std::cerr);
  if (equivalence->parsed()) return isgx::cmd_equivalence(opt, std::cout, std::cerr);
  return 2;
}
