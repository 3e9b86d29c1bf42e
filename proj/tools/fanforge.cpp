#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  namespace ff = fanforge::cli;

  CLI::App app{"fanforge: exact invariants of triangulated vector configurations"};
  app.require_subcommand(1);

  ff::Options opts;
  std::string path;
  app.add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--precision", opts.precision, "Significant digits in SVG output")->check(CLI::Range(1, 17));

  for (const auto& name : ff::command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("document", path, "Configuration document (JSON)")->required();
    sub->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    if (name == "chambers" || name == "all") sub->add_option("--svg", opts.svg_path, "Write the chamber arrangement as SVG");
    if (name == "embed" || name == "all") sub->add_option("--nu", opts.nu, "Point of R^{2m}, one expression per coordinate");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto outcome = ff::execute(app.get_subcommands().front()->get_name(), path, opts);
  std::cout << outcome.output;
  return outcome.exit_code;
}
