#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bicatmnd/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = bicatmnd::cli;
  CLI::App app{"Monads in a bicategory of finite categories"};
  std::string command;
  std::vector<std::string> names;
  std::string workspace;
  std::vector<std::string> samples;
  bool as_json = false;
  double bound = 0;

  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(cli::commands()));
  app.add_option("names", names, "Declaration names");
  app.add_option("--workspace,-w", workspace, "Workspace JSON file");
  app.add_option("--samples,--corpus", samples, "Sample sets or category names")->delimiter(',');
  app.add_flag("--json", as_json, "Print the JSON report");
  auto* bound_opt = app.add_option("--bound", bound, "Enumeration limit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::optional<std::string> text;
  if (!workspace.empty()) {
    std::ifstream in(workspace);
    if (!in) {
      std::cerr << "cannot read workspace '" << workspace << "'\n";
      return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  cli::Options opts{samples, std::nullopt};
  if (*bound_opt) opts.bound = bound;
  const auto r = cli::run_command_text(text, command, names, opts);
  if (as_json)
    std::cout << r.doc.dump(2) << "\n";
  else
    std::cout << cli::render_text(r.doc);
  return r.status;
}
