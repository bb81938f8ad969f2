// Command-line front end: cliffalg <command> [flags]

#include <cstdlib>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cliffalg/cli/report_io.hpp"
#include "cliffalg/cli/run.hpp"
#include "cliffalg/error.hpp"

using namespace cliffalg;

int main(int argc, char** argv) {
  CLI::App app{"Coordinate algebras of Clifford spaces: construction and checks"};
  cli::RunConfig config;
  if (const char* env = std::getenv("CLIFFALG_THREADS")) config.threads = std::atoi(env);

  const std::map<std::string, cli::Command> commands{{"maximal", cli::Command::maximal},
                                                     {"minimal", cli::Command::minimal},
                                                     {"toric", cli::Command::toric},
                                                     {"verify-all", cli::Command::verify_all}};
  const std::map<std::string, cli::OutputFormat> formats{
      {"json", cli::OutputFormat::json}, {"csv", cli::OutputFormat::csv}, {"text", cli::OutputFormat::text}};

  std::string family_path;
  std::string q;
  bool no_timing = false;
  app.add_option("command", config.command, "maximal, minimal, toric or verify-all")
      ->required()
      ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
  app.add_option("--n", config.n, "dimension of V");
  app.add_option("--degree-cap", config.degree_cap, "highest degree computed");
  app.add_option("--family-path,--family", family_path, "quadric family file for the minimal command");
  app.add_option("--q", q, "deformation parameter for the toric command, e.g. -1/2");
  app.add_option("--output-format", config.output_format, "json, csv or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--seed", config.seed, "seed for random basis changes and families");
  app.add_option("--threads", config.threads, "OpenMP thread count (default: CLIFFALG_THREADS)");
  app.add_flag("--no-timing", no_timing, "report elapsed_ms as 0");
  CLI11_PARSE(app, argc, argv);

  if (!family_path.empty()) config.family_path = family_path;
  if (!q.empty()) {
    try {
      config.q = exactla::parse_rational(q);
    } catch (const Error& e) {
      std::cerr << "--q: " << e.what() << '\n';
      return 2;
    }
  }
  config.timing = !no_timing;

  const auto report = cli::run(config);
  std::cout << cli::render(report);
  return report.failed() ? 1 : 0;
}
