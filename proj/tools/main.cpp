#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "orbitsep/commands.hpp"

namespace {

struct Cli {
  std::string file;
  orbitsep::Params params;
  std::string mode = "exact";
  bool json = false;
};

constexpr const char* kDescriptions[] = {
    "sample the orbit of a point",
    "stabilized truncated vanishing ideal of an orbit",
    "Hilbert profile of an orbit sample",
    "generic rank of the truncated system over the function field",
    "minor generators of the rank-drop locus and point membership",
    "compare the orbit-closure ideals of two points",
    "check invariance of the orbit ideal and fiber membership",
    "polynomial invariants and verification of rational invariants",
    "density evidence at a point",
    "run the built-in example systems end to end",
};

void attach_common(CLI::App* sub, Cli& cli, bool needs_file) {
  if (needs_file)
    sub->add_option("file", cli.file, "system definition file")->required();
  sub->add_option("--degree", cli.params.degree, "truncation degree d");
  sub->add_option("--max-len", cli.params.max_len, "word length bound");
  sub->add_option("--window", cli.params.window, "stabilization window");
  sub->add_option("--len-limit", cli.params.len_limit,
                  "word length limit for stabilization");
  sub->add_option("--cap", cli.params.cap, "orbit point cap");
  sub->add_option("--seed", cli.params.seed, "seed for randomized steps");
  sub->add_option("--mode", cli.mode, "rank mode: exact or specialized")
      ->check(CLI::IsMember({"exact", "specialized"}));
  sub->add_option("--inv-degree", cli.params.inv_degree,
                  "invariant search degree (density)");
  sub->add_option("--minor-budget", cli.params.minor_budget,
                  "submatrix budget for exceptional generators");
  sub->add_option("--point", cli.params.points,
                  "point: named or comma-separated coordinates");
  sub->add_option("--probe", cli.params.probes,
                  "probe point for the fiber check");
  sub->add_option("--verify", cli.params.verify,
                  "rational function p/q to verify as invariant");
  sub->add_flag("--json", cli.json, "emit machine-readable JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact orbit-closure separation for semigroups of rational "
               "self-maps of affine space"};
  app.require_subcommand(1);

  Cli cli;
  const auto& names = orbitsep::command_names();
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < names.size(); ++i) {
    CLI::App* sub = app.add_subcommand(names[i], kDescriptions[i]);
    attach_common(sub, cli, names[i] != "selftest");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean, usage errors exit 2
  }

  cli.params.mode = cli.mode == "exact" ? orbitsep::RankMethod::exact
                                        : orbitsep::RankMethod::specialized;

  try {
    orbitsep::CommandResult result;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!subs[i]->parsed()) continue;
      if (names[i] == "selftest") {
        result = orbitsep::run_selftest(cli.params);
      } else {
        orbitsep::SystemFile sys = orbitsep::load_system(cli.file);
        result = orbitsep::run_command(names[i], sys, cli.params, cli.file);
      }
    }
    std::cout << (cli.json ? result.json : result.human);
    return result.exit_code;
  } catch (const orbitsep::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const orbitsep::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const orbitsep::RetryableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
