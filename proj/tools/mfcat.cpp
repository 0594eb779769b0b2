// Command-line front end.  Talks to the engine exclusively through the C
// API, so it doubles as a smoke test of that surface.
//
// Exit codes: 0 success, 1 mathematical failure, 2 input error, 3 budget.
#include "mfcat.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Command {
  const char *name;
  const char *help;
};

constexpr Command kCommands[] = {
    {"verify", "check the factorization identities for every object"},
    {"stabilize", "stabilize a module presentation against the potential"},
    {"ext", "Ext groups between two objects (affine)"},
    {"cech-ext", "Ext groups globalized over the cover"},
    {"coker", "cokernel presentation of an object with its dimensions"},
    {"dual", "dual object (curvature flips sign)"},
    {"tensor", "external tensor product of two objects"},
    {"hh", "Hochschild cohomology of the pair (cover, potential)"},
    {"hh-homology", "Hochschild homology of the pair (cover, potential)"},
    {"hh-diagonal", "Hochschild cohomology via the diagonal factorization"},
    {"hh-compare", "cross-validate the two Hochschild routes"},
    {"cy-check", "Ext-group symmetry expected from the shifted structure"},
};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact two-periodic homological algebra over Q[x1..xn]"};
  app.require_subcommand(1);

  std::string problem_path;
  std::string json_path;
  std::size_t budget = 0;
  bool verbose = false;

  for (const Command &c : kCommands) {
    CLI::App *sub = app.add_subcommand(c.name, c.help);
    sub->add_option("problem", problem_path, "problem description (JSON)")
        ->required();
    sub->add_option("--budget", budget,
                    "Groebner pair budget (0 keeps the default)");
    sub->add_option("--json", json_path, "write the machine report here");
    sub->add_flag("--verbose", verbose, "append timing to the text report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2; // --help exits 0, anything else is input error
  }

  const std::string command = app.get_subcommands().front()->get_name();

  mfcat_problem *problem = mfcat_problem_load(problem_path.c_str());
  if (!problem) {
    std::fprintf(stderr, "error: %s\n", mfcat_last_error());
    return mfcat_last_status();
  }

  mfcat_report *report = nullptr;
  mfcat_status status =
      mfcat_run(problem, command.c_str(), budget, verbose ? 1 : 0, &report);
  if (status != MFCAT_OK) {
    std::fprintf(stderr, "error: %s\n", mfcat_last_error());
    mfcat_problem_free(problem);
    return status;
  }

  std::fputs(mfcat_report_text(report), stdout);

  int exit_code = mfcat_report_passed(report) ? 0 : 1;
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    out << mfcat_report_json(report) << "\n";
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", json_path.c_str());
      exit_code = 2;
    }
  }

  mfcat_report_free(report);
  mfcat_problem_free(problem);
  return exit_code;
}
