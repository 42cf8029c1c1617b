// triscord: genuine tripartite discord and negativity of symmetric three-qubit X-states.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "triscord/commands.hpp"

namespace cli = triscord::cli;

int main(int argc, char** argv) {
  CLI::App app{"Genuine tripartite quantum discord of symmetric three-qubit X-states", "triscord"};
  app.require_subcommand(1);

  // report
  std::vector<std::string> triple;
  bool json = false;
  auto* report = app.add_subcommand("report", "Correlation report for one (a1, c1, c2)");
  report->add_option("params", triple, "State parameters a1 c1 c2")->expected(3)->required();
  report->add_flag("--json", json, "Emit JSON instead of a table");

  // sweep
  std::string slice_name;
  int n = 201;
  std::string output;
  std::vector<std::string> quantity_names;
  auto* sweep = app.add_subcommand("sweep", "Tabulate a 2D slice of parameter space as CSV");
  sweep->add_option("--slice", slice_name, "c1_eq_c2 | a1_zero | c2_zero")->required();
  sweep->add_option("-n,--n", n, "Grid points per axis")->capture_default_str();
  sweep->add_option("-o,--output", output, "CSV output path")->required();
  sweep->add_option("-q,--quantities", quantity_names, "Columns: d3 n3 t3 j3 s_cond branch")
      ->delimiter(',');

  // stats
  std::size_t stats_samples = 6000;
  std::optional<std::uint64_t> stats_seed;
  auto* stats = app.add_subcommand("stats", "Winning-branch shares over random states");
  stats->add_option("--samples", stats_samples, "Number of sampled states")->capture_default_str();
  stats->add_option("--seed", stats_seed, "RNG seed (default: $TRISCORD_SEED or built-in)");

  // check
  cli::CheckOptions check_opt;
  std::optional<std::uint64_t> check_seed;
  bool no_refine = false;
  auto* check = app.add_subcommand("check", "Cross-validate the closed form against brute-force measurement");
  check->add_option("--samples", check_opt.samples, "Random states on top of the benchmarks")
      ->capture_default_str();
  check->add_option("--grid", check_opt.grid, "Grid steps per angle")->capture_default_str();
  check->add_option("--seed", check_seed, "RNG seed (default: $TRISCORD_SEED or built-in)");
  check->add_flag("--no-refine", no_refine, "Grid search only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  try {
    if (*report) {
      triscord::XParams p;
      double* fields[] = {&p.a1, &p.c1, &p.c2};
      for (std::size_t i = 0; i < 3; ++i) {
        const auto v = cli::parse_real(triple[i]);
        if (!v) {
          std::cerr << "error: not a number: '" << triple[i] << "'\n";
          return cli::kExitUsage;
        }
        *fields[i] = *v;
      }
      return cli::cmd_report(p, json, std::cout, std::cerr);
    }

    if (*sweep) {
      cli::SweepSpec spec;
      const auto slice = cli::parse_slice(slice_name);
      if (!slice) {
        std::cerr << "error: unknown slice '" << slice_name << "'\n";
        return cli::kExitUsage;
      }
      spec.slice = *slice;
      if (n < 2) {
        std::cerr << "error: --n must be >= 2\n";
        return cli::kExitUsage;
      }
      spec.n = n;
      spec.output = output;
      if (!quantity_names.empty()) {
        spec.quantities.clear();
        for (const std::string& q : quantity_names) {
          const auto parsed = cli::parse_quantity(q);
          if (!parsed) {
            std::cerr << "error: unknown quantity '" << q << "'\n";
            return cli::kExitUsage;
          }
          spec.quantities.push_back(*parsed);
        }
      }
      return cli::cmd_sweep(spec, std::cout, std::cerr);
    }

    if (*stats) {
      if (stats_samples < 1) {
        std::cerr << "error: --samples must be >= 1\n";
        return cli::kExitUsage;
      }
      return cli::cmd_stats(stats_samples, cli::resolve_seed(stats_seed), std::cout);
    }

    if (*check) {
      if (check_opt.grid < 2) {
        std::cerr << "error: --grid must be >= 2\n";
        return cli::kExitUsage;
      }
      check_opt.seed = cli::resolve_seed(check_seed);
      check_opt.refine = !no_refine;
      return cli::cmd_check(check_opt, std::cout, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
  return cli::kExitUsage;
}
