// Command-line driver: dimension tables, kernel rank checks, and the named
// verification suites, with optional JSON or CSV output.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 a check was skipped
// for budget (none failed), 3 usage error.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "brauer/verify.hpp"

using namespace brauer;

namespace {

int emit(const Report& rep, bool as_json) {
  if (as_json)
    std::cout << report_to_json(rep).dump(2) << "\n";
  else
    print_report(rep, std::cout);
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Brauer-algebra annihilators of orthosymplectic tensor space"};
  app.require_subcommand(1);

  int m = 1, n = 1, r = 4, r_max = 5;
  long budget = default_eval_budget();
  bool as_json = false, as_csv = false, slow = false;
  std::uint64_t seed = 0x5eedULL;
  std::string delta_str;
  std::string suite;

  auto* dims = app.add_subcommand("dims", "dimension table: algebra and predicted kernel");
  dims->add_option("--m", m, "even dimension");
  dims->add_option("--n", n, "half the odd dimension");
  dims->add_option("--r-max", r_max, "largest degree");
  dims->add_flag("--json", as_json, "emit a JSON report");
  dims->add_flag("--csv", as_csv, "emit the table as CSV");

  auto* rank = app.add_subcommand("kernel-rank", "exact evaluation rank in one degree");
  rank->add_option("--m", m, "even dimension");
  rank->add_option("--n", n, "half the odd dimension");
  rank->add_option("--r", r, "degree");
  rank->add_option("--budget-entries", budget, "largest flattened matrix size");
  rank->add_flag("--json", as_json, "emit a JSON report");

  auto* verify = app.add_subcommand("verify", "run a named identity suite");
  verify->add_option("suite", suite, "one of: relations actions lz phi basis garnir generators sft osp12n classical osp-end all")
      ->required();
  verify->add_option("--budget-entries", budget, "largest flattened matrix size");
  verify->add_option("--seed", seed, "seed for the randomized identity checks");
  verify->add_option("--delta", delta_str, "fix the loop parameter in the relations suite (default: indeterminate)");
  verify->add_flag("--slow", slow, "include the long (1|4) single-generator check");
  verify->add_flag("--json", as_json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (dims->parsed()) {
      if (as_csv) {
        std::cout << "r,dim_algebra,critical_degree,predicted_kernel\n";
        for (const DimRow& row : dimension_table(m, n, r_max))
          std::cout << row.r << "," << row.dim_algebra.get_str() << "," << row.critical << ","
                    << row.predicted_kernel.get_str() << "\n";
        return 0;
      }
      return emit(cmd_dims(m, n, r_max), as_json);
    }
    if (rank->parsed()) {
      return emit(cmd_kernel_rank(m, n, r, budget), as_json);
    }
    VerifyOptions opt;
    opt.budget = budget;
    opt.slow = slow;
    opt.seed = seed;
    if (!delta_str.empty()) opt.delta_override = parse_rational(delta_str);
    if (suite == "all") {
      int worst = 0;
      for (const std::string& name : suite_names()) {
        Report rep = verify_suite(name, opt);
        int code = emit(rep, as_json);
        if (code == 1 || (code == 2 && worst == 0)) worst = code;
      }
      return worst;
    }
    return emit(verify_suite(suite, opt), as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "skipped: " << e.what() << "\n";
    return 2;
  }
}
