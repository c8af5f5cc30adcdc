// wallisqm: reproduction tables for the Wallis-product / variational
// hydrogen results, plus a self-verification run.
//
//   wallisqm pi --n 1,10,100
//   wallisqm sum --mode general --m 0.5 --k 0.5 --n 1:5:1
//   wallisqm variational --family lorentz --potential coulomb --l-max 20
//   wallisqm bounds --kind quartic --grid '0.2:1e5:*2'
//   wallisqm integrals --l-max 15
//   wallisqm verify --profile strict
//
// Exit status: 0 success, 1 a check or verification failed, 2 usage or
// domain error.

#include <wallisqm/commands.hpp>
#include <wallisqm/errors.hpp>
#include <wallisqm/report.hpp>
#include <wallisqm/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

using namespace wallisqm;

struct GlobalOptions {
  OutputFormat format = OutputFormat::Csv;
  std::optional<double> tol;
  std::string out_path;
};

int emit(const CommandResult& result, const GlobalOptions& g) {
  if (g.out_path.empty() || g.out_path == "-") {
    write_table(std::cout, result.table, g.format);
  } else {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << g.out_path << " for writing\n";
      return kExitUsage;
    }
    write_table(file, result.table, g.format);
  }
  return result.exit_code;
}

std::vector<std::int64_t> integers(const std::string& text, const char* flag) {
  try {
    return parse_integer_selection(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::vector<double> reals(const std::string& text, const char* flag) {
  try {
    return parse_real_selection(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wallis formula from variational hydrogen levels: reproduction tables and checks"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};
  app.add_option("--format", global.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--tol", global.tol, "Tolerance (quadrature relative tolerance for integrals/numeric energies)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", global.out_path, "Output path (default: standard output)");

  auto* pi = app.add_subcommand("pi", "Wallis partial products 2 P_n against pi");
  std::string pi_n = "1,10,100,1000,10000,100000,1000000";
  pi->add_option("--n", pi_n, "n values: v, v1,v2,... or start:stop:step");

  auto* sum = app.add_subcommand("sum", "Telescoped and direct partial sums against the closed-form limits");
  std::string sum_mode = "simple";
  std::optional<double> sum_m;
  std::optional<double> sum_k;
  std::string sum_n = "1,2,5,10,100,1000,10000";
  sum->add_option("--mode", sum_mode, "simple (a_n) or general (b_n)")->check(CLI::IsMember({"simple", "general"}));
  sum->add_option("--m", sum_m, "b_n parameter m (> -1)");
  sum->add_option("--k", sum_k, "b_n parameter k (> -1, k - m != -1/2)");
  sum->add_option("--n", sum_n, "numbers of terms N");

  auto* var = app.add_subcommand("variational", "Variational vs exact energy levels");
  std::string family = "gaussian";
  std::string potential = "coulomb";
  std::string method = "closed";
  std::string l_max = "20";
  std::optional<std::int64_t> l_min;
  var->add_option("--family", family, "Trial family")->check(CLI::IsMember({"gaussian", "lorentz"}));
  var->add_option("--potential", potential, "Potential")->check(CLI::IsMember({"coulomb", "oscillator"}));
  var->add_option("--method", method, "closed or numeric")->check(CLI::IsMember({"closed", "numeric"}));
  var->add_option("--l-max", l_max, "Single value L (rows l-min..L), list, or start:stop:step");
  var->add_option("--l-min", l_min, "First l when --l-max is a single value (default 0)");

  auto* bounds = app.add_subcommand("bounds", "Kazarinoff, quartic-root and Wendel checks over a grid");
  std::string kind = "kazarinoff";
  std::optional<std::string> grid;
  std::string s_values = "0.25,0.5,0.75";
  bounds->add_option("--kind", kind, "kazarinoff | quartic | wendel")
      ->check(CLI::IsMember({"kazarinoff", "quartic", "wendel"}));
  bounds->add_option("--grid", grid, "n (kazarinoff) or x values; start:stop:*factor for geometric grids");
  bounds->add_option("--s", s_values, "Wendel shifts s");

  auto* integrals = app.add_subcommand("integrals", "Closed-form integrals vs semi-infinite quadrature");
  std::int64_t integrals_l_max = 15;
  integrals->add_option("--l-max", integrals_l_max, "Largest l")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run every invariant check; exit 0 iff all pass");
  std::string profile = "strict";
  double a1_coefficient = 3.0;
  verify->add_option("--profile", profile, "strict or relaxed (tolerances x100)")
      ->check(CLI::IsMember({"strict", "relaxed"}));
  verify->add_option("--a1-coefficient", a1_coefficient,
                     "Coefficient of a_1 in the closed partial sum (mutation testing; default 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*pi) return emit(cmd_pi(integers(pi_n, "--n")), global);

    if (*sum) {
      const auto ns = integers(sum_n, "--n");
      if (sum_mode == "simple") return emit(cmd_sum(SumMode::Simple, std::nullopt, ns), global);
      if (!sum_m || !sum_k) throw UsageError("sum --mode general requires --m and --k");
      return emit(cmd_sum(SumMode::General, GeneralizedParams{*sum_m, *sum_k}, ns), global);
    }

    if (*var) {
      const auto fam = family == "gaussian" ? TrialFamily::Gaussian : TrialFamily::Lorentz;
      const auto pot = potential == "coulomb" ? PotentialKind::Coulomb : PotentialKind::HarmonicOscillator;
      auto ls = integers(l_max, "--l-max");
      if (ls.size() == 1 && l_max.find_first_of(",:") == std::string::npos) {
        const std::int64_t first = l_min.value_or(0);
        const std::int64_t last = ls.front();
        if (last < first) throw UsageError("--l-max must be >= --l-min");
        ls.clear();
        for (auto l = first; l <= last; ++l) ls.push_back(l);
      }
      return emit(cmd_variational(fam, pot, ls, method == "closed" ? Method::ClosedForm : Method::Numeric), global);
    }

    if (*bounds) {
      BoundKind bk = BoundKind::Kazarinoff;
      std::string default_grid = "1,2,5,10,100,1000,10000,100000,1000000";
      if (kind == "quartic") {
        bk = BoundKind::Quartic;
        default_grid = "0.2:1e5:*2";
      } else if (kind == "wendel") {
        bk = BoundKind::Wendel;
        default_grid = "10:1e6:*10";
      }
      const auto xs = reals(grid.value_or(default_grid), "--grid");
      const auto ss = reals(s_values, "--s");
      return emit(cmd_bounds(bk, xs, ss), global);
    }

    if (*integrals) return emit(cmd_integrals(integrals_l_max, global.tol.value_or(1e-12)), global);

    if (*verify) {
      VerifyConfig config;
      config.profile = profile == "strict" ? TolProfile::Strict : TolProfile::Relaxed;
      config.a1_coefficient = a1_coefficient;
      const auto results = run_verify(config);
      std::size_t failed = 0;
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " -- " << r.detail << '\n';
        if (!r.passed) ++failed;
      }
      std::cout << (failed == 0 ? "verify: all " + std::to_string(results.size()) + " checks passed\n"
                                : "verify: " + std::to_string(failed) + " of " + std::to_string(results.size()) +
                                      " checks FAILED\n");
      return failed == 0 ? kExitOk : kExitCheckFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
