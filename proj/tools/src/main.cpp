#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "genergy/errors.hpp"

namespace {

// Exit codes: 0 success, 1 usage problem, 2 malformed graph input,
// 3 internal failure (convergence, overflow, broken invariant).
int run_mapped(const std::function<int()>& body) {
  try {
    return body();
  } catch (const genergy::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const genergy::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const genergy::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

std::optional<double> env_zero_tol() {
  const char* raw = std::getenv("SPECTRAL_ZERO_TOL");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (!end || *end != '\0' || !(v > 0.0))
    throw genergy::DomainError(
        "SPECTRAL_ZERO_TOL must be a positive number, got '" +
        std::string(raw) + "'");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral energy bounds for graphs and symmetric matrices"};
  app.require_subcommand(1);

  genergy::cli::AnalyzeSpec aspec;
  genergy::cli::SurveySpec sspec;
  genergy::cli::CaseStudySpec cspec;
  std::string analyze_out, survey_out, case_out, survey_in;
  double analyze_tol = 0.0, survey_tol = 0.0;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "full bound report for a single graph");
  analyze->add_option("--g6", aspec.graph.g6, "graph in graph6 notation");
  analyze
      ->add_option("--family", aspec.graph.family,
                   "family name followed by its integer parameters "
                   "(complete, complete_bipartite, path, cycle, star, broom)")
      ->expected(1, 3);
  analyze->add_option("--format", aspec.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--out", analyze_out, "write output to this path");
  analyze->add_option("--kmax", aspec.kmax,
                      "depth cap for the degree-sequence iteration");
  CLI::Option* analyze_tol_opt = analyze->add_option(
      "--tol", analyze_tol, "spectral zero tolerance override");

  CLI::App* surv = app.add_subcommand(
      "survey", "one CSV row per graph6 line of the input file");
  surv->add_option("input", survey_in, "file of graph6 lines")->required();
  surv->add_flag("--strict", sspec.strict,
                 "stop with exit code 2 on the first malformed line");
  surv->add_option("--out", survey_out, "write the CSV to this path");
  surv->add_option("--kmax", sspec.kmax,
                   "depth cap for the degree-sequence iteration");
  CLI::Option* survey_tol_opt = surv->add_option(
      "--tol", survey_tol, "spectral zero tolerance override");

  CLI::App* cs = app.add_subcommand(
      "case-study", "parameter sweeps: tree, join, blowup");
  cs->add_option("which", cspec.which, "tree | join | blowup")->required();
  cs->add_option("--n-min", cspec.n_min, "smallest order for the tree sweep");
  cs->add_option("--n-max", cspec.n_max, "largest order for the tree sweep");
  cs->add_option("--r1-max", cspec.r1_max, "largest first radius (join)");
  cs->add_option("--r2-max", cspec.r2_max, "largest second radius (join)");
  cs->add_option("--t-max", cspec.t_max, "largest multiplier (blowup)");
  cs->add_option("--g6", cspec.base.g6, "base graph for the blowup sweep");
  cs->add_option("--family", cspec.base.family,
                 "base family for the blowup sweep")
      ->expected(1, 3);
  cs->add_option("--out", case_out, "write the CSV to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  return run_mapped([&]() -> int {
    const std::optional<double> env_tol = env_zero_tol();
    aspec.tol = analyze_tol_opt->count() > 0 ? std::optional<double>(analyze_tol)
                                             : env_tol;
    sspec.tol = survey_tol_opt->count() > 0 ? std::optional<double>(survey_tol)
                                            : env_tol;

    auto with_out = [](const std::string& path,
                       auto&& fn) -> int {
      if (path.empty()) return fn(std::cout);
      std::ofstream f(path);
      if (!f) throw genergy::DomainError("cannot open '" + path + "' for writing");
      const int rc = fn(f);
      f.flush();
      if (!f) throw genergy::Error("failed while writing '" + path + "'");
      return rc;
    };

    if (analyze->parsed())
      return with_out(analyze_out, [&](std::ostream& out) {
        return genergy::cli::cmd_analyze(aspec, out, std::cerr);
      });
    if (surv->parsed()) {
      std::ifstream in(survey_in);
      if (!in)
        throw genergy::DomainError("cannot open '" + survey_in + "' for reading");
      return with_out(survey_out, [&](std::ostream& out) {
        return genergy::cli::cmd_survey(in, sspec, out, std::cerr);
      });
    }
    if (cs->parsed())
      return with_out(case_out, [&](std::ostream& out) {
        return genergy::cli::cmd_case_study(cspec, out, std::cerr);
      });
    throw genergy::DomainError("no subcommand given");
  });
}
