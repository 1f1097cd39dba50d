#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace genergy::cli {

// Exactly one of g6 / family may be set; family is the name followed by
// its numeric parameters.
struct GraphSpec {
  std::string g6;
  std::vector<std::string> family;
};

struct AnalyzeSpec {
  GraphSpec graph;
  std::string format = "json";  // json | csv
  int kmax = 200;
  std::optional<double> tol;
};

struct SurveySpec {
  bool strict = false;
  int kmax = 200;
  std::optional<double> tol;
};

struct CaseStudySpec {
  std::string which;  // tree | join | blowup
  int n_min = 4;
  int n_max = 40;
  int r1_max = 10;
  int r2_max = 10;
  int t_max = 4;
  GraphSpec base;  // blowup only
};

// Each command writes its document to `out` and diagnostics to `diag`,
// returning the process exit code.  Usage-class errors (DomainError) and
// internal errors propagate to the caller; graph6 problems in analyze
// and strict-mode survey are reported on `diag` and turn into exit
// code 2.
int cmd_analyze(const AnalyzeSpec& spec, std::ostream& out, std::ostream& diag);
int cmd_survey(std::istream& in, const SurveySpec& spec, std::ostream& out,
               std::ostream& diag);
int cmd_case_study(const CaseStudySpec& spec, std::ostream& out,
                   std::ostream& diag);

}  // namespace genergy::cli
