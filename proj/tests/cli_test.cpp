#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "doctest.h"
#include "genergy/errors.hpp"
#include "json.hpp"
#include "render.hpp"

using namespace genergy;
using genergy::cli::AnalyzeSpec;
using genergy::cli::CaseStudySpec;
using genergy::cli::SurveySpec;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary through the shell; stderr is dropped so that
// diagnostics do not interleave with the captured stream.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GENERGY_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/genergy_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("number rendering is deterministic twelve-significant-digit text") {
  using cli::format_double;
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(1.618033988749895) == "1.61803398875");
  CHECK(format_double(4.47213595499958) == "4.472135955");
  CHECK(format_double(-0.25) == "-0.25");
  CHECK(format_double(1e-15) == "1e-15");
  CHECK(cli::format_optional(std::nullopt) == "NA");
  CHECK(cli::format_optional(3.5) == "3.5");
}

TEST_CASE("csv cells are quoted exactly when the dialect requires it") {
  using cli::csv_cell;
  CHECK(csv_cell("plain") == "plain");
  CHECK(csv_cell("with,comma") == "\"with,comma\"");
  CHECK(csv_cell("with\"quote") == "\"with\"\"quote\"");
  CHECK(csv_cell("line\nbreak") == "\"line\nbreak\"");
  CHECK(csv_cell(" padded ") == "\" padded \"");
  CHECK(csv_cell("") == "");
}

TEST_CASE("json builder keeps insertion order and escapes control characters") {
  cli::Json o = cli::Json::object();
  o.add("zeta", cli::Json::num(1.5));
  o.add("alpha", cli::Json::str("tab\there"));
  cli::Json arr = cli::Json::array();
  arr.push(cli::Json::integer(1));
  arr.push(cli::Json::null());
  o.add("list", std::move(arr));
  const std::string flat = o.dump(0);
  CHECK(flat == "{\"zeta\":1.5,\"alpha\":\"tab\\there\",\"list\":[1,null]}");
  CHECK_THROWS_AS(o.push(cli::Json::null()), Error);
}

TEST_CASE("analyze emits a json report with stable keys and correct content") {
  AnalyzeSpec spec;
  spec.graph.family = {"path", "4"};
  std::ostringstream out, diag;
  REQUIRE(cli::cmd_analyze(spec, out, diag) == 0);
  const std::string text = out.str();

  // Stable key order: each top-level key appears after the previous one.
  const char* keys[] = {"\"id\"",     "\"graph6\"", "\"n\"",
                        "\"m\"",      "\"kappa\"",  "\"rho\"",
                        "\"energy\"", "\"bounds\"", "\"winner\"",
                        "\"counts\"", "\"certificates\"", "\"witness\""};
  std::size_t last = 0;
  for (const char* key : keys) {
    const std::size_t at = text.find(key, last);
    REQUIRE(at != std::string::npos);
    last = at;
  }

  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["id"] == "path(4)");
  CHECK(j["graph6"] == "Ch");
  CHECK(j["n"] == 4);
  CHECK(j["m"] == 3);
  CHECK(j["kappa"] == 0);
  CHECK(j["winner"] == "mcclelland");
  CHECK(j["bounds"].size() == 7);
  CHECK(j["bounds"][0]["name"] == "caporossi");
  CHECK(j["bounds"][0]["applicable"] == true);
  CHECK(j["counts"]["applicable"] == false);
  CHECK(j["certificates"].empty());
  CHECK(j["witness"]["kind"] == "path_submatrix");

  std::ostringstream again;
  REQUIRE(cli::cmd_analyze(spec, again, diag) == 0);
  CHECK(again.str() == text);
}

TEST_CASE("analyze csv prints NA for bounds that refuse a vertexless clique") {
  AnalyzeSpec spec;
  spec.graph.family = {"complete", "1"};
  spec.format = "csv";
  std::ostringstream out, diag;
  REQUIRE(cli::cmd_analyze(spec, out, diag) == 0);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].find("line,graph6,n,m,kappa,rho,energy,caporossi") == 0);
  CHECK(lines[1].find(",NA,NA,NA,NA,NA,NA,NA,NA,") != std::string::npos);

  AnalyzeSpec bad;
  bad.graph.family = {"path", "4"};
  bad.format = "yaml";
  std::ostringstream sink;
  CHECK_THROWS_AS(cli::cmd_analyze(bad, sink, sink), DomainError);
}

TEST_CASE("survey reports rows, certificates and per-line errors") {
  SurveySpec spec;
  std::istringstream in("A_\nBw\n\nnope!!\nCh\n");
  std::ostringstream out, diag;
  REQUIRE(cli::cmd_survey(in, spec, out, diag) == 0);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 5);
  CHECK(lines[0].find("line,graph6,") == 0);
  CHECK(lines[1].find("1,A_,2,1,0,1,2,") == 0);
  CHECK(lines[1].find("bipartite_union") != std::string::npos);
  CHECK(lines[2].find("2,Bw,3,3,") == 0);
  CHECK(lines[2].find("clique_matching_union") != std::string::npos);
  CHECK(lines[3].find("4,nope!!,NA,") == 0);
  CHECK(lines[4].find("5,Ch,4,3,") == 0);
  CHECK(lines[4].find("path_submatrix") != std::string::npos);
  CHECK(diag.str().find("3 rows, 1 errors") != std::string::npos);

  SurveySpec strict;
  strict.strict = true;
  std::istringstream in2("A_\nnope!!\nCh\n");
  std::ostringstream out2, diag2;
  CHECK(cli::cmd_survey(in2, strict, out2, diag2) == 2);
  CHECK(split_lines(out2.str()).size() == 2);
  CHECK(diag2.str().find("line 2") != std::string::npos);
}

TEST_CASE("survey quotes raw lines that would break the csv dialect") {
  SurveySpec spec;
  std::istringstream in("b,ogus\n");
  std::ostringstream out, diag;
  REQUIRE(cli::cmd_survey(in, spec, out, diag) == 0);
  CHECK(out.str().find("\"b,ogus\"") != std::string::npos);
}

TEST_CASE("the installed binary maps failures onto the documented exit codes") {
  CHECK(run_cli("analyze --family path 4").exit_code == 0);
  CHECK(run_cli("analyze --g6 'x!!'").exit_code == 2);
  CHECK(run_cli("analyze --g6 'A_' --family path 4").exit_code == 1);
  CHECK(run_cli("analyze").exit_code == 1);
  CHECK(run_cli("analyze --family frobnicate 4").exit_code == 1);
  CHECK(run_cli("survey /no/such/file").exit_code == 1);
  CHECK(run_cli("totally-unknown-subcommand").exit_code == 1);
  CHECK(run_cli("case-study nope").exit_code == 1);
}

TEST_CASE("the binary honors the spectral zero tolerance environment variable") {
  {
    const std::string cmd = std::string("SPECTRAL_ZERO_TOL=abc ") +
                            GENERGY_CLI_PATH + " analyze --family path 4";
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[256];
    while (fread(buf, 1, sizeof buf, pipe) > 0) {
    }
    CHECK(WEXITSTATUS(pclose(pipe)) == 1);
  }
  {
    const std::string cmd = std::string("SPECTRAL_ZERO_TOL=1e-6 ") +
                            GENERGY_CLI_PATH + " analyze --family path 4";
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, got);
    CHECK(WEXITSTATUS(pclose(pipe)) == 0);
    // Adjacency input keeps its exact integer rank, so the report is
    // unchanged by the floating tolerance.
    CHECK(text == run_cli("analyze --family path 4").out);
  }
}

TEST_CASE("the binary writes through --out and stays silent on stdout") {
  const std::string path = "/tmp/genergy_test_out.json";
  std::remove(path.c_str());
  const RunResult r =
      run_cli("analyze --family cycle 6 --out " + std::string(path));
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream content;
  content << f.rdbuf();
  CHECK(content.str().find("\"graph6\"") != std::string::npos);
}

TEST_CASE("strict survey through the binary stops with exit code two") {
  const std::string path =
      temp_file("strict.g6", "A_\nBw\nnot-a-line!!\nCh\n");
  CHECK(run_cli("survey " + path).exit_code == 0);
  CHECK(run_cli("survey " + path + " --strict").exit_code == 2);
}

TEST_CASE("tree case study reproduces the threshold at thirty-five vertices") {
  CaseStudySpec spec;
  spec.which = "tree";
  spec.n_min = 30;
  spec.n_max = 40;
  std::ostringstream out, diag;
  REQUIRE(cli::cmd_case_study(spec, out, diag) == 0);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 12);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CHECK(lines[i].find(",yes") != std::string::npos);
    const long n = std::stol(lines[i]);
    const bool improved =
        lines[i].find("nullity_frobenius,nullity_frobenius") != std::string::npos;
    CHECK(improved == (n <= 34));
  }

  CaseStudySpec bad = spec;
  bad.n_max = 100;
  std::ostringstream sink;
  CHECK_THROWS_AS(cli::cmd_case_study(bad, sink, sink), DomainError);
}

TEST_CASE("join case study validates the block spectrum on a small grid") {
  CaseStudySpec spec;
  spec.which = "join";
  spec.r1_max = 4;
  spec.r2_max = 4;
  std::ostringstream out, diag;
  REQUIRE(cli::cmd_case_study(spec, out, diag) == 0);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 17);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CHECK(lines[i].find(",yes,yes") != std::string::npos);
  }
}

TEST_CASE("blowup case study checks the exact scaling laws") {
  CaseStudySpec spec;
  spec.which = "blowup";
  spec.base.family = {"complete", "3"};
  spec.t_max = 4;
  std::ostringstream out, diag;
  REQUIRE(cli::cmd_case_study(spec, out, diag) == 0);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 5);
  CHECK(lines[2].find(",16,16,yes") != std::string::npos);
  CHECK(lines[4].find(",128,128,yes") != std::string::npos);
  for (std::size_t i = 1; i < lines.size(); ++i)
    CHECK(lines[i].find(",no") == std::string::npos);

  CaseStudySpec missing;
  missing.which = "blowup";
  std::ostringstream sink;
  CHECK_THROWS_AS(cli::cmd_case_study(missing, sink, sink), DomainError);
}
