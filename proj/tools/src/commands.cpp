#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "genergy/bounds.hpp"
#include "genergy/classify.hpp"
#include "genergy/errors.hpp"
#include "genergy/families.hpp"
#include "genergy/graph6.hpp"
#include "genergy/linalg.hpp"
#include "render.hpp"

namespace genergy::cli {

namespace {

Graph graph_from_spec(const GraphSpec& spec, std::string* id) {
  const bool has_g6 = !spec.g6.empty();
  const bool has_family = !spec.family.empty();
  if (has_g6 == has_family)
    throw DomainError("exactly one of --g6 and --family is required");
  if (has_g6) {
    if (id) *id = spec.g6;
    return parse_graph6(spec.g6);
  }
  const std::string& name = spec.family.front();
  std::vector<long> params;
  for (std::size_t i = 1; i < spec.family.size(); ++i) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(spec.family[i], &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != spec.family[i].size())
      throw DomainError("family parameter '" + spec.family[i] +
                        "' is not an integer");
    params.push_back(v);
  }
  if (id) {
    *id = name + "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) *id += ",";
      *id += std::to_string(params[i]);
    }
    *id += ")";
  }
  return make_family(name, params);
}

const std::vector<std::string> kRowHeader = {
    "line",          "graph6",        "n",
    "m",             "kappa",         "rho",
    "energy",        "caporossi",     "mcclelland",
    "nullity_frobenius", "nullity_log", "rayleigh_log",
    "component_log", "gamma_log",     "winner",
    "certificate",   "witness",       "error"};

std::string certificate_column(const Graph& g, const Spectrum& s) {
  if (match_bipartite_union(g)) return "bipartite_union";
  if (match_clique_matching_union(g)) return "clique_matching_union";
  if (certify_equal_moduli(s)) return "equal_moduli";
  if (certify_unit_moduli(s)) return "unit_moduli";
  return "none";
}

std::vector<std::string> report_row(long line_no, const std::string& g6,
                                    const BoundReport& r,
                                    const std::string& certificate,
                                    const std::string& witness) {
  std::vector<std::string> cells;
  cells.push_back(std::to_string(line_no));
  cells.push_back(g6);
  cells.push_back(std::to_string(r.n));
  cells.push_back(std::to_string(r.m));
  cells.push_back(std::to_string(r.kappa));
  cells.push_back(format_double(r.rho));
  cells.push_back(format_double(r.energy_value));
  for (const char* name : kBoundNames) {
    const BoundEntry* e = r.find(name);
    cells.push_back(e && e->applicable ? format_double(*e->value) : "NA");
  }
  cells.push_back(r.winner.empty() ? "NA" : r.winner);
  cells.push_back(certificate);
  cells.push_back(witness);
  cells.push_back("");
  return cells;
}

std::vector<std::string> error_row(long line_no, const std::string& raw,
                                   const std::string& message) {
  std::vector<std::string> cells;
  cells.push_back(std::to_string(line_no));
  cells.push_back(raw);
  for (std::size_t i = 2; i + 1 < kRowHeader.size(); ++i) cells.push_back("NA");
  cells.push_back(message);
  return cells;
}

Json certificate_json(const EqualityCertificate& c) {
  Json o = Json::object();
  o.add("kind", Json::str(to_string(c.kind)));
  o.add("bound", Json::str(c.bound));
  o.add("residual", Json::num(c.residual));
  switch (c.kind) {
    case CertificateKind::bipartite_union: {
      Json parts = Json::array();
      for (const auto& [a, b] : c.bipartite_parts) {
        Json pair = Json::array();
        pair.push(Json::integer(a));
        pair.push(Json::integer(b));
        parts.push(std::move(pair));
      }
      o.add("parts", std::move(parts));
      o.add("ell", Json::integer(c.ell));
      o.add("kappa", Json::integer(c.kappa));
      break;
    }
    case CertificateKind::clique_matching_union:
      o.add("n", Json::integer(c.n));
      o.add("ell", Json::integer(c.ell));
      o.add("kappa", Json::integer(c.kappa));
      o.add("clique_order", Json::integer(c.clique_order));
      o.add("matchings", Json::integer(c.matchings));
      o.add("isolated", Json::integer(c.isolated));
      break;
    default:
      o.add("n", Json::integer(c.n));
      o.add("kappa", Json::integer(c.kappa));
      break;
  }
  return o;
}

Json witness_json(const StrictnessWitness& w) {
  Json o = Json::object();
  o.add("kind", Json::str(to_string(w.kind)));
  Json idx = Json::array();
  for (int i : w.indices) idx.push(Json::integer(i));
  o.add("indices", std::move(idx));
  o.add("a", Json::num(w.a));
  o.add("b", Json::num(w.b));
  if (w.kind == WitnessKind::rayleigh_triple) {
    o.add("c", Json::num(w.c));
    Json vec = Json::array();
    for (double v : w.vector) vec.push(Json::num(v));
    o.add("vector", std::move(vec));
  }
  o.add("violated", Json::num(w.violated));
  o.add("note", Json::str(w.note));
  return o;
}

}  // namespace

int cmd_analyze(const AnalyzeSpec& spec, std::ostream& out, std::ostream&) {
  if (spec.format != "json" && spec.format != "csv")
    throw DomainError("unknown format '" + spec.format + "'");
  if (spec.kmax < 0) throw DomainError("--kmax must be nonnegative");

  std::string id;
  const Graph g = graph_from_spec(spec.graph, &id);

  SurveyOptions so;
  so.gamma_k_max = spec.kmax;
  so.zero_tol = spec.tol;
  BoundReport r = survey(g, so);
  r.id = id;

  const SymMatrix a = g.adjacency();
  EigenOptions eo;
  eo.zero_tol = spec.tol;
  const SpectralSummary sum = summarize(a, eo);
  const SpectralCounts counts = spectral_counts(a);

  std::vector<EqualityCertificate> certs;
  if (auto c = match_bipartite_union(g)) certs.push_back(*c);
  if (auto c = match_clique_matching_union(g)) certs.push_back(*c);
  if (auto c = certify_equal_moduli(sum.spectrum)) certs.push_back(*c);
  if (auto c = certify_unit_moduli(sum.spectrum)) certs.push_back(*c);
  const auto wit = find_strictness_witness(a);
  const std::string g6 = write_graph6(g);

  if (spec.format == "csv") {
    std::string cert = "none";
    if (!certs.empty()) cert = to_string(certs.front().kind);
    out << csv_line(kRowHeader);
    out << csv_line(report_row(1, g6, r,
                               cert, wit ? to_string(wit->kind) : "none"));
    return 0;
  }

  Json root = Json::object();
  root.add("id", Json::str(r.id));
  root.add("graph6", Json::str(g6));
  root.add("n", Json::integer(r.n));
  root.add("m", Json::integer(r.m));
  root.add("kappa", Json::integer(r.kappa));
  root.add("rho", Json::num(r.rho));
  root.add("energy", Json::num(r.energy_value));
  Json bounds = Json::array();
  for (const BoundEntry& e : r.entries) {
    Json b = Json::object();
    b.add("name", Json::str(e.name));
    b.add("applicable", Json::boolean(e.applicable));
    b.add("value", e.value ? Json::num(*e.value) : Json::null());
    const auto gap = r.gap(e.name);
    b.add("gap", gap ? Json::num(*gap) : Json::null());
    b.add("note", Json::str(e.note));
    bounds.push(std::move(b));
  }
  root.add("bounds", std::move(bounds));
  root.add("winner", r.winner.empty() ? Json::null() : Json::str(r.winner));
  Json cj = Json::object();
  cj.add("applicable", Json::boolean(counts.applicable));
  cj.add("minus_one",
         counts.applicable ? Json::integer(counts.minus_one) : Json::null());
  cj.add("plus_one",
         counts.applicable ? Json::integer(counts.plus_one) : Json::null());
  cj.add("kappa", counts.applicable ? Json::integer(counts.kappa) : Json::null());
  cj.add("note", Json::str(counts.note));
  root.add("counts", std::move(cj));
  Json certs_j = Json::array();
  for (const EqualityCertificate& c : certs) certs_j.push(certificate_json(c));
  root.add("certificates", std::move(certs_j));
  root.add("witness", wit ? witness_json(*wit) : Json::null());
  out << root.dump();
  return 0;
}

int cmd_survey(std::istream& in, const SurveySpec& spec, std::ostream& out,
               std::ostream& diag) {
  if (spec.kmax < 0) throw DomainError("--kmax must be nonnegative");

  out << csv_line(kRowHeader);
  std::map<std::string, long> tally;
  long rows = 0, errors = 0, line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      const Graph g = parse_graph6(line);
      SurveyOptions so;
      so.gamma_k_max = spec.kmax;
      so.zero_tol = spec.tol;
      const BoundReport r = survey(g, so);
      const SymMatrix a = g.adjacency();
      EigenOptions eo;
      eo.zero_tol = spec.tol;
      const Spectrum s = eigen_symmetric(a, eo);
      const auto wit = find_strictness_witness(a);
      out << csv_line(report_row(line_no, line, r, certificate_column(g, s),
                                 wit ? to_string(wit->kind) : "none"));
      ++rows;
      ++tally[r.winner.empty() ? "none" : r.winner];
    } catch (const ParseError& e) {
      if (spec.strict) {
        diag << "line " << line_no << ": " << e.what() << "\n";
        return 2;
      }
      out << csv_line(error_row(line_no, line, e.what()));
      ++errors;
    } catch (const Error& e) {
      out << csv_line(error_row(line_no, line, e.what()));
      ++errors;
    }
  }
  diag << "survey: " << rows << " rows, " << errors << " errors; winners:";
  for (const char* name : kBoundNames) diag << " " << name << "=" << tally[name];
  diag << " none=" << tally["none"] << "\n";
  return 0;
}

namespace {

int case_tree(const CaseStudySpec& spec, std::ostream& out) {
  if (spec.n_min < 4 || spec.n_max > 60 || spec.n_min > spec.n_max)
    throw DomainError("tree study needs 4 <= n-min <= n-max <= 60");
  out << csv_line({"n", "m", "kappa", "caporossi", "nullity_frobenius",
                   "predicted_winner", "observed_winner", "agree"});
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    const Graph g = make_broom(n);
    const BoundReport r = survey(g);
    const double cap = *r.find("caporossi")->value;
    const double nf = *r.find("nullity_frobenius")->value;
    const long lhs = long(n - 1) * (n - 1);
    const long rhs = 36L * (n - 3);
    const std::string predicted = lhs <= rhs ? "nullity_frobenius" : "caporossi";
    const std::string observed = nf > cap ? "nullity_frobenius" : "caporossi";
    out << csv_line({std::to_string(n), std::to_string(r.m),
                     std::to_string(r.kappa), format_double(cap),
                     format_double(nf), predicted, observed,
                     predicted == observed ? "yes" : "no"});
  }
  return 0;
}

int case_join(const CaseStudySpec& spec, std::ostream& out) {
  if (spec.r1_max < 1 || spec.r1_max > 10 || spec.r2_max < 1 ||
      spec.r2_max > 10)
    throw DomainError("join study needs radii between 1 and 10");
  out << csv_line({"r1", "r2", "n", "m", "lhs", "rhs", "caporossi",
                   "nullity_frobenius", "predicted_winner", "observed_winner",
                   "agree", "spectrum_ok"});
  for (int r1 = 1; r1 <= spec.r1_max; ++r1)
    for (int r2 = 1; r2 <= spec.r2_max; ++r2) {
      const Graph g = join(make_complete_bipartite(r1, r1),
                           make_complete_bipartite(r2, r2));
      const BoundReport r = survey(g);
      const double cap = *r.find("caporossi")->value;
      const double nf = *r.find("nullity_frobenius")->value;
      const double lhs = double(r1) * r1 + double(r2) * r2;
      const double rhs = double(r1) * r2 * (6.0 * std::sqrt(3.0) - 4.0);
      const std::string predicted =
          lhs <= rhs ? "nullity_frobenius" : "caporossi";
      const std::string observed = nf > cap ? "nullity_frobenius" : "caporossi";

      // The block decomposition pins the whole spectrum; check it.
      std::vector<double> expected(std::size_t(r.n), 0.0);
      const double disc =
          std::sqrt(double(r1 - r2) * (r1 - r2) + 16.0 * r1 * r2);
      expected[0] = (double(r1 + r2) + disc) / 2.0;
      expected[1] = (double(r1 + r2) - disc) / 2.0;
      expected[2] = double(-r1);
      expected[3] = double(-r2);
      std::sort(expected.begin(), expected.end(), std::greater<>());
      const Spectrum s = eigen_symmetric(g.adjacency());
      bool spectrum_ok = true;
      for (std::size_t i = 0; i < expected.size(); ++i)
        if (std::abs(s.values[i] - expected[i]) >
            1e-7 * std::max(1.0, std::abs(expected[i])))
          spectrum_ok = false;

      out << csv_line({std::to_string(r1), std::to_string(r2),
                       std::to_string(r.n), std::to_string(r.m),
                       format_double(lhs), format_double(rhs),
                       format_double(cap), format_double(nf), predicted,
                       observed, predicted == observed ? "yes" : "no",
                       spectrum_ok ? "yes" : "no"});
    }
  return 0;
}

int case_blowup(const CaseStudySpec& spec, std::ostream& out) {
  if (spec.t_max < 1 || spec.t_max > 4)
    throw DomainError("blowup study needs 1 <= t-max <= 4");
  std::string id;
  const Graph g = graph_from_spec(spec.base, &id);
  const SpectralSummary base = summarize(g.adjacency());
  const BoundReport base_report = survey(g);
  const BoundEntry* base_nf = base_report.find("nullity_frobenius");

  out << csv_line({"t", "n", "m", "kappa", "kappa_expected", "kappa_ok",
                   "energy", "energy_expected", "energy_ok", "abs_upsilon",
                   "abs_upsilon_expected", "upsilon_ok", "caporossi",
                   "nullity_frobenius", "frobenius_scales_ok"});
  for (int t = 1; t <= spec.t_max; ++t) {
    const Graph h = blowup(g, t);
    const BoundReport r = survey(h);
    const SpectralSummary sum = summarize(h.adjacency());

    const long kappa_expected = long(g.order()) * (t - 1) + base.kappa;
    const bool kappa_ok = long(r.kappa) == kappa_expected;

    const double energy_expected = double(t) * base.energy_value;
    const bool energy_ok =
        std::abs(r.energy_value - energy_expected) <=
        1e-7 * std::max(1.0, energy_expected);

    const double ups_expected =
        std::pow(double(t), double(base.n - base.kappa)) *
        base.abs_upsilon_rank;
    const double ups_tol = (sum.upsilon_exact && base.upsilon_exact) ? 1e-9 : 1e-6;
    const bool ups_ok = std::abs(sum.abs_upsilon_rank - ups_expected) <=
                        ups_tol * std::max(1.0, ups_expected);

    const BoundEntry* nf = r.find("nullity_frobenius");
    bool scales_ok = false;
    std::string nf_cell = "NA";
    if (nf && nf->applicable && base_nf && base_nf->applicable) {
      const double want = double(t) * *base_nf->value;
      scales_ok = std::abs(*nf->value - want) <= 1e-9 * std::max(1.0, want);
      nf_cell = format_double(*nf->value);
    } else if ((!nf || !nf->applicable) && (!base_nf || !base_nf->applicable)) {
      scales_ok = true;
    }

    const BoundEntry* cap = r.find("caporossi");
    out << csv_line(
        {std::to_string(t), std::to_string(r.n), std::to_string(r.m),
         std::to_string(r.kappa), std::to_string(kappa_expected),
         kappa_ok ? "yes" : "no", format_double(r.energy_value),
         format_double(energy_expected), energy_ok ? "yes" : "no",
         format_double(sum.abs_upsilon_rank), format_double(ups_expected),
         ups_ok ? "yes" : "no",
         cap && cap->applicable ? format_double(*cap->value) : "NA", nf_cell,
         scales_ok ? "yes" : "no"});
  }
  return 0;
}

}  // namespace

int cmd_case_study(const CaseStudySpec& spec, std::ostream& out,
                   std::ostream&) {
  if (spec.which == "tree") return case_tree(spec, out);
  if (spec.which == "join") return case_join(spec, out);
  if (spec.which == "blowup") return case_blowup(spec, out);
  throw DomainError("unknown case study '" + spec.which +
                    "'; known: tree, join, blowup");
}

}  // namespace genergy::cli
