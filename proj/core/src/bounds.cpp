#include "genergy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "genergy/errors.hpp"

namespace genergy {

namespace {

constexpr double kSoundnessScale = 1e-9;
constexpr double kCountIntegerTol = 1e-6;
constexpr double kCountMatchTol = 1e-6;
constexpr double kTraceTolScale = 1e-9;

double scale_of(double x) { return std::max(1.0, x); }

double abs_det_from(const SpectralSummary& s) {
  return s.kappa > 0 ? 0.0 : s.abs_upsilon_rank;
}

std::optional<double> nullity_frobenius_from(const SpectralSummary& s) {
  if (s.kappa >= s.n) return std::nullopt;
  return frobenius_type_bound(s.frobenius_sq, s.n - s.kappa,
                              s.abs_upsilon_rank);
}

std::optional<double> nullity_log_from(const SpectralSummary& s) {
  if (s.kappa >= s.n || s.rho <= 0.0 || s.abs_upsilon_rank <= 0.0)
    return std::nullopt;
  return log_type_bound(s.rho, s.n, s.kappa, s.abs_upsilon_rank);
}

std::optional<double> mu_log_from(const SpectralSummary& s, double mu) {
  if (s.kappa >= s.n || s.abs_upsilon_rank <= 0.0) return std::nullopt;
  if (mu < 1.0) return std::nullopt;
  return log_type_bound(mu, s.n, s.kappa, s.abs_upsilon_rank);
}

}  // namespace

double energy(const Spectrum& s) {
  double e = 0.0;
  for (int i = 0; i < s.order(); ++i)
    if (!s.zero_mask[i]) e += std::abs(s.values[i]);
  return e;
}

SpectralSummary summarize(const SymMatrix& m, const EigenOptions& opts) {
  SpectralSummary sum;
  sum.spectrum = eigen_symmetric(m, opts);
  sum.n = m.order();
  sum.kappa = sum.spectrum.nullity();
  sum.frobenius_sq = sum.spectrum.source_frobenius_sq;
  sum.rho = sum.spectrum.values.empty() ? 0.0 : sum.spectrum.values.front();
  sum.energy_value = energy(sum.spectrum);
  if (sum.kappa < sum.n) {
    if (m.integer_exact()) {
      try {
        sum.abs_upsilon_rank = std::abs(upsilon(m, sum.n - sum.kappa));
        sum.upsilon_exact = true;
      } catch (const OverflowError&) {
        sum.abs_upsilon_rank = std::abs(upsilon_rank(sum.spectrum));
      }
    } else {
      sum.abs_upsilon_rank = std::abs(upsilon_rank(sum.spectrum));
    }
  }
  return sum;
}

double frobenius_type_bound(double frob_sq, int n_minus_kappa,
                            double abs_upsilon) {
  if (n_minus_kappa < 1)
    throw DomainError("Frobenius-type bound needs at least one nonzero "
                      "eigenvalue");
  if (frob_sq < 0.0 || abs_upsilon < 0.0)
    throw DomainError("Frobenius-type bound needs nonnegative inputs");
  const double r = double(n_minus_kappa);
  return std::sqrt(frob_sq + r * (r - 1.0) * std::pow(abs_upsilon, 2.0 / r));
}

double log_type_bound(double mu, int n, int kappa, double abs_upsilon) {
  if (mu <= 0.0)
    throw DomainError("log-type bound needs a positive mean parameter");
  if (abs_upsilon <= 0.0)
    throw DomainError("log-type bound needs a nonzero rank product");
  if (kappa < 0 || kappa >= n)
    throw DomainError("log-type bound needs 0 <= kappa < n");
  return mu + double(n - kappa - 1) + std::log(abs_upsilon) - std::log(mu);
}

std::optional<double> bound_caporossi(const Graph& g) {
  if (g.size() < 1) return std::nullopt;
  return 2.0 * std::sqrt(double(g.size()));
}

double bound_mcclelland(const Graph& g) {
  const SpectralSummary s = summarize(g.adjacency());
  return frobenius_type_bound(s.frobenius_sq, s.n, abs_det_from(s));
}

std::optional<double> bound_nullity_frobenius(const SymMatrix& m) {
  return nullity_frobenius_from(summarize(m));
}

std::optional<double> bound_nullity_frobenius(const Graph& g) {
  return nullity_frobenius_from(summarize(g.adjacency()));
}

std::optional<double> bound_nullity_log(const SymMatrix& m) {
  return nullity_log_from(summarize(m));
}

std::optional<double> bound_nullity_log(const Graph& g) {
  return nullity_log_from(summarize(g.adjacency()));
}

std::optional<double> bound_rayleigh_log(const SymMatrix& m,
                                         std::span<const double> x) {
  for (double v : x)
    if (v < 0.0)
      throw DomainError("test vector must be nonnegative entrywise");
  const double mu = rayleigh(m, x);
  return mu_log_from(summarize(m), mu);
}

std::optional<double> bound_component_log(const Graph& g,
                                          const Component& component) {
  const int n1 = component.graph.order();
  if (n1 < 2) return std::nullopt;
  const double mu = 2.0 * double(component.graph.size()) / double(n1);
  return mu_log_from(summarize(g.adjacency()), mu);
}

SpectralCounts spectral_counts(const SymMatrix& m) {
  SpectralCounts out;
  const SpectralSummary s = summarize(m);
  const int n = s.n;

  double tr = 0.0;
  for (int i = 0; i < n; ++i) tr += m(i, i);
  const bool trace_ok = m.integer_exact()
                            ? tr == 0.0
                            : std::abs(tr) <= kTraceTolScale *
                                                  scale_of(std::sqrt(s.frobenius_sq));
  if (!trace_ok) {
    out.note = "trace is nonzero";
    return out;
  }
  if (s.rho < 1.0 - 1e-8) {
    out.note = "largest eigenvalue is below 1";
    return out;
  }

  const double c_raw = (s.frobenius_sq - s.rho * s.rho + s.rho) / 2.0;
  const double f_raw = (s.frobenius_sq - s.rho * s.rho - s.rho) / 2.0;
  const double k_raw = double(n) - 1.0 + s.rho * s.rho - s.frobenius_sq;
  const double c_round = std::nearbyint(c_raw);
  const double f_round = std::nearbyint(f_raw);
  const double k_round = std::nearbyint(k_raw);
  if (std::abs(c_raw - c_round) > kCountIntegerTol ||
      std::abs(f_raw - f_round) > kCountIntegerTol ||
      std::abs(k_raw - k_round) > kCountIntegerTol) {
    out.note = "recovered counts are not integers";
    return out;
  }
  if (c_round < 0.0 || f_round < 0.0 || k_round < 0.0 ||
      c_round + f_round + k_round != double(n - 1)) {
    out.note = "recovered counts do not partition the spectrum";
    return out;
  }

  int c_direct = 0, f_direct = 0;
  for (int i = 0; i < n; ++i) {
    if (s.spectrum.zero_mask[i]) continue;
    const double v = s.spectrum.values[i];
    if (std::abs(v + 1.0) <= kCountMatchTol) ++c_direct;
    if (i > 0 && std::abs(v - 1.0) <= kCountMatchTol) ++f_direct;
  }
  if (c_direct != int(c_round) || f_direct != int(f_round) ||
      s.kappa != int(k_round)) {
    out.note = "counts disagree with the spectrum; the +-1 profile does "
               "not hold";
    return out;
  }

  out.minus_one = int(c_round);
  out.plus_one = int(f_round);
  out.kappa = int(k_round);
  out.applicable = true;
  return out;
}

namespace {

void check_gamma_input(const Graph& g) {
  if (g.order() < 2)
    throw DomainError("gamma iteration needs at least two vertices");
  if (components(g).size() != 1)
    throw DomainError("gamma iteration needs a connected graph");
}

// One multiply of the normalized iteration: w = A v, then v = w / max(w).
// Returns ||A v|| / ||v|| before the normalization.
double gamma_step(const Graph& g, std::vector<double>& v,
                  std::vector<double>& w) {
  const int n = g.order();
  double nv = 0.0;
  for (double x : v) nv += x * x;
  double nw = 0.0;
  double mx = 0.0;
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j : g.neighbors(i)) sum += v[std::size_t(j)];
    w[std::size_t(i)] = sum;
    nw += sum * sum;
    mx = std::max(mx, std::abs(sum));
  }
  for (int i = 0; i < n; ++i) v[std::size_t(i)] = w[std::size_t(i)] / mx;
  return std::sqrt(nw / nv);
}

}  // namespace

std::vector<double> gamma_sequence(const Graph& connected, int k_max) {
  check_gamma_input(connected);
  if (k_max < 0) throw DomainError("gamma depth must be nonnegative");
  const int n = connected.order();
  std::vector<double> v(std::size_t(n), 1.0), w(std::size_t(n), 0.0);
  // The first step advances the all-ones d_0 to the degree vector d_1;
  // its ratio is not part of the published chain, which starts at
  // gamma^(1) = ||d_2|| / ||d_1||.
  (void)gamma_step(connected, v, w);
  std::vector<double> out;
  out.reserve(std::size_t(k_max));
  for (int k = 1; k <= k_max; ++k) out.push_back(gamma_step(connected, v, w));
  return out;
}

GammaLimit gamma_limit(const Graph& connected, int k_max, double stall_tol) {
  check_gamma_input(connected);
  if (k_max < 1) throw DomainError("gamma depth must be positive");
  if (stall_tol < 0.0) throw DomainError("stall tolerance must be nonnegative");
  const int n = connected.order();
  std::vector<double> v(std::size_t(n), 1.0), w(std::size_t(n), 0.0);
  (void)gamma_step(connected, v, w);
  double prev = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const double gamma = gamma_step(connected, v, w);
    if (k > 1 && std::abs(gamma - prev) < stall_tol)
      return GammaLimit{gamma, k, true};
    prev = gamma;
  }
  return GammaLimit{prev, k_max, false};
}

std::optional<double> bound_gamma_log(const Graph& g,
                                      const Component& component, int k) {
  if (k < 0) throw DomainError("gamma depth must be nonnegative");
  if (component.graph.order() < 2) return std::nullopt;
  const SpectralSummary s = summarize(g.adjacency());
  if (s.kappa >= s.n || s.abs_upsilon_rank <= 0.0) return std::nullopt;
  const std::vector<double> gs = gamma_sequence(component.graph, k);
  return log_type_bound(gs.back(), s.n, s.kappa, s.abs_upsilon_rank);
}

const BoundEntry* BoundReport::find(std::string_view name) const {
  for (const BoundEntry& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::optional<double> BoundReport::gap(std::string_view name) const {
  const BoundEntry* e = find(name);
  if (!e || !e->applicable || !e->value) return std::nullopt;
  return energy_value - *e->value;
}

BoundReport survey(const Graph& g, const SurveyOptions& opts) {
  const int n = g.order();
  if (n < 1) throw DomainError("survey needs at least one vertex");
  if (opts.gamma_k_max < 0) throw DomainError("gamma depth must be nonnegative");

  EigenOptions eo;
  eo.zero_tol = opts.zero_tol;
  const SpectralSummary s = summarize(g.adjacency(), eo);

  BoundReport r;
  r.n = n;
  r.m = g.size();
  r.kappa = s.kappa;
  r.rho = s.rho;
  r.energy_value = s.energy_value;

  const bool zero_matrix = s.kappa >= s.n;
  bool isolated = false;
  for (int i = 0; i < n; ++i)
    if (g.degree(i) == 0) isolated = true;

  const auto add = [&r](const char* name, std::optional<double> value,
                        std::string note) {
    BoundEntry e;
    e.name = name;
    e.value = value;
    e.applicable = value.has_value();
    e.note = std::move(note);
    r.entries.push_back(std::move(e));
  };

  add("caporossi", bound_caporossi(g), g.size() < 1 ? "no edges" : "");

  if (n == 1 && zero_matrix) {
    // Order-1 zero matrix: every bound is refused outright.
    add("mcclelland", std::nullopt, "zero matrix of order 1");
  } else {
    add("mcclelland", frobenius_type_bound(s.frobenius_sq, n, abs_det_from(s)),
        "");
  }

  const char* no_rank = "all eigenvalues are zero";
  add("nullity_frobenius", nullity_frobenius_from(s),
      zero_matrix ? no_rank
                  : (isolated ? "isolated vertices present; the graph form "
                                "is stated without them"
                              : ""));
  add("nullity_log", nullity_log_from(s),
      zero_matrix ? no_rank : (s.rho <= 0.0 ? "largest eigenvalue is zero" : ""));

  {
    const double mu = 2.0 * double(g.size()) / double(n);
    auto value = mu_log_from(s, mu);
    std::string note = "all-ones test vector";
    if (!value && !zero_matrix && mu < 1.0) note = "mean degree below 1";
    if (zero_matrix) note = no_rank;
    add("rayleigh_log", value, std::move(note));
  }

  const std::vector<Component> comps = components(g);

  {
    std::optional<double> best;
    int best_n1 = 0, best_m1 = 0;
    for (const Component& c : comps) {
      if (c.graph.order() < 2) continue;
      const double mu = 2.0 * double(c.graph.size()) / double(c.graph.order());
      const auto v = mu_log_from(s, mu);
      if (v && (!best || *v > *best)) {
        best = v;
        best_n1 = c.graph.order();
        best_m1 = c.graph.size();
      }
    }
    std::string note;
    if (best)
      note = "best component: n1=" + std::to_string(best_n1) +
             ", m1=" + std::to_string(best_m1);
    else
      note = zero_matrix ? no_rank : "no component with an edge";
    add("component_log", best, std::move(note));
  }

  {
    std::optional<double> value;
    std::string note;
    if (zero_matrix) {
      note = no_rank;
    } else {
      // Follow the component carrying the largest eigenvalue; the bound
      // itself is valid for any component with an edge.
      const Component* carrier = nullptr;
      double carrier_rho = -1.0;
      for (const Component& c : comps) {
        if (c.graph.order() < 2) continue;
        const Spectrum cs = eigen_symmetric(c.graph.adjacency());
        if (cs.values.front() > carrier_rho + 1e-12) {
          carrier_rho = cs.values.front();
          carrier = &c;
        }
      }
      if (!carrier || s.abs_upsilon_rank <= 0.0) {
        note = carrier ? "rank product vanished" : "no component with an edge";
      } else if (opts.gamma_k_max < 1) {
        note = "gamma depth is zero";
      } else {
        const GammaLimit gl = gamma_limit(carrier->graph, opts.gamma_k_max);
        value = log_type_bound(gl.value, s.n, s.kappa, s.abs_upsilon_rank);
        note = "component of the largest eigenvalue, k=" +
               std::to_string(gl.steps) +
               (gl.converged ? " (stalled)" : " (depth cap)");
      }
    }
    add("gamma_log", value, std::move(note));
  }

  const double sound_tol = kSoundnessScale * scale_of(r.energy_value);
  for (const BoundEntry& e : r.entries) {
    if (!e.applicable) continue;
    if (*e.value > r.energy_value + sound_tol)
      throw Error("internal: bound " + e.name + " = " +
                  std::to_string(*e.value) + " exceeds energy " +
                  std::to_string(r.energy_value));
    if (r.winner.empty() || *e.value > *r.find(r.winner)->value)
      r.winner = e.name;
  }
  return r;
}

}  // namespace genergy
