#include "planted/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "planted/decomposition.hpp"
#include "planted/detectors.hpp"
#include "planted/error.hpp"
#include "planted/families.hpp"
#include "planted/moments.hpp"
#include "planted/risk.hpp"
#include "planted/stats.hpp"
#include "planted/sweep.hpp"
#include "planted/thresholds.hpp"

namespace planted {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::string graph_path;
  std::string family;
  std::string out_path;
  std::uint64_t trials = 100;
  unsigned threads = 1;
};

std::string fmt(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", x);
  return buffer;
}

Graph load_pattern(const Globals& g) {
  if (!g.graph_path.empty() && !g.family.empty()) {
    fail(ErrorCode::InvalidArgument, "give either --graph or --family, not both");
  }
  if (!g.graph_path.empty()) return read_edge_list_file(g.graph_path);
  if (!g.family.empty()) return make_family(parse_family(g.family));
  fail(ErrorCode::InvalidArgument, "a pattern is required (--graph <file> or --family <spec>)");
}

std::string pattern_label(const Globals& g) { return g.family.empty() ? g.graph_path : g.family; }

// Writes to --out when given, otherwise to `out`.
template <class Write>
void emit(const Globals& g, std::ostream& out, Write&& write) {
  if (g.out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(g.out_path);
  if (!file) fail(ErrorCode::InvalidArgument, "cannot write '" + g.out_path + "'");
  write(file);
}

void require_set(bool set, const char* flag) {
  if (!set) fail(ErrorCode::InvalidArgument, std::string("missing required option ") + flag);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planted subgraph detection laboratory", "planted_lab"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--graph", g.graph_path, "Pattern graph edge-list file");
  app.add_option("--family", g.family, "Pattern family, e.g. clique:4");
  app.add_option("--out", g.out_path, "Output file");
  app.add_option("--trials", g.trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");

  // Options shared by several subcommands.
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<double> q;
  std::string detector_name = "count";
  DetectorConfig dcfg;

  auto* stats = app.add_subcommand("stats", "Print graph invariants");
  std::size_t aut_budget = kDefaultAutomorphismBudget;
  std::size_t tau_budget = VertexCoverOptions{}.max_vertices;
  stats->add_option("--aut-budget", aut_budget, "Largest graph whose automorphisms are counted");

  auto* gen = app.add_subcommand("gen", "Write the pattern as an edge list");

  auto* sample = app.add_subcommand("sample", "Draw one observation");
  std::string hypothesis = "null";
  sample->add_option("--hypothesis", hypothesis, "null or planted")->check(CLI::IsMember({"null", "planted"}));
  for (auto* sub : {sample}) {
    sub->add_option("--n", n, "Number of vertices");
    sub->add_option("--p", p, "Edge probability inside the planted copy");
    sub->add_option("--q", q, "Background edge probability");
  }

  auto* detect = app.add_subcommand("detect", "Run a detector on an observation file");
  std::string obs_path;
  detect->add_option("--obs", obs_path, "Observation edge-list file")->required();

  auto* risk = app.add_subcommand("risk", "Estimate Type I + Type II risk");

  auto* sweep = app.add_subcommand("sweep", "Risk over a parameter grid, as CSV");
  std::vector<std::size_t> sizes;
  std::vector<double> betas;
  std::vector<std::size_t> ns;
  std::vector<double> ps;
  std::vector<double> qs;
  bool no_timing = false;
  sweep->add_option("--sizes", sizes, "Values substituted for {} in the family")->delimiter(',');
  sweep->add_option("--betas", betas, "Exponents; {} becomes floor(n^beta)")->delimiter(',');
  sweep->add_option("--n", ns, "List of n")->delimiter(',')->required();
  sweep->add_option("--p", ps, "List of p")->delimiter(',')->required();
  sweep->add_option("--q", qs, "List of q")->delimiter(',')->required();
  sweep->add_flag("--no-timing", no_timing, "Write elapsed_ms as 0");

  for (auto* sub : {detect, risk}) {
    sub->add_option("--n", n, "Number of vertices");
    sub->add_option("--p", p, "Edge probability inside the planted copy");
    sub->add_option("--q", q, "Background edge probability");
  }
  for (auto* sub : {detect, risk, sweep}) {
    sub->add_option("--detector", detector_name, "count, degree, scan, scan_full or lrt");
    sub->add_option("--kappa-weight", dcfg.scan_kappa_weight, "Scan threshold weight on q");
    sub->add_option("--scan-budget", dcfg.scan_copy_budget, "Largest number of copies scanned");
    sub->add_flag("--optimized-degree", dcfg.optimized_degree_threshold, "Use the reduced degree threshold");
  }

  auto* moment = app.add_subcommand("moment", "Second moment of the likelihood ratio");
  std::string lambda_text;
  std::string method = "exact";
  moment->add_option("--method", method, "exact, mgf, mc or all")->check(CLI::IsMember({"exact", "mgf", "mc", "all"}));
  auto* ldp = app.add_subcommand("ldp", "Low-degree norm ||L_{<=D}||^2");
  std::size_t degree = 0;
  ldp->add_option("--degree", degree, "Polynomial degree D")->required();
  for (auto* sub : {moment, ldp}) {
    sub->add_option("--n", n, "Number of vertices")->required();
    sub->add_option("--lambda-sq", lambda_text, "chi-square signal strength, e.g. 1/2 or 0.25")->required();
  }

  auto* decompose = app.add_subcommand("decompose", "Degree-layered decomposition");
  std::size_t parts = 2;
  decompose->add_option("--parts", parts, "Number of parts M")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Regime classification and thresholds");
  for (auto* sub : {stats, decompose, classify}) {
    sub->add_option("--tau-budget", tau_budget, "Largest reduced component for the exact vertex cover");
  }
  std::string regime = "dense";
  std::optional<double> alpha;
  std::optional<double> sigma;
  std::optional<double> beta_degree;
  std::optional<double> c_lower;
  std::optional<double> c_upper;
  double epsilon = 0.05;
  std::vector<double> exponents;
  classify->add_option("--regime", regime, "dense, critical, sparse or superdense")
      ->check(CLI::IsMember({"dense", "critical", "sparse", "superdense"}));
  classify->add_option("--n", n, "Number of vertices");
  classify->add_option("--p", p, "Edge probability inside the planted copy");
  classify->add_option("--q", q, "Background edge probability");
  classify->add_option("--alpha", alpha, "Exponent of q (critical) or of chi-square (superdense)");
  classify->add_option("--sigma", sigma, "q = sigma/n when alpha = 1");
  classify->add_option("--beta-degree", beta_degree, "d_max = |v|^beta (polynomial-degree case)");
  classify->add_option("--c-lower", c_lower, "Override the lower density constant");
  classify->add_option("--c-upper", c_upper, "Override the upper density constant");
  classify->add_option("--epsilon", epsilon, "Margin on every boundary");
  classify->add_option("--exponents", exponents, "alpha,beta,epsilon,delta,zeta")->delimiter(',')->expected(5);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (stats->parsed()) {
      const Graph pattern = load_pattern(g);
      StatsOptions opts;
      opts.with_automorphisms = pattern.vertex_count() <= aut_budget;
      opts.automorphism_budget = aut_budget;
      opts.vertex_cover.max_vertices = tau_budget;
      const GraphStats s = graph_stats(pattern, opts);
      out << "|v|=" << s.num_vertices << " |e|=" << s.num_edges << " d_max=" << s.max_degree
          << " mu=" << to_string(s.max_subgraph_density) << " tau=" << s.vertex_cover_number
          << " aut=" << (s.automorphism_count ? s.automorphism_count->str() : std::string("?")) << '\n';
      out << "density=" << to_string(s.density) << " components=" << s.num_components
          << " mu_float=" << fmt(to_double(s.max_subgraph_density)) << '\n';
      return kExitOk;
    }
    if (gen->parsed()) {
      const Graph pattern = load_pattern(g);
      emit(g, out, [&](std::ostream& o) { write_edge_list(o, pattern); });
      return kExitOk;
    }
    if (sample->parsed()) {
      require_set(n.has_value(), "--n");
      require_set(q.has_value(), "--q");
      Rng rng = stream(g.seed, 0);
      if (hypothesis == "null") {
        const Observation obs = sample_null(*n, *q, rng);
        emit(g, out, [&](std::ostream& o) { write_observation(o, obs); });
        return kExitOk;
      }
      require_set(p.has_value(), "--p");
      const ModelParams params{*n, *p, *q, load_pattern(g)};
      const PlantedSample s = sample_planted(params, rng);
      emit(g, out, [&](std::ostream& o) {
        o << "# planted copy:";
        for (Vertex v : s.copy.vertex_map) o << ' ' << v;
        o << '\n';
        write_observation(o, s.observation);
      });
      return kExitOk;
    }
    if (detect->parsed()) {
      require_set(p.has_value(), "--p");
      require_set(q.has_value(), "--q");
      std::ifstream file(obs_path);
      if (!file) fail(ErrorCode::ParseError, "cannot open '" + obs_path + "'");
      const Observation obs = read_observation(file);
      if (n && *n != obs.vertex_count()) fail(ErrorCode::InvalidArgument, "--n does not match the observation");
      const ModelParams params{obs.vertex_count(), *p, *q, load_pattern(g)};
      Verdict v;
      switch (parse_detector(detector_name)) {
        case DetectorKind::Count:
          v = count_test(obs, params);
          break;
        case DetectorKind::Degree:
          v = degree_test(obs, params, dcfg);
          break;
        case DetectorKind::Scan:
          v = scan_test(obs, params, dcfg);
          break;
        case DetectorKind::ScanFull: {
          DetectorConfig full = dcfg;
          full.scan_full_pattern = true;
          v = scan_test(obs, params, full);
          break;
        }
        case DetectorKind::Likelihood:
          v = likelihood_ratio_test(obs, params);
          break;
      }
      out << "detector=" << detector_name << " decision=" << (v.decision ? 1 : 0) << " statistic=" << fmt(v.statistic)
          << " threshold=" << fmt(v.threshold) << '\n';
      return kExitOk;
    }
    if (risk->parsed()) {
      require_set(n.has_value(), "--n");
      require_set(p.has_value(), "--p");
      require_set(q.has_value(), "--q");
      const ModelParams params{*n, *p, *q, load_pattern(g)};
      const DetectorKind kind = parse_detector(detector_name);
      const RiskEstimate r = estimate_risk(make_detector(kind, params, dcfg), params, g.trials, g.seed, g.threads);
      out << "detector=" << to_string(kind) << " family=" << pattern_label(g) << " n=" << *n << " p=" << fmt(*p)
          << " q=" << fmt(*q) << " trials=" << g.trials << " seed=" << g.seed << " type1=" << fmt(r.type1)
          << " type2=" << fmt(r.type2) << " risk=" << fmt(r.risk) << " ci=" << fmt(r.ci_halfwidth) << '\n';
      return kExitOk;
    }
    if (sweep->parsed()) {
      SweepSpec spec;
      spec.detector = parse_detector(detector_name);
      spec.family = g.family;
      require_set(!spec.family.empty(), "--family");
      spec.sizes = sizes;
      spec.betas = betas;
      spec.ns = ns;
      spec.ps = ps;
      spec.qs = qs;
      spec.trials = g.trials;
      spec.seed = g.seed;
      spec.threads = g.threads;
      spec.config = dcfg;
      spec.record_timing = !no_timing;
      const auto rows = sweep_grid(spec);
      emit(g, out, [&](std::ostream& o) { write_csv(o, rows); });
      return kExitOk;
    }
    if (moment->parsed() || ldp->parsed()) {
      const MomentParams mp{*n, parse_rational(lambda_text), load_pattern(g)};
      auto print_exact = [&](const MomentResult& r) {
        out << "method=" << to_string(r.method) << " value=" << to_string(*r.exact) << " float=" << fmt(r.value)
            << '\n';
      };
      if (ldp->parsed()) {
        const MomentResult r = ldp_norm_sq(mp, LdpConfig{degree});
        out << "degree=" << degree << " ldp_norm_sq=" << to_string(*r.exact) << " float=" << fmt(r.value) << '\n';
        return kExitOk;
      }
      if (method == "exact" || method == "all") print_exact(second_moment_exact(mp));
      if (method == "mgf" || method == "all") print_exact(exact_intersection_mgf(mp));
      if (method == "mc" || method == "all") {
        Rng rng = stream(g.seed, 0);
        const MomentResult r = second_moment_mc(mp, g.trials, rng, g.threads);
        out << "method=" << to_string(r.method) << " value=" << fmt(r.value) << " std_error=" << fmt(*r.std_error)
            << " trials=" << g.trials << '\n';
      }
      return kExitOk;
    }
    if (decompose->parsed()) {
      const Graph pattern = load_pattern(g);
      const Decomposition d = vcd_decompose(pattern, parts);
      const double bound = 2.0 * static_cast<double>(pattern.edge_count()) *
                           std::pow(static_cast<double>(pattern.max_degree()), 1.0 / static_cast<double>(parts));
      for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const Graph& part = d.parts[i];
        const std::size_t tau = vertex_cover_number(part, VertexCoverOptions{tau_budget});
        out << "part=" << i + 1 << " edges=" << part.edge_count() << " cover_size=" << d.covers[i].size()
            << " tau=" << tau << " d_max=" << part.max_degree() << " product=" << tau * part.max_degree()
            << " bound=" << fmt(bound) << '\n';
      }
      if (pattern.edge_count() >= 2) {
        out << "balance_ratio=" << fmt(vcd_balance_ratio(pattern, VertexCoverOptions{tau_budget})) << '\n';
      }
      return kExitOk;
    }
    if (classify->parsed()) {
      if (regime == "sparse") {
        if (exponents.size() != 5) fail(ErrorCode::InvalidArgument, "--exponents needs alpha,beta,epsilon,delta,zeta");
        const PolyFamilyExponents e{exponents[0], exponents[1], exponents[2], exponents[3], exponents[4]};
        for (const auto& note : consistency_warnings(e)) err << "warning: " << note << '\n';
        const SparseThresholds t = sparse_thresholds(e);
        out << "stat_lower=" << fmt(t.stat_lower) << " stat_upper=" << fmt(t.stat_upper)
            << " comp_lower=" << fmt(t.comp_lower) << '\n';
        return kExitOk;
      }
      if (regime == "superdense") {
        require_set(alpha.has_value(), "--alpha");
        out << "threshold=" << fmt(superdense_threshold(*alpha)) << '\n';
        return kExitOk;
      }
      require_set(n.has_value(), "--n");
      const Graph pattern = load_pattern(g);
      StatsOptions opts;
      opts.with_automorphisms = false;
      opts.vertex_cover.max_vertices = tau_budget;
      const GraphStats s = graph_stats(pattern, opts);
      RegimeVerdict v;
      if (regime == "dense") {
        require_set(p.has_value(), "--p");
        require_set(q.has_value(), "--q");
        DenseConstants c = default_dense_constants(s, *p, *q);
        if (c_lower) c.c_lower = *c_lower;
        if (c_upper) c.c_upper = *c_upper;
        c.epsilon = epsilon;
        v = classify_dense(s, *n, chi_square_bernoulli(*p, *q), c);
      } else {
        require_set(alpha.has_value(), "--alpha");
        v = critical_classify(s, *n, *alpha, sigma, beta_degree, epsilon);
      }
      out << "verdict=" << to_string(v.verdict) << " boundary=" << v.binding_boundary << " margin=" << fmt(v.margin)
          << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_budget() ? kExitBudget : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace planted
