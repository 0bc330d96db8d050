#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "planted/cli.hpp"
#include "planted/error.hpp"
#include "planted/families.hpp"
#include "planted/moments.hpp"
#include "planted/risk.hpp"
#include "planted/sweep.hpp"

using namespace planted;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "planted_lab_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("risk of trivial detectors") {
  const ModelParams params{12, 0.8, 0.2, make_family(parse_family("clique:3"))};
  const RiskEstimate always = estimate_risk([](const Observation&, Rng&) { return true; }, params, 200, 1);
  CHECK(always.type1 == 1.0);
  CHECK(always.type2 == 0.0);
  CHECK(always.risk == 1.0);
  const RiskEstimate never = estimate_risk([](const Observation&, Rng&) { return false; }, params, 200, 1);
  CHECK(never.type1 == 0.0);
  CHECK(never.type2 == 1.0);
  const RiskEstimate coin = estimate_risk([](const Observation&, Rng& rng) { return rng.bernoulli(0.5); }, params, 4000, 1);
  CHECK(std::abs(coin.risk - 1.0) <= coin.ci_halfwidth);
  const RiskEstimate coin4 =
      estimate_risk([](const Observation&, Rng& rng) { return rng.bernoulli(0.5); }, params, 4000, 1, 4);
  CHECK(coin.risk == coin4.risk);
}

TEST_CASE("estimated risks stay above the moment lower bounds") {
  const Graph tri = make_family(parse_family("clique:3"));
  for (auto [n, p_tenths, q_tenths] : {std::tuple{8, 9, 3}, std::tuple{10, 7, 4}, std::tuple{10, 10, 2}}) {
    const double p = p_tenths / 10.0;
    const double q = q_tenths / 10.0;
    const ModelParams params{static_cast<std::size_t>(n), p, q, tri};
    const Rational lambda_sq = chi_square_bernoulli(make_rational(p_tenths, 10), make_rational(q_tenths, 10));
    const double second = second_moment_exact({params.n, lambda_sq, tri}).value;
    const RiskLowerBounds bounds = risk_lower_bounds(second, p, q, tri.edge_count());
    for (DetectorKind kind : {DetectorKind::Count, DetectorKind::Degree, DetectorKind::Scan, DetectorKind::Likelihood}) {
      const RiskEstimate r = estimate_risk(make_detector(kind, params), params, 1000, 3);
      INFO(to_string(kind) << " n=" << n << " p=" << p << " q=" << q);
      CHECK(r.risk >= bounds.sm_bound - 4 * r.ci_halfwidth);
      CHECK(r.risk >= bounds.tv_edge_bound - 4 * r.ci_halfwidth);
    }
  }
}

TEST_CASE("sweep grid") {
  SweepSpec spec;
  spec.detector = DetectorKind::Count;
  spec.family = "clique:{}";
  spec.sizes = {3, 4};
  spec.ns = {10, 20};
  spec.ps = {0.9};
  spec.qs = {0.3};
  spec.trials = 50;
  spec.seed = 4;
  const auto rows = sweep_grid(spec);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].family == "clique:3");
  CHECK(rows[0].n == 10);
  CHECK(rows[1].n == 20);
  CHECK(rows[2].family == "clique:4");
  for (const auto& row : rows) {
    CHECK(row.error.empty());
    CHECK(row.estimate.has_value());
  }

  spec.detector = DetectorKind::Scan;
  spec.family = "clique:3";
  spec.sizes.clear();
  spec.ns = {8, 10, 12, 60};
  spec.config.scan_copy_budget = 5000;
  const auto mixed = sweep_grid(spec);
  REQUIRE(mixed.size() == 4);
  CHECK(std::count_if(mixed.begin(), mixed.end(), [](const SweepRow& r) { return r.error.empty(); }) == 3);
  CHECK_FALSE(mixed[3].error.empty());
  CHECK_FALSE(mixed[3].estimate.has_value());

  SweepSpec betas = spec;
  betas.detector = DetectorKind::Degree;
  betas.family = "star:{}";
  betas.betas = {0.5};
  betas.ns = {100};
  const auto star_rows = sweep_grid(betas);
  REQUIRE(star_rows.size() == 1);
  CHECK(star_rows[0].family == "star:10");

  SweepSpec empty = spec;
  empty.ns.clear();
  CHECK_THROWS_AS(sweep_grid(empty), Error);
}

TEST_CASE("CSV output is reproducible without timing") {
  SweepSpec spec;
  spec.detector = DetectorKind::Degree;
  spec.family = "star:{}";
  spec.sizes = {4, 8};
  spec.ns = {30};
  spec.ps = {0.9, 1.0};
  spec.qs = {0.1};
  spec.trials = 40;
  spec.seed = 11;
  spec.record_timing = false;
  std::ostringstream a;
  std::ostringstream b;
  write_csv(a, sweep_grid(spec));
  spec.threads = 3;
  write_csv(b, sweep_grid(spec));
  CHECK(a.str() == b.str());
  const auto rows = lines(a.str());
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == csv_header());
}

TEST_CASE("CLI stats") {
  const CliRun run = cli({"stats", "--family", "clique:4"});
  CHECK(run.code == kExitOk);
  CHECK(lines(run.out).at(0) == "|v|=4 |e|=6 d_max=3 mu=3/2 tau=3 aut=24");
  const CliRun big = cli({"stats", "--family", "path:12"});
  CHECK(big.code == kExitOk);
  CHECK(lines(big.out).at(0) == "|v|=13 |e|=12 d_max=2 mu=12/13 tau=6 aut=?");

  const auto path = scratch("k4.txt");
  CHECK(cli({"gen", "--family", "clique:4", "--out", path.string()}).code == kExitOk);
  const CliRun from_file = cli({"stats", "--graph", path.string()});
  CHECK(lines(from_file.out).at(0) == "|v|=4 |e|=6 d_max=3 mu=3/2 tau=3 aut=24");
}

TEST_CASE("CLI moment, ldp, decompose and classify") {
  const CliRun exact = cli({"moment", "--family", "clique:3", "--n", "6", "--lambda-sq", "1", "--method", "exact"});
  CHECK(exact.code == kExitOk);
  // E[2^{C(H,2)}] for H ~ Hypergeometric(6,3,3): (1 + 9 + 9·2 + 1·8)/20 = 9/5.
  CHECK(lines(exact.out).at(0) == "method=exact_subgraph_sum value=9/5 float=1.8");
  const CliRun all = cli({"moment", "--family", "clique:3", "--n", "6", "--lambda-sq", "1", "--method", "all", "--trials", "500"});
  CHECK(all.code == kExitOk);
  CHECK(lines(all.out).size() == 3);
  const CliRun ldp = cli({"ldp", "--family", "clique:3", "--n", "6", "--lambda-sq", "1", "--degree", "3"});
  CHECK(lines(ldp.out).at(0) == "degree=3 ldp_norm_sq=9/5 float=1.8");
  const CliRun dec = cli({"decompose", "--family", "unbalanced_stars:16", "--parts", "2"});
  CHECK(dec.code == kExitOk);
  CHECK(lines(dec.out).size() == 3);
  const CliRun sparse = cli({"classify", "--regime", "sparse", "--exponents", "1,0.5,2,1,1"});
  CHECK(lines(sparse.out).at(0) == "stat_lower=0.666667 stat_upper=0.75 comp_lower=0.75");
  const CliRun superdense = cli({"classify", "--regime", "superdense", "--alpha", "1"});
  CHECK(lines(superdense.out).at(0) == "threshold=0.75");
  const CliRun dense = cli({"classify", "--family", "clique:60", "--n", "1000", "--p", "0.9", "--q", "0.1",
                             "--tau-budget", "64"});
  CHECK(dense.code == kExitOk);
  CHECK(dense.out.rfind("verdict=", 0) == 0);
}

TEST_CASE("CLI sample, detect and risk") {
  const auto obs = scratch("obs.txt");
  CHECK(cli({"sample", "--family", "clique:4", "--hypothesis", "planted", "--n", "12", "--p", "1", "--q", "0.1",
             "--seed", "5", "--out", obs.string()})
            .code == kExitOk);
  const std::string text = slurp(obs);
  CHECK(text.rfind("# planted copy:", 0) == 0);
  const CliRun detect = cli({"detect", "--family", "clique:4", "--obs", obs.string(), "--p", "1", "--q", "0.1",
                             "--detector", "scan"});
  CHECK(detect.code == kExitOk);
  CHECK(detect.out.find("decision=1") != std::string::npos);
  CHECK(detect.out.find("statistic=6") != std::string::npos);

  const auto again = scratch("obs2.txt");
  cli({"sample", "--family", "clique:4", "--hypothesis", "planted", "--n", "12", "--p", "1", "--q", "0.1", "--seed",
       "5", "--out", again.string()});
  CHECK(slurp(again) == text);

  const CliRun risk = cli({"risk", "--detector", "count", "--family", "clique:20", "--n", "100", "--p", "0.9", "--q",
                           "0.2", "--trials", "50", "--seed", "7"});
  CHECK(risk.code == kExitOk);
  CHECK(risk.out.rfind("detector=count family=clique:20 n=100 p=0.9 q=0.2 trials=50 seed=7 ", 0) == 0);
}

TEST_CASE("CLI sweep CSV is byte-identical across runs") {
  const std::vector<std::string> args = {"sweep", "--detector", "degree", "--family", "star:{}", "--sizes", "3,6",
                                         "--n", "30", "--p", "0.9", "--q", "0.1,0.2", "--trials", "30", "--seed",
                                         "2", "--no-timing"};
  const CliRun a = cli(args);
  const CliRun b = cli(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(lines(a.out).size() == 5);
}

TEST_CASE("CLI exit codes") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"bogus"}).code == kExitUsage);
  CHECK(cli({"stats", "--family", "wheel:3"}).code == kExitUsage);
  CHECK(cli({"stats"}).code == kExitUsage);
  CHECK(cli({"stats", "--graph", "/nonexistent/file"}).code == kExitUsage);
  CHECK(cli({"risk", "--family", "clique:3", "--n", "10", "--p", "0.5", "--q", "0.9"}).code == kExitUsage);
  CHECK(cli({"risk", "--detector", "scan", "--scan-budget", "10", "--family", "clique:3", "--n", "30", "--p", "0.9",
             "--q", "0.1", "--trials", "5"})
            .code == kExitBudget);
  CHECK(cli({"classify", "--family", "clique:60", "--n", "1000", "--p", "0.9", "--q", "0.1"}).code == kExitBudget);
  CHECK(cli({"stats", "--family", "clique:4", "--help"}).code == kExitOk);
}
