#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "planted/error.hpp"
#include "planted/families.hpp"
#include "planted/isomorphism.hpp"
#include "planted/moments.hpp"

using namespace planted;

namespace {

Graph family(const char* spec) { return make_family(parse_family(spec)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

Graph k4_with_pendant() { return from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

}  // namespace

TEST_CASE("Bernoulli chi-square divergence") {
  CHECK(chi_square_bernoulli(0.9, 0.5) == Catch::Approx(0.64));
  CHECK(chi_square_bernoulli(0.5, 0.5) == 0.0);
  CHECK(chi_square_bernoulli(make_rational(9, 10), make_rational(1, 2)) == make_rational(16, 25));
  CHECK(code_of([] { chi_square_bernoulli(0.5, 0.0); }) == ErrorCode::DegenerateQ);
  CHECK(code_of([] { chi_square_bernoulli(make_rational(1), make_rational(1)); }) == ErrorCode::DegenerateQ);
}

TEST_CASE("intersection counts match enumeration") {
  for (const Graph& gamma : {family("clique:3"), family("path:3"), family("star:3"), family("matching:2"), k4_with_pendant()}) {
    for (std::size_t n = gamma.vertex_count(); n <= 7; ++n) {
      const auto counts = intersection_counts_exact(gamma, n);
      std::vector<BigInt> expected(gamma.edge_count() + 1, 0);
      for (const auto& copy : oracle::copies_in_complete(gamma, n)) {
        std::size_t shared = 0;
        for (const Edge& e : copy) shared += gamma.has_edge(e.u, e.v) ? 1 : 0;
        ++expected[shared];
      }
      REQUIRE(counts == expected);
    }
  }
}

TEST_CASE("clique intersection law") {
  for (std::size_t k = 2; k <= 5; ++k) {
    for (std::size_t n : {k, k + 1, 2 * k, 3 * k}) {
      const Graph clique = family(("clique:" + std::to_string(k)).c_str());
      const auto counts = intersection_counts_exact(clique, n);
      const auto law = oracle::clique_intersection_law(n, k);
      const BigInt total = copies_in_complete(clique, n);
      for (std::size_t a = 0; a < law.size(); ++a) REQUIRE(Rational(counts[a], total) == law[a]);
    }
  }
}

TEST_CASE("subgraph sum equals the intersection generating function") {
  const Rational lambda_sq = make_rational(3, 4);
  for (const Graph& gamma : {family("clique:3"), family("clique:4"), family("path:3"), family("star:4"),
                             family("matching:3"), family("complete_bipartite:2,3"), k4_with_pendant()}) {
    for (std::size_t n : {gamma.vertex_count(), gamma.vertex_count() + 1, gamma.vertex_count() + 3}) {
      const MomentParams mp{n, lambda_sq, gamma};
      const MomentResult sum = second_moment_exact(mp);
      const MomentResult mgf = exact_intersection_mgf(mp);
      REQUIRE(sum.exact.has_value());
      REQUIRE(mgf.exact.has_value());
      REQUIRE(*sum.exact == *mgf.exact);
      REQUIRE(sum.method == MomentMethod::ExactSubgraphSum);
      REQUIRE(mgf.method == MomentMethod::ExactIntersectionMgf);
      REQUIRE(sum.value == Catch::Approx(to_double(*sum.exact)));
      if (n <= 7) REQUIRE(*sum.exact == oracle::intersection_mgf(gamma, n, lambda_sq));
    }
  }
}

TEST_CASE("second moment is monotone") {
  const Graph gamma = family("path:3");
  Rational previous = 1;
  for (int i = 1; i <= 6; ++i) {
    const Rational value = *second_moment_exact({8, make_rational(i, 3), gamma}).exact;
    REQUIRE(value > previous);
    previous = value;
  }
  previous = *second_moment_exact({4, make_rational(1), gamma}).exact;
  for (std::size_t n = 5; n <= 14; ++n) {
    const Rational value = *second_moment_exact({n, make_rational(1), gamma}).exact;
    REQUIRE(value < previous);
    REQUIRE(value > 1);
    previous = value;
  }
  CHECK(*second_moment_exact({8, make_rational(0), gamma}).exact == 1);
}

TEST_CASE("low-degree norms") {
  const MomentParams mp{9, make_rational(1, 2), family("clique:4")};
  const Rational full = *second_moment_exact(mp).exact;
  CHECK(*ldp_norm_sq(mp, {0}).exact == 1);
  Rational previous = 1;
  for (std::size_t d = 1; d <= 6; ++d) {
    const Rational value = *ldp_norm_sq(mp, {d}).exact;
    REQUIRE(value >= previous);
    previous = value;
  }
  CHECK(previous == full);
  CHECK(*ldp_norm_sq(mp, {50}).exact == full);
  // Degree 1 only sees single edges: 1 + λ²·|e|·P[edge ⊆ Γ].
  CHECK(*ldp_norm_sq(mp, {1}).exact == 1 + make_rational(1, 2) * 6 * make_rational(6, 36));
}

TEST_CASE("Monte Carlo second moment") {
  const MomentParams mp{12, make_rational(2), family("clique:4")};
  const double exact = second_moment_exact(mp).value;
  Rng rng(31);
  const MomentResult mc = second_moment_mc(mp, 200000, rng);
  REQUIRE(mc.std_error.has_value());
  CHECK(mc.method == MomentMethod::MonteCarlo);
  CHECK_FALSE(mc.exact.has_value());
  CHECK(std::abs(mc.value - exact) <= 4 * *mc.std_error);

  Rng a(5);
  Rng b(5);
  const auto h1 = intersection_distribution(family("path:3"), 10, 5000, a, 1);
  const auto h3 = intersection_distribution(family("path:3"), 10, 5000, b, 3);
  CHECK(h1.counts == h3.counts);
  CHECK(h1.trials == 5000);
  Rng c(1);
  CHECK(code_of([&] { second_moment_mc(mp, 1, c); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("enumeration budgets") {
  CHECK(code_of([] { second_moment_exact({10, make_rational(1), make_family(parse_family("clique:7"))}); }) ==
        ErrorCode::BudgetExceeded);
}

TEST_CASE("risk lower bounds") {
  const RiskLowerBounds one = risk_lower_bounds(1.0, 0.6, 0.5, 3);
  CHECK(one.sm_bound == Catch::Approx(1.0));
  CHECK(one.tv_edge_bound == Catch::Approx(0.7));
  const RiskLowerBounds two = risk_lower_bounds(2.0, 0.9, 0.1, 3);
  CHECK(two.sm_bound == Catch::Approx(0.5));
  CHECK(two.tv_edge_bound == 0.0);
  CHECK(risk_lower_bounds(100.0, 0.9, 0.1, 3).sm_bound == Catch::Approx(1.0 / 200));
  CHECK(code_of([] { risk_lower_bounds(0.5, 0.9, 0.1, 3); }) == ErrorCode::InvalidMoment);
}
