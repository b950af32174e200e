#include <doctest.h>

#include "gnls/asymptotics.hpp"
#include "gnls/calculus.hpp"
#include "gnls/fixtures.hpp"
#include "gnls/generator.hpp"
#include "support.hpp"

using namespace gnls;
using gnls::testing::random_connected_graph;
using gnls::testing::two_vertex;

namespace {

ProblemSpec unweighted(double p) { return {p, 1.0, std::nullopt, std::nullopt}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

// Hand-made record whose rescaled function is `v`.
SweepRecord record(double m, VertexFunction v, double lambda, double rescaled_multiplier = 0.0) {
  SweepRecord r;
  r.m = m;
  r.rescaled = std::move(v);
  r.lambda_m = lambda;
  r.rescaled_multiplier = rescaled_multiplier;
  r.solution.converged = true;
  return r;
}

double p_integral(const WeightedGraph& g, const VertexFunction& v, double p) {
  return p * energy_components(g, v, p).nonlinear;
}

}  // namespace

TEST_CASE("log_spaced") {
  auto m = log_spaced(10.0, 1e-6, 8);
  REQUIRE(m.size() == 8);
  CHECK(m.front() == 10.0);
  CHECK(m.back() == 1e-6);
  for (std::size_t i = 1; i < m.size(); ++i) CHECK(m[i] / m[i - 1] == doctest::Approx(0.1));
  CHECK(log_spaced(2.0, 3.0, 1) == std::vector<double>{2.0});
  CHECK_THROWS_AS(log_spaced(0.0, 1.0, 3), Error);
  CHECK_THROWS_AS(log_spaced(1.0, 2.0, 0), Error);
}

TEST_CASE("mass_sweep: uniform six-vertex fixture stays constant") {
  auto f = load_fixture("g6-uniform");
  const auto masses = log_spaced(10.0, 1e-6, 15);
  const auto sweep = mass_sweep(f.graph, unweighted(3.0), masses);
  REQUIRE(sweep.size() == masses.size());
  for (const auto& r : sweep) {
    CHECK_FALSE(r.failed);
    CHECK(weighted_mass(f.graph, r.rescaled, nullptr) == doctest::Approx(1.0).epsilon(1e-10));
    for (double x : r.rescaled) CHECK(x == doctest::Approx(0.4082).epsilon(1e-3 / 0.4082));
  }
}

TEST_CASE("mass_sweep: two-vertex multiplier vanishes") {
  auto g = two_vertex();
  const auto sweep = mass_sweep(g, unweighted(3.0), log_spaced(1.0, 1e-6, 7));
  for (const auto& r : sweep) {
    CHECK(r.rescaled[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(r.lambda_m == doctest::Approx(std::sqrt(r.m) * p_integral(g, r.rescaled, 3.0)).epsilon(1e-10));
  }
  CHECK(sweep.back().lambda_m < 1e-3);
}

TEST_CASE("mass_sweep: input checks") {
  auto g = two_vertex();
  CHECK(mass_sweep(g, unweighted(3.0), std::vector<double>{}).empty());
  const std::vector<double> zigzag{1.0, 0.1, 0.5};
  CHECK(code_of([&] { mass_sweep(g, unweighted(3.0), zigzag); }) == ErrorCode::InvalidArgument);
  const std::vector<double> negative{1.0, -1.0};
  CHECK(code_of([&] { mass_sweep(g, unweighted(3.0), negative); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("mass_sweep: failures are recorded and the sweep continues") {
  auto t = ball_from_generator(lattice_1d(), "0", 4);
  ProblemSpec spec{3.0, 1.0, t.h, std::string("0")};
  SolverOptions o;
  o.max_iterations = 1;
  o.restarts = 2;
  const std::vector<double> masses{10.0, 20.0, 40.0};
  const auto sweep = mass_sweep(t.graph, spec, masses, o);
  REQUIRE(sweep.size() == 3);
  for (const auto& r : sweep) {
    CHECK(r.failed);
    CHECK_FALSE(r.error.empty());
    CHECK(r.rescaled.size() == t.graph.size());
  }
  CHECK(sweep[2].m == 40.0);
}

TEST_CASE("property: rescaled Euler-Lagrange equation along a sweep") {
  auto f = load_fixture("g6-table1");
  const double p = 3.0;
  const auto sweep = mass_sweep(f.graph, unweighted(p), log_spaced(1.0, 1e-4, 5));
  double previous = kInfinity;
  for (const auto& r : sweep) {
    const double forcing = std::pow(r.m, p / 2.0 - 1.0);
    const auto lap = laplacian(f.graph, r.rescaled);
    double res = 0.0;
    for (std::size_t x = 0; x < f.graph.size(); ++x)
      res = std::max(res, std::abs(-lap[x] + r.lambda_m * r.rescaled[x] - forcing * std::pow(r.rescaled[x], p - 1.0)));
    CHECK(res <= 1e-10);
    const double term = forcing * std::pow(sup_norm(r.rescaled), p - 1.0);
    CHECK(term < previous);
    previous = term;
  }
}

TEST_CASE("classify_small_mass_limit: constant branch") {
  auto f = load_fixture("g6-uniform");
  const auto sweep = mass_sweep(f.graph, unweighted(3.0), log_spaced(10.0, 1e-6, 25));
  const auto c = classify_small_mass_limit(f.graph, sweep, 3.0);
  CHECK(c.kind == LimitKind::Constant);
  CHECK(c.limit_multiplier == doctest::Approx(0.0));
  for (double x : c.limit_fn) CHECK(x == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-12));
  CHECK(std::abs(c.extrapolated_multiplier) <= 1e-6);
  CHECK(to_string(c.kind) == "constant");
}

TEST_CASE("classify_small_mass_limit: potential case tends to zero") {
  auto t = ball_from_generator(lattice_1d(), "0", 8);
  ProblemSpec spec{3.0, 1.0, t.h, std::string("0")};
  // v_m approaches its limit at rate m^{p/2−1}; settling to 1e−8 needs m near 1e−18.
  const auto sweep = mass_sweep(t.graph, spec, log_spaced(1.0, 1e-20, 21));
  for (const auto& r : sweep) CHECK(r.lambda_m >= 0.0);
  const auto c = classify_small_mass_limit(t.graph, sweep, 3.0, &t.h);
  CHECK(c.kind == LimitKind::Zero);
  CHECK(c.limit_multiplier <= 1e-8);
  CHECK(c.structure_error <= 1e-6);
  for (double x : c.limit_fn) CHECK(x == 0.0);
}

TEST_CASE("classify_small_mass_limit: eigenfunction branch on synthetic records") {
  // A sweep that follows the second eigenpair exactly; finite solvers never
  // produce it (the minimiser is positive), so the records are built by hand.
  std::mt19937_64 rng(77);
  auto g = random_connected_graph(rng, 7, 0.5, 2.0);
  const auto pairs = generalized_eigenpair(g);
  const auto& e = pairs[1];
  const double p = 3.0;
  const double vp = p_integral(g, e.v, p);
  std::vector<SweepRecord> sweep;
  for (double m : {1e-18, 1e-19, 1e-20}) {
    const double s = std::pow(m, p / 2.0 - 1.0);
    sweep.push_back(record(m, e.v, s * vp - e.lambda));
  }
  const auto c = classify_small_mass_limit(g, sweep, p);
  CHECK(c.kind == LimitKind::Eigenfunction);
  CHECK(c.limit_multiplier == doctest::Approx(e.lambda).epsilon(1e-10));
  CHECK(c.residual <= 1e-8);
  CHECK(c.eigen_match <= 1e-6);
  CHECK(std::abs(c.limit_multiplier + c.extrapolated_multiplier) <= 1e-6);

  // Same functions with multipliers offset from −λ₀.
  for (auto& r : sweep) r.lambda_m += 0.1;
  CHECK(code_of([&] { classify_small_mass_limit(g, sweep, p); }) == ErrorCode::InconsistentMultiplier);
}

TEST_CASE("classify_small_mass_limit: unsettled tails") {
  auto g = two_vertex();
  const VertexFunction c({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
  const VertexFunction d({0.8, 0.6});
  std::vector<SweepRecord> one{record(1e-3, c, 0.0)};
  CHECK(code_of([&] { classify_small_mass_limit(g, one, 3.0); }) == ErrorCode::SweepNotSettled);
  std::vector<SweepRecord> moving{record(1e-3, d, 0.0), record(1e-4, c, 0.0)};
  CHECK(code_of([&] { classify_small_mass_limit(g, moving, 3.0); }) == ErrorCode::SweepNotSettled);
  std::vector<SweepRecord> failed{record(1e-3, c, 0.0), record(1e-4, c, 0.0)};
  failed[1].failed = true;
  CHECK(code_of([&] { classify_small_mass_limit(g, failed, 3.0); }) == ErrorCode::SweepNotSettled);
  std::vector<SweepRecord> upward{record(1e-4, c, 0.0), record(1e-3, c, 0.0)};
  CHECK(code_of([&] { classify_small_mass_limit(g, upward, 3.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("classify_large_mass_limit: solver sweeps concentrate on one vertex") {
  for (const char* name : {"path3", "g6-uniform", "g6-table1"}) {
    auto f = load_fixture(name);
    const auto sweep = mass_sweep(f.graph, unweighted(3.0), log_spaced(1e2, 1e24, 12));
    const auto c = classify_large_mass_limit(f.graph, sweep, 3.0);
    CHECK(c.kind == LimitKind::SupportIndicator);
    CHECK(c.residual <= 1e-6);
    CHECK(c.structure_error <= 1e-4);
    REQUIRE(c.support.size() == 1);
    CHECK(c.limit_fn[c.support[0]] == doctest::Approx(1.0 / std::sqrt(f.graph.measure(c.support[0]))));
    CHECK(c.multiplier_gap <= 1e-6);
  }
}

TEST_CASE("classify_large_mass_limit: synthetic limits") {
  auto f = load_fixture("g6-uniform");
  const VertexFunction flat = VertexFunction::constant(f.graph, 1.0 / std::sqrt(6.0));
  const double lim = 1.0 / std::sqrt(6.0);
  std::vector<SweepRecord> sweep{record(1e20, flat, 0.0, lim), record(1e22, flat, 0.0, lim)};
  const auto c = classify_large_mass_limit(f.graph, sweep, 3.0);
  CHECK(c.kind == LimitKind::SupportIndicator);
  CHECK(c.support.size() == 6);
  CHECK(c.residual <= 1e-15);
  CHECK(c.structure_error <= 1e-15);
  CHECK(c.limit_fn[0] == doctest::Approx(0.4082).epsilon(1e-4));

  // Potential case with all mass at one vertex: λ∞ = w(a)^{p−2}/h(a).
  auto g = two_vertex(2.0, 1.0);
  const VertexFunction h({3.0, 5.0});
  const double wa = 1.0 / std::sqrt(2.0 * 3.0);
  const VertexFunction w({wa, 0.0});
  const double expect = wa / 3.0;
  std::vector<SweepRecord> pot{record(1e10, w, 0.0, expect), record(1e12, w, 0.0, expect)};
  const auto cp = classify_large_mass_limit(g, pot, 3.0, &h);
  CHECK(cp.limit_multiplier == doctest::Approx(expect).epsilon(1e-14));
  CHECK(cp.residual <= 1e-15);
  CHECK(cp.multiplier_gap <= 1e-14);
  CHECK(cp.structure_error <= 1e-14);
}

TEST_CASE("classify_large_mass_limit: potential sweep on a lattice") {
  auto t = ball_from_generator(lattice_1d(), "0", 6);
  ProblemSpec spec{3.0, 1.0, t.h, std::string("0")};
  const auto sweep = mass_sweep(t.graph, spec, log_spaced(1e2, 1e24, 12));
  const auto c = classify_large_mass_limit(t.graph, sweep, 3.0, &t.h);
  CHECK(c.kind == LimitKind::SupportIndicator);
  CHECK(c.residual <= 1e-6);
  CHECK(std::abs(c.limit_multiplier - c.extrapolated_multiplier) <= 1e-6);
}

TEST_CASE("generalized_eigenpair: examples") {
  auto g = two_vertex();
  auto pairs = generalized_eigenpair(g);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].lambda == doctest::Approx(0.0).scale(1.0));
  CHECK(pairs[1].lambda == doctest::Approx(2.0));
  CHECK(pairs[1].v[0] == doctest::Approx(-pairs[1].v[1]));
  CHECK(pairs[0].v[0] == doctest::Approx(pairs[0].v[1]));

  const VertexFunction h({1.0, 2.0});
  auto hp = generalized_eigenpair(g, &h);
  CHECK(hp[1].lambda == doctest::Approx(1.5));

  auto split = WeightedGraph::build({{{"a", 1}, {"b", 1}}, {}});
  CHECK(code_of([&] { generalized_eigenpair(split); }) == ErrorCode::DisconnectedGraph);
}

TEST_CASE("property: Rayleigh identity for every eigenpair") {
  std::mt19937_64 rng(88);
  for (int k = 0; k < 20; ++k) {
    auto g = random_connected_graph(rng, std::uniform_int_distribution<int>(2, 25)(rng));
    auto h = gnls::testing::random_function(rng, g, 0.1, 10.0);
    const bool with_h = k % 2 == 0;
    const auto pairs = generalized_eigenpair(g, with_h ? &h : nullptr);
    for (const auto& e : pairs) {
      const double hv2 = weighted_mass(g, e.v, with_h ? &h : nullptr);
      CHECK(hv2 == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(dirichlet(g, e.v) == doctest::Approx(e.lambda * hv2).epsilon(1e-10).scale(1.0));
    }
    CHECK(pairs.front().lambda == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
    for (std::size_t i = 1; i < pairs.size(); ++i) CHECK(pairs[i].lambda >= pairs[i - 1].lambda);
  }
}
