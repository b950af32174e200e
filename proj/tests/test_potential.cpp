#include <doctest.h>

#include "gnls/calculus.hpp"
#include "gnls/generator.hpp"
#include "gnls/potential.hpp"
#include "support.hpp"

using namespace gnls;
using gnls::testing::random_connected_graph;
using gnls::testing::two_vertex;

namespace {

// Origin "o" with μ(O) = 1 and deg(O) = 2 on a three-vertex path a–o–b.
WeightedGraph degree_two_origin() {
  return WeightedGraph::build({{{"o", 1}, {"a", 1}, {"b", 1}}, {{"o", "a", 1}, {"o", "b", 1}}});
}

}  // namespace

TEST_CASE("check_c3: examples") {
  auto g = degree_two_origin();
  auto holds = check_c3(g, VertexFunction({0.1, 1.0, 1.0}), "o", 3.0, 1.0);
  CHECK(holds.rhs == doctest::Approx(1.0 / 9.0));
  CHECK(holds.lhs == 0.1);
  CHECK(holds.holds);
  CHECK_FALSE(holds.note.empty());
  CHECK_FALSE(check_c3(g, VertexFunction({0.2, 1.0, 1.0}), "o", 3.0, 1.0).holds);

  auto t = ball_from_generator(lattice_1d(), "0", 4);
  CHECK(check_c3(t.graph, t.h, "0", 3.0, 10.0).holds);
  CHECK_FALSE(check_c3(t.graph, t.h, "0", 3.0, 1.0).holds);
  CHECK(check_c3(t.graph, t.h, "0", 3.0, 9.0 + 1e-9).holds);
  CHECK_FALSE(check_c3(t.graph, t.h, "0", 3.0, 9.0 - 1e-9).holds);
}

TEST_CASE("check_c3 and jphi: errors") {
  auto lonely = WeightedGraph::build({{{"o", 1}, {"a", 1}}, {}});
  const VertexFunction h({1.0, 1.0});
  try {
    check_c3(lonely, h, "o", 3.0, 1.0);
    FAIL("isolated origin accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IsolatedOrigin);
  }
  CHECK_THROWS_AS(jphi(lonely, h, "o", 3.0), Error);
  auto g = degree_two_origin();
  CHECK_THROWS_AS(check_c3(g, VertexFunction({1.0, 1.0, 1.0}), "o", 2.0, 1.0), Error);
  CHECK_THROWS_AS(jphi(g, VertexFunction({1.0, 1.0, 1.0}), "o", 1.0), Error);
  CHECK_THROWS_AS(phi_test(g, VertexFunction({1.0, 1.0, 1.0}), "x"), Error);
}

TEST_CASE("phi_test") {
  auto g = degree_two_origin();
  const VertexFunction h({0.1, 1.0, 1.0});
  auto phi = phi_test(g, h, "o");
  CHECK(phi[0] == doctest::Approx(3.1623).epsilon(1e-4));
  CHECK(phi[1] == 0.0);
  CHECK(phi[2] == 0.0);
  CHECK(phi_test(g, VertexFunction({1.0, 1.0, 1.0}), "o")[0] == 1.0);

  std::mt19937_64 rng(4);
  for (int k = 0; k < 50; ++k) {
    auto r = random_connected_graph(rng, 10);
    auto hr = gnls::testing::random_function(rng, r, 0.1, 10.0);
    auto f = phi_test(r, hr, r.id(3));
    CHECK(std::abs(weighted_mass(r, f, &hr) - 1.0) <= 1e-14);
  }
}

TEST_CASE("jphi: closed form") {
  auto g = degree_two_origin();
  CHECK(jphi(g, VertexFunction({0.05, 1.0, 1.0}), "o", 3.0) ==
        doctest::Approx(std::pow(0.05, -1.5) / 3.0 - 20.0).epsilon(1e-12));
  CHECK(jphi(g, VertexFunction({0.05, 1.0, 1.0}), "o", 3.0) == doctest::Approx(9.814).epsilon(1e-4));
  CHECK(jphi(g, VertexFunction({1.0, 1.0, 1.0}), "o", 3.0) == doctest::Approx(-2.0 / 3.0));

  std::mt19937_64 rng(6);
  for (int k = 0; k < 50; ++k) {
    auto r = random_connected_graph(rng, 8);
    auto h = gnls::testing::random_function(rng, r, 0.1, 5.0);
    const double p = gnls::testing::uniform(rng, 2.2, 5.0);
    const double m = gnls::testing::uniform(rng, 0.1, 10.0);
    auto phi = phi_test(r, h, r.id(0));
    for (auto& x : phi) x *= std::sqrt(m);
    CHECK(jphi(r, h, r.id(0), p, m) == doctest::Approx(energy_components(r, phi, p).potential()).epsilon(1e-12));
  }
}

TEST_CASE("maximize_constrained: two-vertex closed form") {
  auto g = two_vertex();
  const auto s = maximize_constrained(g, {VertexFunction({1.0, 1.0}), "a", 3.0, 1.0});
  CHECK(s.u[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(s.u[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(s.energy == doctest::Approx(std::sqrt(2.0) / 6.0).epsilon(1e-12));
  CHECK(s.lambda == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("maximize_constrained: lattice contract") {
  auto t = ball_from_generator(lattice_1d(), "0", 12);
  const double m = 10.0;
  SolverOptions o;
  o.keep_trace = true;
  const auto s = maximize_constrained(t.graph, {t.h, "0", 3.0, m}, o);
  CHECK(s.converged);
  CHECK(std::abs(s.mass - m) <= 1e-12 * m);
  for (double x : s.u) CHECK(x > 0.0);
  CHECK(s.energy > 0.0);
  CHECK(s.lambda >= 2.0 / m * s.energy);
  CHECK(s.energy >= jphi(t.graph, t.h, "0", 3.0, m));
  CHECK(el_residual(t.graph, s.u, s.lambda, &t.h, 3.0) <= 1e-8);
  for (std::size_t i = 1; i < s.energy_trace.size(); ++i)
    CHECK(s.energy_trace[i] >= s.energy_trace[i - 1] - 1e-14 * std::abs(s.energy_trace[i - 1]));
  // ‖v_m‖∞ <= (μ_min h₀)^{−1/2}
  CHECK(sup_norm(s.rescaled) <= 1.0);
}

TEST_CASE("property: bound sandwich and multiplier positivity") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 15; ++k) {
    auto g = random_connected_graph(rng, std::uniform_int_distribution<int>(3, 10)(rng), 0.5, 2.0);
    auto h = gnls::testing::random_function(rng, g, 0.05, 2.0);
    const double p = gnls::testing::uniform(rng, 2.5, 4.0);
    SolverOptions o;
    o.restarts = 4;
    const auto s = maximize_constrained(g, {h, g.id(0), p, 1.0}, o);
    CHECK(s.energy <= lambda1_upper_bound(g, h, p) * (1.0 + 1e-12));
    const double jp = jphi(g, h, g.id(0), p);
    if (jp > 0.0) CHECK(s.energy >= jp * (1.0 - 1e-12));
    if (s.energy > 0.0) CHECK(s.lambda > 0.0);
    CHECK(std::abs(s.mass - 1.0) <= 1e-12);
  }
}

TEST_CASE("property: mass m equals √m times the 𝒥_m problem at mass 1") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 10; ++k) {
    auto g = random_connected_graph(rng, std::uniform_int_distribution<int>(3, 8)(rng), 0.5, 2.0);
    auto h = gnls::testing::random_function(rng, g, 0.5, 3.0);
    const double m = std::pow(10.0, gnls::testing::uniform(rng, -1.0, 1.5));
    const double p = 3.0;
    SolverOptions rescaled, direct;
    rescaled.tolerance = direct.tolerance = 1e-12;
    direct.formulation = Formulation::Direct;
    const auto a = maximize_constrained(g, {h, g.id(0), p, m}, rescaled);
    const auto b = maximize_constrained(g, {h, g.id(0), p, m}, direct);
    CHECK(a.energy == doctest::Approx(b.energy).epsilon(1e-8));
    // 𝒥_m(v) = (m^{p/2}/p)∫|v|^p − (m/2)∫|∇v|² evaluated on the unit-mass iterate.
    const auto e = energy_components(g, a.rescaled, p);
    const double jm = std::pow(m, p / 2.0) * e.nonlinear - m * e.kinetic;
    CHECK(jm == doctest::Approx(a.energy).epsilon(1e-10));
  }
}

TEST_CASE("truncation_study") {
  GeneratorProblem prob{lattice_1d(), "0", 3.0, 10.0};
  const int radii[] = {8, 16, 32};
  const auto r = truncation_study(prob, radii);
  REQUIRE(r.center_deltas.size() == 2);
  CHECK(r.c3.holds);
  CHECK(r.c2.holds());
  for (double d : r.center_deltas) CHECK(d <= 1e-6);
  CHECK(r.solutions.size() == 3);

  const int same[] = {8, 8};
  CHECK_THROWS_AS(truncation_study(prob, same), Error);

  GeneratorProblem weak{lattice_1d(), "0", 3.0, 1.0};
  const int small[] = {4, 8};
  const auto w = truncation_study(weak, small);
  CHECK_FALSE(w.c3.holds);
  CHECK(w.solutions.size() == 2);

  GeneratorProblem flat{lattice_1d({1.0, 0.0, 1.0}), "0", 3.0, 10.0};
  CHECK_THROWS_AS(truncation_study(flat, small), Error);
}

TEST_CASE("check_c2_sampled") {
  auto grow = ball_from_generator(lattice_2d({0.5, 1.0, 2.0}), "0,0", 4);
  auto c2 = check_c2_sampled(grow);
  CHECK(c2.holds());
  CHECK(c2.h0 == 0.5);
  CHECK(c2.shell_min.size() == 5);
}
