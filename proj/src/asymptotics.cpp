#include "gnls/asymptotics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "gnls/calculus.hpp"
#include "gnls/potential.hpp"

namespace gnls {

std::string_view to_string(LimitKind kind) noexcept {
  switch (kind) {
    case LimitKind::Constant: return "constant";
    case LimitKind::Eigenfunction: return "eigenfunction";
    case LimitKind::Zero: return "zero";
    case LimitKind::SupportIndicator: return "support-indicator";
  }
  return "unknown";
}

std::vector<double> log_spaced(double from, double to, int n) {
  if (!(from > 0.0) || !(to > 0.0)) throw Error(ErrorCode::InvalidArgument, "log-spaced endpoints must be > 0");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "need at least one point");
  if (n == 1) return {from};
  std::vector<double> out(static_cast<std::size_t>(n));
  const double a = std::log10(from);
  const double b = std::log10(to);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (n - 1));
  out.front() = from;
  out.back() = to;
  return out;
}

std::vector<SweepRecord> mass_sweep(const WeightedGraph& g, const ProblemSpec& spec, std::span<const double> masses,
                                    const SolverOptions& opts) {
  for (double m : masses)
    if (!(m > 0.0) || !std::isfinite(m)) throw Error(ErrorCode::InvalidArgument, "sweep masses must be > 0");
  if (masses.size() > 1) {
    const bool up = masses[1] > masses[0];
    for (std::size_t i = 1; i < masses.size(); ++i)
      if ((masses[i] > masses[i - 1]) != up || masses[i] == masses[i - 1])
        throw Error(ErrorCode::InvalidArgument, "sweep masses must be strictly monotone");
  }

  std::vector<SweepRecord> records;
  std::optional<VertexFunction> warm;
  for (double m : masses) {
    ProblemSpec at = spec;
    at.m = m;
    at.validate(g);
    SolverOptions o = opts;
    if (warm) {
      o.initial = InitialGuess::UserSupplied;
      o.user_initial = warm;
    }

    SweepRecord rec;
    rec.m = m;
    try {
      rec.solution = spec.h ? maximize_constrained(g, {*spec.h, spec.origin.value_or(g.id(0)), spec.p, m}, o)
                            : minimize_normalized(g, at, o);
    } catch (const NotConverged& e) {
      rec.solution = e.best();
      rec.failed = true;
      rec.error = e.what();
    }
    rec.rescaled = rec.solution.rescaled;
    rec.lambda_m = rec.solution.lambda;
    rec.rescaled_multiplier = rec.solution.rescaled_multiplier;
    if (!rec.failed) warm = rec.rescaled;
    records.push_back(std::move(rec));
  }
  return records;
}

namespace {

struct Tail {
  const SweepRecord* prev;
  const SweepRecord* last;
};

Tail settled_tail(const WeightedGraph& g, std::span<const SweepRecord> sweep, double p, bool decreasing,
                  const ClassifyOptions& opts) {
  require_exponent(p);
  if (sweep.size() < 2) throw Error(ErrorCode::SweepNotSettled, "need at least two records");
  Tail t{&sweep[sweep.size() - 2], &sweep[sweep.size() - 1]};
  if (t.prev->failed || t.last->failed) throw Error(ErrorCode::SweepNotSettled, "last two records must have converged");
  if (decreasing != (t.last->m < t.prev->m))
    throw Error(ErrorCode::InvalidArgument, decreasing ? "small-mass limit needs decreasing masses"
                                                       : "large-mass limit needs increasing masses");
  require_domain(g, t.last->rescaled, "rescaled solution");
  require_domain(g, t.prev->rescaled, "rescaled solution");

  double dv = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) dv = std::max(dv, std::abs(t.last->rescaled[x] - t.prev->rescaled[x]));
  if (!(dv < opts.settle_tolerance))
    throw Error(ErrorCode::SweepNotSettled, "last two rescaled functions differ by " + std::to_string(dv));
  return t;
}

// m^{p/2−1}∫|v_m|^p − λ_m; equals ∫|∇v_m|² dμ on a solution and tends to λ₀.
double kinetic_multiplier(const WeightedGraph& g, const SweepRecord& r, double p) {
  const double pint = p * energy_components(g, r.rescaled, p).nonlinear;
  return std::pow(r.m, p / 2.0 - 1.0) * pint - r.lambda_m;
}

// Value at s = 0 of the line through (s1, y1), (s2, y2).
double extrapolate_to_zero(double s1, double y1, double s2, double y2) {
  if (s1 == s2) return y2;
  return (y2 * s1 - y1 * s2) / (s1 - s2);
}

double nearest_eigenvalue(const WeightedGraph& g, const VertexFunction* h, double lambda) {
  double best = kInfinity;
  for (const auto& pair : generalized_eigenpair(g, h)) best = std::min(best, std::abs(pair.lambda - lambda));
  return best;
}

}  // namespace

LimitClassification classify_small_mass_limit(const WeightedGraph& g, std::span<const SweepRecord> sweep, double p,
                                              const VertexFunction* h, const ClassifyOptions& opts) {
  const Tail t = settled_tail(g, sweep, p, true, opts);
  const double k_prev = kinetic_multiplier(g, *t.prev, p);
  const double k_last = kinetic_multiplier(g, *t.last, p);
  if (!(std::abs(k_last - k_prev) < opts.settle_tolerance))
    throw Error(ErrorCode::SweepNotSettled, "multipliers still moving by " + std::to_string(std::abs(k_last - k_prev)));

  const VertexFunction& v = t.last->rescaled;
  LimitClassification out;
  out.tail = v;
  const double s1 = std::pow(t.prev->m, p / 2.0 - 1.0);
  const double s2 = std::pow(t.last->m, p / 2.0 - 1.0);
  out.extrapolated_multiplier = extrapolate_to_zero(s1, t.prev->lambda_m, s2, t.last->lambda_m);

  const double hv2 = weighted_mass(g, v, h);
  const double lambda0 = dirichlet(g, v) / hv2;
  const double c = 1.0 / std::sqrt(h ? integrate(g, *h) : g.volume());
  double dev = 0.0;
  for (double x : v) dev = std::max(dev, std::abs(x - c));

  const auto lap = laplacian(g, v);
  if (dev <= opts.constant_tolerance) {
    out.kind = h ? LimitKind::Zero : LimitKind::Constant;
    out.limit_fn = h ? VertexFunction::zeros(g) : VertexFunction::constant(g, c);
    out.limit_multiplier = lambda0;
    out.residual = sup_norm(lap);
    out.structure_error = h ? dev : 0.0;
  } else {
    out.kind = LimitKind::Eigenfunction;
    out.limit_fn = v;
    out.limit_multiplier = lambda0;
    double r = 0.0;
    for (std::size_t x = 0; x < g.size(); ++x) r = std::max(r, std::abs(-lap[x] - lambda0 * (h ? (*h)[x] : 1.0) * v[x]));
    out.residual = r;
    if (!(r <= opts.eigen_tolerance))
      throw Error(ErrorCode::SweepNotSettled, "tail misses the eigenvalue equation by " + std::to_string(r));
    if (!(lambda0 > 0.0)) throw Error(ErrorCode::SweepNotSettled, "non-constant tail with λ₀ <= 0");
    out.eigen_match = nearest_eigenvalue(g, h, lambda0);
  }

  out.multiplier_gap = std::abs(out.limit_multiplier + out.extrapolated_multiplier);
  if (!(out.multiplier_gap <= opts.multiplier_tolerance))
    throw Error(ErrorCode::InconsistentMultiplier,
                "λ₀ = " + std::to_string(out.limit_multiplier) + " but lim λ_m = " + std::to_string(out.extrapolated_multiplier));
  return out;
}

LimitClassification classify_large_mass_limit(const WeightedGraph& g, std::span<const SweepRecord> sweep, double p,
                                              const VertexFunction* h, const ClassifyOptions& opts) {
  const Tail t = settled_tail(g, sweep, p, false, opts);
  if (!(std::abs(t.last->rescaled_multiplier - t.prev->rescaled_multiplier) < opts.settle_tolerance))
    throw Error(ErrorCode::SweepNotSettled, "rescaled multipliers still moving");

  const VertexFunction& w = t.last->rescaled;
  LimitClassification out;
  out.tail = w;
  const double e1 = std::pow(t.prev->m, 1.0 - p / 2.0);
  const double e2 = std::pow(t.last->m, 1.0 - p / 2.0);
  out.extrapolated_multiplier = extrapolate_to_zero(e1, t.prev->rescaled_multiplier, e2, t.last->rescaled_multiplier);

  const double wp = p * energy_components(g, w, p).nonlinear;
  const double hw2 = weighted_mass(g, w, h);
  const double lambda_inf = wp / hw2;
  out.limit_multiplier = lambda_inf;
  out.multiplier_gap = std::abs(lambda_inf - out.extrapolated_multiplier);

  double r = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x)
    r = std::max(r, std::abs(signed_power(w[x], p) - lambda_inf * (h ? (*h)[x] : 1.0) * w[x]));
  out.residual = r;

  const double wmax = sup_norm(w);
  out.limit_fn = VertexFunction::zeros(g);
  if (!(wmax > 0.0)) {
    out.kind = LimitKind::Zero;
    return out;
  }
  out.kind = LimitKind::SupportIndicator;
  double mu_s = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (std::abs(w[x]) > opts.support_threshold * wmax) {
      out.support.push_back(x);
      mu_s += g.measure(x);
    }
  }
  for (std::size_t x : out.support) {
    // On S the limit equation forces w^{p−2} = λ∞ h; without h, λ∞ = ‖w‖_p^p = μ(S)^{1−p/2}.
    const double target = h ? std::pow(lambda_inf * (*h)[x], 1.0 / (p - 2.0)) : 1.0 / std::sqrt(mu_s);
    out.limit_fn[x] = target;
    out.structure_error = std::max(out.structure_error, std::abs(w[x] - target));
  }
  return out;
}

std::vector<EigenPair> generalized_eigenpair(const WeightedGraph& g, const VertexFunction* h) {
  if (!g.connected()) throw Error(ErrorCode::DisconnectedGraph, "eigenpairs need a connected graph");
  if (h) {
    require_domain(g, *h, "potential h");
    for (double x : *h)
      if (!(x > 0.0)) throw Error(ErrorCode::NonPositivePotential, "h must be > 0");
  }
  const auto n = static_cast<Eigen::Index>(g.size());

  // −Δv = λhv  ⇔  L v = λ diag(μh) v with L the weighted combinatorial
  // Laplacian; conjugating by diag(√(μh)) makes the problem symmetric.
  Eigen::VectorXd d(n);
  for (Eigen::Index x = 0; x < n; ++x) {
    const auto i = static_cast<std::size_t>(x);
    d(x) = std::sqrt(g.measure(i) * (h ? (*h)[i] : 1.0));
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    const auto i = static_cast<Eigen::Index>(e.a);
    const auto j = static_cast<Eigen::Index>(e.b);
    a(i, i) += e.w;
    a(j, j) += e.w;
    a(i, j) -= e.w;
    a(j, i) -= e.w;
  }
  a = d.asDiagonal().inverse() * a * d.asDiagonal().inverse();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  std::vector<EigenPair> out;
  out.reserve(g.size());
  for (Eigen::Index k = 0; k < n; ++k) {
    EigenPair pair;
    pair.lambda = solver.eigenvalues()(k);
    pair.v = VertexFunction(g.size(), 0.0);
    Eigen::Index arg = 0;
    for (Eigen::Index x = 0; x < n; ++x) {
      pair.v[static_cast<std::size_t>(x)] = solver.eigenvectors()(x, k) / d(x);
      if (std::abs(pair.v[static_cast<std::size_t>(x)]) >
          std::abs(pair.v[static_cast<std::size_t>(arg)]) * (1.0 + 1e-12))
        arg = x;
    }
    if (pair.v[static_cast<std::size_t>(arg)] < 0.0)
      for (auto& x : pair.v) x = -x;
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace gnls
