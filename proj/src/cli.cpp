#include "gnls/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "gnls/asymptotics.hpp"
#include "gnls/csv.hpp"
#include "gnls/fixtures.hpp"
#include "gnls/generator.hpp"
#include "gnls/graph_io.hpp"
#include "gnls/potential.hpp"

namespace gnls {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommandInfo {
  const char* name;
  Command cmd;
  const char* help;
};

constexpr CommandInfo kCommands[] = {
    {"solve", Command::Solve, "minimize J on the mass sphere of a finite graph"},
    {"maximize", Command::Maximize, "maximize the potential functional on a ball truncation"},
    {"sweep", Command::Sweep, "solve over a log-spaced mass range"},
    {"limits", Command::Limits, "sweep and classify the small- or large-mass limit"},
    {"truncate", Command::Truncate, "compare potential maximizers on growing balls"},
    {"check-conditions", Command::CheckConditions, "report the potential growth and origin conditions"},
    {"eigen", Command::Eigen, "generalized eigenpairs of -Laplacian v = lambda h v"},
};

const char* name_of(Command c) {
  for (const auto& info : kCommands)
    if (info.cmd == c) return info.name;
  return "?";
}

void add_common(CLI::App& sub, ExperimentConfig& cfg) {
  sub.add_option("--graph", cfg.graph_file, "graph file (JSON)");
  sub.add_option("--fixture", cfg.fixture, "built-in fixture: g6-table1, g6-uniform, path2, path3, lattice1d(r), lattice2d(r)");
  sub.add_option("--lattice", cfg.lattice, "integer lattice truncation")->check(CLI::IsMember({"1d", "2d"}));
  sub.add_option("--radius", cfg.radius, "lattice ball radius")->check(CLI::NonNegativeNumber);
  sub.add_option("--p", cfg.p, "exponent p > 2");
  sub.add_option("--mass", cfg.mass, "mass m");
  sub.add_option("--mass-from", cfg.mass_from, "first mass of a log-spaced range");
  sub.add_option("--mass-to", cfg.mass_to, "last mass of a log-spaced range");
  sub.add_option("--mass-points", cfg.mass_points, "number of masses in the range")->check(CLI::PositiveNumber);
  sub.add_option("--potential", cfg.potential, "h = a+b*rho^g");
  sub.add_option("--potential-file", cfg.potential_file, "JSON object mapping vertex id to h");
  sub.add_option("--origin", cfg.origin, "origin vertex id");
  sub.add_option("--tol", cfg.tolerance, "solver tolerance");
  sub.add_option("--max-iter", cfg.max_iterations, "iteration cap per restart");
  sub.add_option("--restarts", cfg.restarts, "number of restarts");
  sub.add_option("--seed", cfg.seed, "perturbation seed");
  sub.add_option("--out", cfg.out_dir, "output directory");
}

// "a+b*rho^g" or "a+b*rho".
PowerPotential parse_potential(const std::string& text) {
  static const std::regex re(R"(^\s*([^+*\s]+)\s*\+\s*([^*\s]+)\s*\*\s*rho\s*(?:\^\s*(\S+))?\s*$)");
  std::smatch mt;
  if (!std::regex_match(text, mt, re)) throw Error(ErrorCode::ConfigParse, "--potential: expected a+b*rho^g, got '" + text + "'");
  const auto num = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw Error(ErrorCode::ConfigParse, "--potential: bad number '" + s + "'");
    return v;
  };
  PowerPotential h{num(mt[1]), num(mt[2]), mt[3].matched ? num(mt[3]) : 1.0};
  h.validate();
  return h;
}

struct Setup {
  WeightedGraph graph;
  std::optional<VertexFunction> h;
  std::string origin;
  std::optional<VertexGenerator> generator;
  std::string source;
  std::string notes;
};

VertexGenerator lattice_generator(const std::string& kind, const PowerPotential& h) {
  return kind == "1d" ? lattice_1d(h) : lattice_2d(h);
}

Setup load_setup(const ExperimentConfig& cfg) {
  const int sources = int(cfg.graph_file.has_value()) + int(cfg.fixture.has_value()) + int(cfg.lattice.has_value());
  if (sources != 1) throw Error(ErrorCode::ConfigParse, "give exactly one of --graph, --fixture, --lattice");
  if (cfg.potential && cfg.potential_file) throw Error(ErrorCode::ConfigParse, "give at most one of --potential, --potential-file");

  std::optional<PowerPotential> power;
  if (cfg.potential) power = parse_potential(*cfg.potential);

  Setup s{WeightedGraph::build({{{"_", 1.0}}, {}}), std::nullopt, "", std::nullopt, "", ""};
  if (cfg.lattice) {
    auto gen = lattice_generator(*cfg.lattice, power.value_or(PowerPotential{}));
    s.origin = *cfg.lattice == "1d" ? "0" : "0,0";
    if (cfg.origin && *cfg.origin != s.origin) throw Error(ErrorCode::ConfigParse, "lattice origin is " + s.origin);
    auto t = ball_from_generator(gen, s.origin, cfg.radius);
    s.graph = std::move(t.graph);
    s.h = std::move(t.h);
    s.generator = gen;
    s.source = "lattice " + *cfg.lattice;
  } else if (cfg.fixture) {
    auto f = load_fixture(*cfg.fixture);
    s.graph = std::move(f.graph);
    s.h = std::move(f.h);
    s.origin = f.origin.value_or(s.graph.id(0));
    s.source = "fixture " + f.name;
    s.notes = f.notes;
    if (f.origin) {
      // Lattice fixtures keep their generator so the potential follows it.
      const auto rho = s.graph.distances_from(0);
      auto gen = lattice_generator(f.name.starts_with("lattice1d") ? "1d" : "2d", power.value_or(PowerPotential{}));
      auto t = ball_from_generator(gen, s.origin, *std::max_element(rho.begin(), rho.end()));
      s.graph = std::move(t.graph);
      s.h = std::move(t.h);
      s.generator = gen;
    }
  } else {
    auto loaded = load_graph_file(*cfg.graph_file);
    s.graph = std::move(loaded.graph);
    s.h = std::move(loaded.h);
    s.origin = s.graph.id(0);
    s.source = "graph " + *cfg.graph_file;
  }
  if (cfg.origin) {
    s.graph.index_of(*cfg.origin);
    s.origin = *cfg.origin;
  }

  if (power && !s.generator) {
    const auto rho = s.graph.distances_from(s.graph.index_of(s.origin));
    VertexFunction h = VertexFunction::zeros(s.graph);
    for (std::size_t x = 0; x < s.graph.size(); ++x) {
      if (rho[x] < 0) throw Error(ErrorCode::DisconnectedGraph, "vertex '" + s.graph.id(x) + "' unreachable from the origin");
      h[x] = (*power)(rho[x]);
    }
    s.h = std::move(h);
  }
  if (cfg.potential_file) {
    std::ifstream in(*cfg.potential_file);
    if (!in) throw Error(ErrorCode::FileIO, "cannot read " + *cfg.potential_file);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ConfigParse, *cfg.potential_file + ": " + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ConfigParse, *cfg.potential_file + ": expected an object id -> h");
    VertexFunction h = VertexFunction::zeros(s.graph);
    for (std::size_t x = 0; x < s.graph.size(); ++x) {
      auto it = doc.find(s.graph.id(x));
      if (it == doc.end() || !it->is_number())
        throw Error(ErrorCode::ConfigParse, *cfg.potential_file + ": no numeric h for '" + s.graph.id(x) + "'");
      h[x] = it->get<double>();
    }
    s.h = std::move(h);
  }
  return s;
}

SolverOptions solver_options(const ExperimentConfig& cfg) {
  SolverOptions o;
  o.tolerance = cfg.tolerance;
  o.max_iterations = cfg.max_iterations;
  o.restarts = cfg.restarts;
  o.seed = cfg.seed;
  o.validate();
  return o;
}

double require_mass(const ExperimentConfig& cfg) {
  if (!cfg.mass) throw Error(ErrorCode::ConfigParse, std::string(name_of(cfg.command)) + " needs --mass");
  if (cfg.mass_from || cfg.mass_to) throw Error(ErrorCode::ConfigParse, "--mass and a mass range are exclusive");
  return *cfg.mass;
}

std::vector<double> require_masses(const ExperimentConfig& cfg) {
  if (cfg.mass) throw Error(ErrorCode::ConfigParse, std::string(name_of(cfg.command)) + " takes a mass range, not --mass");
  if (!cfg.mass_from || !cfg.mass_to)
    throw Error(ErrorCode::ConfigParse, std::string(name_of(cfg.command)) + " needs --mass-from and --mass-to");
  if (!(*cfg.mass_from > 0.0) || !(*cfg.mass_to > 0.0)) throw Error(ErrorCode::ConfigParse, "mass range endpoints must be > 0");
  return log_spaced(*cfg.mass_from, *cfg.mass_to, cfg.mass_points);
}

const VertexFunction& require_h(const Setup& s, const ExperimentConfig& cfg) {
  if (!s.h)
    throw Error(ErrorCode::ConfigParse, std::string(name_of(cfg.command)) + " needs a potential (--potential, --potential-file, h in the graph file, or a lattice)");
  return *s.h;
}

std::string short_number(double x) {
  std::ostringstream os;
  os << std::setprecision(4) << x;
  return os.str();
}

class Outputs {
 public:
  explicit Outputs(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw Error(ErrorCode::FileIO, "cannot create " + dir_.string() + ": " + ec.message());
  }

  std::ofstream open(const std::string& name) {
    std::ofstream f(dir_ / name, std::ios::binary);
    if (!f) throw Error(ErrorCode::FileIO, "cannot write " + (dir_ / name).string());
    files_.push_back(name);
    return f;
  }

  const std::vector<std::string>& files() const { return files_; }
  const fs::path& dir() const { return dir_; }

 private:
  fs::path dir_;
  std::vector<std::string> files_;
};

void print_solution(std::ostream& out, const WeightedGraph& g, const Solution& s, const char* energy_name) {
  out << "lambda = " << format_number(s.lambda) << "\n"
      << energy_name << " = " << format_number(s.energy) << "\n"
      << "residual = " << format_number(s.residual) << "\n"
      << "mass = " << format_number(s.mass) << "\n"
      << "iterations = " << s.iterations << " (restart " << s.restart << ")\n";
  if (g.size() <= 20)
    for (std::size_t x = 0; x < g.size(); ++x) out << "u(" << g.id(x) << ") = " << format_number(s.u[x]) << "\n";
}

json classification_json(const WeightedGraph& g, const LimitClassification& c) {
  json fn = json::object();
  for (std::size_t x = 0; x < g.size(); ++x) fn[g.id(x)] = c.limit_fn[x];
  json support = json::array();
  for (auto x : c.support) support.push_back(g.id(x));
  return {{"kind", std::string(to_string(c.kind))},
          {"limit_multiplier", c.limit_multiplier},
          {"extrapolated_multiplier", c.extrapolated_multiplier},
          {"multiplier_gap", c.multiplier_gap},
          {"residual", c.residual},
          {"structure_error", c.structure_error},
          {"eigen_match", c.eigen_match},
          {"support", support},
          {"limit_fn", fn}};
}

int run_command(const ExperimentConfig& cfg, const Setup& s, Outputs& files, std::ostream& out, json& results) {
  const auto& g = s.graph;
  switch (cfg.command) {
    case Command::Solve: {
      const double m = require_mass(cfg);
      const auto sol = minimize_normalized(g, {cfg.p, m, std::nullopt, std::nullopt}, solver_options(cfg));
      auto f = files.open("solution.csv");
      write_solution_csv(f, g, nullptr, sol);
      print_solution(out, g, sol, "J");
      results = {{"lambda", sol.lambda}, {"J", sol.energy}, {"residual", sol.residual}};
      return kExitOk;
    }
    case Command::Maximize: {
      const double m = require_mass(cfg);
      const auto& h = require_h(s, cfg);
      const auto sol = maximize_constrained(g, {h, s.origin, cfg.p, m}, solver_options(cfg));
      auto f = files.open("solution.csv");
      write_solution_csv(f, g, &h, sol);
      print_solution(out, g, sol, "calJ");
      results = {{"lambda", sol.lambda}, {"calJ", sol.energy}, {"residual", sol.residual}};
      return kExitOk;
    }
    case Command::Sweep:
    case Command::Limits: {
      const auto masses = require_masses(cfg);
      const ProblemSpec spec{cfg.p, masses.front(), s.h, s.h ? std::optional<std::string>(s.origin) : std::nullopt};
      const auto sweep = mass_sweep(g, spec, masses, solver_options(cfg));
      {
        auto f = files.open("sweep.csv");
        write_sweep_csv(f, g, sweep);
      }
      const auto failed = std::count_if(sweep.begin(), sweep.end(), [](const SweepRecord& r) { return r.failed; });
      out << sweep.size() << " masses, " << failed << " failed\n";
      results = {{"masses", sweep.size()}, {"failed", failed}};
      if (cfg.command == Command::Sweep) return failed ? kExitNotConverged : kExitOk;

      const VertexFunction* h = s.h ? &*s.h : nullptr;
      const bool small = masses.size() > 1 && masses.back() < masses.front();
      const auto c = small ? classify_small_mass_limit(g, sweep, cfg.p, h) : classify_large_mass_limit(g, sweep, cfg.p, h);
      out << (small ? "small" : "large") << "-mass limit: " << to_string(c.kind) << "\n"
          << (small ? "lambda_0 = " : "lambda_inf = ") << format_number(c.limit_multiplier) << "\n"
          << "extrapolated multiplier = " << format_number(c.extrapolated_multiplier) << "\n"
          << "limit residual = " << format_number(c.residual) << "\n";
      results["limit"] = classification_json(g, c);
      results["limit"]["direction"] = small ? "small" : "large";
      auto f = files.open("limits.json");
      f << results["limit"].dump(2) << "\n";
      return kExitOk;
    }
    case Command::Truncate: {
      if (!s.generator) throw Error(ErrorCode::ConfigParse, "truncate needs --lattice");
      const double m = require_mass(cfg);
      std::vector<int> radii = cfg.radii;
      if (radii.empty()) radii = {std::max(1, cfg.radius / 2), std::max(2, cfg.radius)};
      const auto report = truncation_study({*s.generator, s.origin, cfg.p, m}, radii, solver_options(cfg));
      auto f = files.open("truncation.csv");
      f << "radius,vertices,calJ,lambda,residual,center_delta\n";
      for (std::size_t i = 0; i < report.radii.size(); ++i) {
        const auto& sol = report.solutions[i];
        f << report.radii[i] << ',' << report.truncations[i].graph.size() << ',' << format_number(sol.energy) << ','
          << format_number(sol.lambda) << ',' << format_number(sol.residual) << ','
          << (i == 0 ? std::string() : format_number(report.center_deltas[i - 1])) << '\n';
        out << "radius " << report.radii[i] << ": calJ = " << format_number(sol.energy)
            << ", lambda = " << format_number(sol.lambda);
        if (i > 0) out << ", center delta = " << format_number(report.center_deltas[i - 1]);
        out << "\n";
      }
      out << "(c3): " << (report.c3.holds ? "holds" : "fails") << "\n";
      auto sf = files.open("solution.csv");
      write_solution_csv(sf, report.truncations.back().graph, &report.truncations.back().h, report.solutions.back());
      results = {{"center_deltas", report.center_deltas}, {"c3_holds", report.c3.holds}};
      return kExitOk;
    }
    case Command::CheckConditions: {
      const double m = cfg.mass.value_or(1.0);
      const auto& h = require_h(s, cfg);
      const auto c3 = check_c3(g, h, s.origin, cfg.p, m);
      out << "(c3): " << (c3.holds ? "holds" : "fails") << ", lhs=" << short_number(c3.lhs)
          << ", rhs=" << short_number(c3.rhs) << "\n"
          << "  " << c3.note << "\n";
      const double j = jphi(g, h, s.origin, cfg.p, m);
      out << "calJ(sqrt(m) phi) = " << format_number(j) << "\n";
      const double bound = lambda1_upper_bound(g, h, cfg.p);
      out << "sup calJ at mass 1 <= " << format_number(bound) << "\n";
      results = {{"c3", {{"holds", c3.holds}, {"lhs", c3.lhs}, {"rhs", c3.rhs}, {"note", c3.note}}},
                 {"jphi", j},
                 {"lambda1_upper_bound", bound}};
      const auto rho = g.distances_from(g.index_of(s.origin));
      if (std::all_of(rho.begin(), rho.end(), [](int r) { return r >= 0; })) {
        Truncation t{g, h, rho, s.origin, *std::max_element(rho.begin(), rho.end())};
        const auto c2 = check_c2_sampled(t);
        out << "(c2) sampled: " << (c2.holds() ? "holds" : "fails") << ", h0=" << short_number(c2.h0) << "\n";
        results["c2"] = {{"holds", c2.holds()}, {"h0", c2.h0}, {"shell_min", c2.shell_min}};
      }
      auto f = files.open("conditions.json");
      f << results.dump(2) << "\n";
      return kExitOk;
    }
    case Command::Eigen: {
      const VertexFunction* h = s.h ? &*s.h : nullptr;
      const auto pairs = generalized_eigenpair(g, h);
      auto f = files.open("eigen.csv");
      f << "k,lambda";
      for (std::size_t x = 0; x < g.size(); ++x) f << ",v_" << g.id(x);
      f << "\n";
      std::vector<double> values;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        f << k << ',' << format_number(pairs[k].lambda);
        for (double v : pairs[k].v) f << ',' << format_number(v);
        f << "\n";
        values.push_back(pairs[k].lambda);
        if (k < 20) out << "lambda_" << k << " = " << std::setprecision(12) << pairs[k].lambda << "\n";
      }
      results = {{"eigenvalues", values}};
      return kExitOk;
    }
  }
  return kExitOk;
}

}  // namespace

ExperimentConfig parse_config(const std::vector<std::string>& args) {
  ExperimentConfig cfg;
  cfg.argv = args;
  CLI::App app{"Normalized solutions of the nonlinear Schrodinger equation on weighted graphs", "gnls"};
  app.require_subcommand(1);
  for (const auto& [name, cmd, help] : kCommands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(*sub, cfg);
    if (cmd == Command::Truncate) sub->add_option("--radii", cfg.radii, "increasing ball radii")->delimiter(',');
    sub->callback([&cfg, c = cmd] { cfg.command = c; });
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::ConfigParse, e.what());
  }
  for (const auto* sub : app.get_subcommands())
    if (sub->count_all() > 0 && sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) throw HelpRequested{sub->help()};
  if (!(cfg.p > 2.0)) throw Error(ErrorCode::ConfigParse, "--p must be > 2");
  return cfg;
}

int run(const ExperimentConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Setup setup = load_setup(cfg);
  Outputs files(cfg.out_dir);
  if (!setup.notes.empty()) out << "note: " << setup.notes << "\n";

  json results;
  const int code = run_command(cfg, setup, files, out, results);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json manifest = {
      {"command", name_of(cfg.command)},
      {"argv", cfg.argv},
      {"graph", setup.source},
      {"vertices", setup.graph.size()},
      {"origin", setup.origin},
      {"p", cfg.p},
      {"seed", cfg.seed},
      {"tolerance", cfg.tolerance},
      {"max_iterations", cfg.max_iterations},
      {"restarts", cfg.restarts},
      {"wall_time_seconds", wall},
      {"exit_code", code},
      {"results", results},
  };
  if (cfg.mass) manifest["mass"] = *cfg.mass;
  if (cfg.mass_from) manifest["mass_range"] = {{"from", *cfg.mass_from}, {"to", cfg.mass_to.value_or(0.0)}, {"points", cfg.mass_points}};
  if (cfg.potential) manifest["potential"] = *cfg.potential;
  if (cfg.potential_file) manifest["potential_file"] = *cfg.potential_file;
  if (!setup.notes.empty()) manifest["notes"] = setup.notes;
  manifest["outputs"] = files.files();
  std::ofstream f(files.dir() / "manifest.json");
  if (!f) throw Error(ErrorCode::FileIO, "cannot write manifest");
  f << manifest.dump(2) << "\n";
  return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(parse_config(args), out);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitOk;
  } catch (const NotConverged& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotConverged;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::SweepNotSettled: return kExitNotConverged;
      case ErrorCode::FileIO: return kExitIo;
      default: return kExitInvalid;
    }
  }
}

}  // namespace gnls
