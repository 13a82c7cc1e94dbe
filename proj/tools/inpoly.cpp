// inpoly: find polygons with prescribed side lengths inscribed in a closed curve.
//
//   inpoly <solve|penner|degree|oracle|render> [--curve FILE] [--lengths CSV|FILE]
//          [--out FILE] [--svg FILE] [--grid N] [--starts N] [--tol X]
//          [--threads N] [--seed N] [--phase ALPHA] [--star-center X,Y]
//
// Exit codes: 0 success, 1 runtime/IO failure, 2 invalid input, 3 no solution.

#include "inpoly/curve.hpp"
#include "inpoly/degree.hpp"
#include "inpoly/error.hpp"
#include "inpoly/io.hpp"
#include "inpoly/oracle.hpp"
#include "inpoly/penner.hpp"
#include "inpoly/solver.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace {

using inpoly::Error;
using inpoly::ErrorKind;
using inpoly::io::json;

enum Exit { kOk = 0, kRuntime = 1, kInvalid = 2, kNoSolution = 3 };

struct JobSpec {
  std::string command;
  std::string curve_path;
  std::string lengths;
  std::string out_path;
  std::string svg_path;
  std::string csv_path;
  std::string solutions_path;
  std::size_t grid = 512;
  std::optional<std::size_t> starts;
  std::optional<double> tol;
  unsigned threads = 0;
  std::optional<std::uint64_t> seed;
  std::optional<double> phase;
  std::string star_center;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidSpec, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, what + ": " + e.what());
  }
}

class Job {
 public:
  explicit Job(JobSpec spec) : spec_(std::move(spec)) {}

  inpoly::CurveSpec curve_spec() const {
    if (spec_.curve_path.empty()) throw Error(ErrorKind::InvalidSpec, "--curve is required for " + spec_.command);
    inpoly::CurveSpec cs = inpoly::io::curve_spec_from_json(parse_json(read_file(spec_.curve_path), spec_.curve_path));
    if (spec_.phase) cs.phase = *spec_.phase;
    return cs;
  }

  inpoly::EdgeLengths lengths() const {
    if (spec_.lengths.empty()) throw Error(ErrorKind::InvalidSpec, "--lengths is required for " + spec_.command);
    const bool is_file = std::filesystem::is_regular_file(spec_.lengths);
    return inpoly::validate_lengths(inpoly::io::parse_lengths(is_file ? read_file(spec_.lengths) : spec_.lengths));
  }

  inpoly::SolverOptions options() const {
    inpoly::SolverOptions opts;
    if (spec_.tol) opts.newton_tol = *spec_.tol;
    if (spec_.starts) opts.multistart_count = *spec_.starts;
    opts.threads = spec_.threads;
    if (spec_.seed) {
      opts.seed = *spec_.seed;
    } else if (const char* env = std::getenv("INPOLY_SEED")) {
      try {
        opts.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidSpec, "INPOLY_SEED is not an unsigned integer");
      }
    }
    if (!spec_.star_center.empty()) {
      const auto xy = inpoly::io::parse_lengths(spec_.star_center);  // plain comma list
      if (xy.size() != 2) throw Error(ErrorKind::InvalidSpec, "--star-center expects X,Y");
      opts.star_center = inpoly::Point2(xy[0], xy[1]);
    }
    return opts;
  }

  int run() {
    if (spec_.command == "solve") return solve();
    if (spec_.command == "penner") return penner();
    if (spec_.command == "degree") return degree();
    if (spec_.command == "oracle") return oracle();
    return render();
  }

 private:
  inpoly::Curve simple_curve(const inpoly::CurveSpec& cs) const {
    inpoly::Curve curve = inpoly::build_curve(cs);
    if (!inpoly::check_simple(curve, 1024)) throw Error(ErrorKind::SelfIntersecting, "curve failed simplicity check");
    return curve;
  }

  inpoly::SolveResult run_solver(const inpoly::CurveSpec& cs, const inpoly::EdgeLengths& a) const {
    const inpoly::SolverOptions opts = options();
    try {
      return inpoly::continuation_solve(cs, a, opts);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PathFailure) throw;
      std::cerr << "inpoly: " << e.what() << "; falling back to multistart\n";
      return inpoly::multistart_solve(cs, a, opts);
    }
  }

  int solve() {
    const inpoly::CurveSpec cs = curve_spec();
    const inpoly::EdgeLengths a = lengths();
    const inpoly::Curve curve = simple_curve(cs);
    const inpoly::SolveResult result = run_solver(cs, a);
    write_output(spec_.out_path, inpoly::io::solutions_json(cs, a, result).dump(2) + "\n");
    if (!spec_.csv_path.empty()) write_output(spec_.csv_path, inpoly::io::solutions_csv(result));
    if (result.solutions.empty()) {
      std::cerr << "inpoly: no solution found (not a proof of nonexistence)\n";
      return kNoSolution;
    }
    if (!spec_.svg_path.empty()) {
      std::vector<inpoly::PointList> polys;
      for (const auto& s : result.solutions) polys.push_back(s.polygon.on_curve);
      write_output(spec_.svg_path, inpoly::io::render_svg(curve, polys));
    }
    return kOk;
  }

  int penner() {
    const inpoly::EdgeLengths a = lengths();
    const double tol = spec_.tol.value_or(1e-12);
    write_output(spec_.out_path, inpoly::io::penner_json(a, inpoly::solve_cyclic(a, tol)).dump(2) + "\n");
    return kOk;
  }

  int degree() {
    const inpoly::CurveSpec cs = curve_spec();
    const inpoly::EdgeLengths a = lengths();
    simple_curve(cs);
    const inpoly::DegreeReport report = inpoly::estimate_degree(cs, a, options());
    if (!report.regular) std::cerr << "inpoly: warning: target looks non-regular (min |det| " << report.min_abs_det << ")\n";
    write_output(spec_.out_path, inpoly::io::degree_json(cs, report).dump(2) + "\n");
    return report.solutions.empty() ? kNoSolution : kOk;
  }

  int oracle() {
    const inpoly::CurveSpec cs = curve_spec();
    const inpoly::EdgeLengths a = lengths();
    const inpoly::Curve curve = simple_curve(cs);
    const auto candidates = inpoly::grid_search(curve, a, spec_.grid);
    write_output(spec_.out_path, inpoly::io::oracle_json(cs, a, candidates).dump(2) + "\n");
    return kOk;
  }

  int render() {
    std::optional<inpoly::CurveSpec> cs;
    std::vector<inpoly::PointList> polys;
    if (!spec_.solutions_path.empty()) {
      const json doc = parse_json(read_file(spec_.solutions_path), spec_.solutions_path);
      polys = inpoly::io::polygons_from_json(doc);
      cs = spec_.curve_path.empty() ? inpoly::io::curve_spec_from_json(doc.at("curve")) : curve_spec();
    } else {
      cs = curve_spec();
      const inpoly::EdgeLengths a = lengths();
      simple_curve(*cs);
      for (const auto& s : run_solver(*cs, a).solutions) polys.push_back(s.polygon.on_curve);
    }
    const inpoly::Curve curve = inpoly::build_curve(*cs);
    write_output(spec_.svg_path.empty() ? spec_.out_path : spec_.svg_path, inpoly::io::render_svg(curve, polys));
    return kOk;
  }

  JobSpec spec_;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PathFailure:
    case ErrorKind::GridTooCoarse:
    case ErrorKind::MissingSolutions:
      return kNoSolution;
    case ErrorKind::NoConvergence:
    case ErrorKind::SingularJacobian:
    case ErrorKind::MaxIterations:
    case ErrorKind::LineSearchFailure:
    case ErrorKind::BoundaryEscape:
      return kRuntime;
    default:
      return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polygons with prescribed side lengths inscribed in a closed curve"};
  app.require_subcommand(1, 1);

  JobSpec job;
  const std::pair<const char*, const char*> commands[] = {
      {"solve", "find inscribed polygons with the given side lengths"},
      {"penner", "cyclic polygon with the given side lengths"},
      {"degree", "signed solution count for the target lengths (n <= 5)"},
      {"oracle", "brute-force grid search (n <= 4)"},
      {"render", "draw the curve and polygons as SVG"},
  };
  for (const auto& [name, about] : commands) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("--curve", job.curve_path, "curve spec JSON file");
    sub->add_option("--lengths", job.lengths, "comma-separated lengths or a JSON array file");
    sub->add_option("--out", job.out_path, "output file (default stdout)");
    sub->add_option("--svg", job.svg_path, "SVG output file");
    sub->add_option("--csv", job.csv_path, "CSV summary output file (solve)");
    sub->add_option("--solutions", job.solutions_path, "solutions JSON to render instead of solving (render)");
    sub->add_option("--grid", job.grid, "oracle grid size")->check(CLI::PositiveNumber);
    sub->add_option("--starts", job.starts, "multistart count");
    sub->add_option("--tol", job.tol, "Newton residual tolerance");
    sub->add_option("--threads", job.threads, "worker threads (0 = all cores)");
    sub->add_option("--seed", job.seed, "multistart seed (fallback: INPOLY_SEED)");
    sub->add_option("--phase", job.phase, "basepoint phase override");
    sub->add_option("--star-center", job.star_center, "homotopy center X,Y");
    sub->callback([&job, sub] { job.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    return Job(job).run();
  } catch (const Error& e) {
    std::cerr << "inpoly: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "inpoly: " << e.what() << "\n";
    return kRuntime;
  }
}
