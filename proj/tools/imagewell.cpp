// imagewell: eigenstates of an electron between two grounded conducting
// planes. Every subcommand writes one dataset (CSV or JSON) to standard
// output, to --output, or to $IMAGEWELL_OUTPUT_DIR/<subcommand>.<ext>.
//
// Exit codes: 0 success, 1 I/O failure, 2 usage or domain error,
// 3 eigensolver failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "imagewell/analysis.hpp"
#include "imagewell/potential.hpp"
#include "imagewell/report.hpp"
#include "imagewell/solver.hpp"

namespace {

using namespace imagewell;

enum class Format { Csv, Json };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  Format format = Format::Csv;
  std::string output;

  double x = 0.5;
  double length = 1.0;
  std::vector<double> lengths;
  double length_min = 0.0;
  double length_max = 0.0;
  int length_count = 0;
  std::string spacing = "log";
  std::optional<int> order;
  int n_states = 10;
  int n_terms_points = 199;
  std::vector<int> terms{20, 200, 2000};
  std::string states_path;
  std::string construction = "squared";
  std::string potential = "closed";
};

void require(bool ok, const std::string& message) {
  if (!ok) throw std::domain_error(message);
}

void validate_order_and_states(int order, int n_states) {
  require(order >= 4, "M must be >= 4, got " + std::to_string(order));
  require(n_states >= 1, "n-states must be >= 1");
  require(n_states <= order - 1,
          "n-states = " + std::to_string(n_states) + " exceeds M - 1 = " +
              std::to_string(order - 1));
}

std::vector<double> resolve_lengths(const RunConfig& cfg) {
  std::vector<double> lengths = cfg.lengths;
  if (lengths.empty()) {
    require(cfg.length_count >= 1, "L-count must be >= 1");
    require(cfg.length_min > 0 && cfg.length_max >= cfg.length_min,
            "need 0 < L-min <= L-max");
    if (cfg.spacing == "log") {
      lengths = log_spaced(cfg.length_min, cfg.length_max, cfg.length_count);
    } else {
      const int n = cfg.length_count;
      for (int i = 0; i < n; ++i) {
        lengths.push_back(n == 1 ? cfg.length_min
                                 : cfg.length_min + (cfg.length_max - cfg.length_min) * i / (n - 1));
      }
    }
  }
  for (const double l : lengths) {
    require(l > 0, "L must be positive");
  }
  return lengths;
}

int order_for(const RunConfig& cfg, double length) {
  return cfg.order ? *cfg.order : default_order(length);
}

AssembleOptions assemble_options(const RunConfig& cfg) {
  AssembleOptions options;
  options.construction = cfg.construction == "explicit" ? Construction::ExplicitSecond
                                                         : Construction::SquaredFirst;
  if (cfg.potential == "first-image") {
    options.potential = potential_first_image;
  } else if (cfg.potential == "zero") {
    options.potential = zero_potential;
  }
  return options;
}

class Sink {
 public:
  Sink(const RunConfig& cfg, const std::string& path) {
    std::string target = path.empty() ? cfg.output : path;
    if (target.empty()) {
      if (const char* dir = std::getenv("IMAGEWELL_OUTPUT_DIR"); dir && *dir) {
        const char* ext = cfg.format == Format::Json ? ".json" : ".csv";
        target = (std::filesystem::path(dir) / (cfg.subcommand + ext)).string();
      }
    }
    if (!target.empty() && target != "-") {
      file_.open(target);
      if (!file_) throw IoError("cannot open output file " + target);
      path_ = target;
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  void finish() {
    stream().flush();
    if (!stream()) throw IoError("write failed" + (path_.empty() ? "" : " for " + path_));
  }

 private:
  std::ofstream file_;
  std::string path_;
};

void emit(const RunConfig& cfg, const report::Table& table,
          const nlohmann::json& json, const std::string& path = {}) {
  Sink sink(cfg, path);
  if (cfg.format == Format::Json) {
    sink.stream() << json.dump(2) << '\n';
  } else {
    report::write_csv(sink.stream(), table);
  }
  sink.finish();
}

void warn_imag(const EigenSolution& sol) {
  if (sol.imag_warning) {
    std::cerr << "warning: L = " << sol.length << ", M = " << sol.order
              << ": discarded imaginary parts up to " << sol.max_imag << '\n';
  }
}

void cmd_potential(const RunConfig& cfg) {
  require(cfg.length > 0, "L must be positive");
  const auto samples = potential_profile(cfg.length, cfg.n_terms_points);
  emit(cfg, report::potential_table(samples),
       report::potential_json(cfg.length, samples));
}

void cmd_convergence(const RunConfig& cfg) {
  const auto table = convergence_table(cfg.x, cfg.length, cfg.terms);
  emit(cfg, report::convergence_csv(table), report::convergence_json(table));
}

void cmd_solve(const RunConfig& cfg) {
  require(cfg.length > 0, "L must be positive");
  const int order = order_for(cfg, cfg.length);
  validate_order_and_states(order, cfg.n_states);
  // States are always computed: parities need them.
  const auto sol = solve(order, cfg.length, cfg.n_states, assemble_options(cfg));
  warn_imag(sol);
  emit(cfg, report::energies_table(sol), report::solution_json(sol, false));
  if (!cfg.states_path.empty()) {
    emit(cfg, report::states_table(sol), report::solution_json(sol, true),
         cfg.states_path);
  }
}

void cmd_sweep(const RunConfig& cfg) {
  const auto lengths = resolve_lengths(cfg);
  for (const double l : lengths) validate_order_and_states(order_for(cfg, l), cfg.n_states);
  const auto rows = energy_sweep(lengths, cfg.n_states, cfg.order);
  emit(cfg, report::energy_sweep_table(rows), report::energy_sweep_json(rows));
}

void cmd_splitting(const RunConfig& cfg) {
  const auto lengths = resolve_lengths(cfg);
  for (const double l : lengths) validate_order_and_states(order_for(cfg, l), 2);
  const auto records = splitting_sweep(lengths, cfg.order);
  emit(cfg, report::splitting_table(records), report::splitting_json(records));
}

void cmd_waveforms(const RunConfig& cfg) {
  const auto lengths = resolve_lengths(cfg);
  std::vector<EigenSolution> solutions;
  for (const double l : lengths) {
    const int order = order_for(cfg, l);
    validate_order_and_states(order, cfg.n_states);
    solutions.push_back(solve(order, l, cfg.n_states));
    warn_imag(solutions.back());
  }
  emit(cfg, report::waveforms_table(solutions), report::waveforms_json(solutions));
}

void cmd_limits(const RunConfig& cfg) {
  require(cfg.length > 0, "L must be positive");
  const int order = order_for(cfg, cfg.length);
  validate_order_and_states(order, cfg.n_states);
  EigensolveOptions options;
  options.compute_states = false;
  const auto sol = solve(order, cfg.length, cfg.n_states, {}, options);
  warn_imag(sol);
  emit(cfg, report::limits_table(sol), report::limits_json(sol));
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::Csv}, {"json", Format::Json}}))
      ->option_text("csv|json [csv]");
  sub->add_option("-o,--output", cfg.output,
                  "Output path ('-' for stdout; default $IMAGEWELL_OUTPUT_DIR or stdout)");
}

// Defaults for the range are set per subcommand in its preparse callback.
void add_length_list(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--L", cfg.lengths, "Plate separations (overrides the range)")
      ->delimiter(',');
  sub->add_option("--L-min", cfg.length_min, "Range start");
  sub->add_option("--L-max", cfg.length_max, "Range end");
  sub->add_option("--L-count", cfg.length_count, "Range points");
  sub->add_option("--spacing", cfg.spacing, "Range spacing: log or linear")
      ->check(CLI::IsMember({"log", "linear"}));
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Eigenstates of an electron confined between grounded conducting planes"};
  app.require_subcommand(1);

  auto* potential = app.add_subcommand("potential", "Potential profile: closed form, without 2 gamma, first image");
  potential->add_option("--L", cfg.length, "Plate separation")->capture_default_str();
  potential->add_option("--points", cfg.n_terms_points, "Number of interior samples")
      ->capture_default_str();

  auto* convergence = app.add_subcommand("convergence", "Truncated image series vs. closed form");
  convergence->add_option("--x", cfg.x, "Position in (0, L)")->capture_default_str();
  convergence->add_option("--L", cfg.length, "Plate separation")->capture_default_str();
  convergence->add_option("--terms", cfg.terms, "Series term counts")
      ->delimiter(',')
      ->capture_default_str();

  auto* solve_cmd = app.add_subcommand("solve", "Energies, quantum defects and optionally states");
  cfg.order = 100;
  solve_cmd->add_option("--L", cfg.length, "Plate separation")->capture_default_str();
  solve_cmd->add_option("--M", cfg.order, "Chebyshev order");
  solve_cmd->add_option("--n-states", cfg.n_states, "Number of levels")->capture_default_str();
  solve_cmd->add_option("--states", cfg.states_path, "Also write wavefunctions to this path");
  solve_cmd->add_option("--construction", cfg.construction, "Second-derivative construction")
      ->check(CLI::IsMember({"squared", "explicit"}))
      ->capture_default_str();
  solve_cmd->add_option("--potential", cfg.potential, "Potential in the Hamiltonian")
      ->check(CLI::IsMember({"closed", "first-image", "zero"}))
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Lowest energies as a function of L");
  sweep->add_option("--M", cfg.order, "Fixed Chebyshev order (default: chosen per L)");
  sweep->add_option("--n-states", cfg.n_states, "Number of levels")->capture_default_str();

  auto* splitting = app.add_subcommand("splitting", "Ground pair splitting vs. the analytic estimate");
  splitting->add_option("--M", cfg.order, "Fixed Chebyshev order (default: chosen per L)");

  auto* waveforms = app.add_subcommand("waveforms", "Lowest eigenfunctions for several L");
  waveforms->add_option("--M", cfg.order, "Fixed Chebyshev order (default: chosen per L)");
  waveforms->add_option("--n-states", cfg.n_states, "Number of states")->capture_default_str();

  auto* limits = app.add_subcommand("limits", "Large-L levels against the single-plane image states");
  limits->add_option("--L", cfg.length, "Plate separation")->capture_default_str();
  limits->add_option("--M", cfg.order, "Chebyshev order");
  limits->add_option("--n-states", cfg.n_states, "Number of levels")->capture_default_str();

  for (auto* sub : {potential, convergence, solve_cmd, sweep, splitting, waveforms, limits}) {
    add_common(sub, cfg);
  }

  // Subcommand-specific defaults are applied before parsing.
  add_length_list(sweep, cfg);
  add_length_list(splitting, cfg);
  add_length_list(waveforms, cfg);
  sweep->preparse_callback([&](std::size_t) {
    cfg.order.reset();
    cfg.length_min = 1.0;
    cfg.length_max = 100.0;
    cfg.length_count = 50;
    cfg.spacing = "log";
  });
  splitting->preparse_callback([&](std::size_t) {
    cfg.order.reset();
    cfg.length_min = 10.0;
    cfg.length_max = 100.0;
    cfg.length_count = 19;
    cfg.spacing = "linear";
  });
  waveforms->preparse_callback([&](std::size_t) {
    cfg.order.reset();
    cfg.n_states = 2;
    cfg.lengths = {1.0, 20.0, 40.0, 100.0};
  });
  limits->preparse_callback([&](std::size_t) {
    cfg.length = 10000.0;
    cfg.order = 2000;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (cfg.subcommand == "potential") cmd_potential(cfg);
    else if (cfg.subcommand == "convergence") cmd_convergence(cfg);
    else if (cfg.subcommand == "solve") cmd_solve(cfg);
    else if (cfg.subcommand == "sweep") cmd_sweep(cfg);
    else if (cfg.subcommand == "splitting") cmd_splitting(cfg);
    else if (cfg.subcommand == "waveforms") cmd_waveforms(cfg);
    else if (cfg.subcommand == "limits") cmd_limits(cfg);
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const SolverError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
