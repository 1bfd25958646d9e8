#include "imagewell/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace imagewell::report {

namespace {

using nlohmann::json;

std::vector<double> to_vector(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

json parities_json(const EigenSolution& s) {
  json out = json::array();
  for (const auto p : s.parities) out.push_back(to_string(p));
  return out;
}

json defect_cell(const DefectRecord& d) {
  return d.defect ? json(*d.defect) : json(nullptr);
}

}  // namespace

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              out << format_real(v);
            } else if constexpr (!std::is_same_v<T, std::monostate>) {
              out << v;
            }
          },
          row[c]);
    }
    out << '\n';
  }
}

Table potential_table(std::span<const PotentialSample> samples) {
  Table t{{"x", "closed", "closed_without_gamma", "first_image"}, {}};
  for (const auto& s : samples) {
    t.rows.push_back({s.x, s.closed, s.closed_without_gamma, s.first_image});
  }
  return t;
}

json potential_json(double length, std::span<const PotentialSample> samples) {
  json rows = json::array();
  for (const auto& s : samples) {
    rows.push_back({{"x", s.x},
                    {"closed", s.closed},
                    {"closed_without_gamma", s.closed_without_gamma},
                    {"first_image", s.first_image}});
  }
  return {{"L", length}, {"samples", rows}};
}

Table convergence_csv(const ConvergenceTable& table) {
  Table t{{"terms", "potential"}, {}};
  for (const auto& r : table.rows) t.rows.push_back({r.terms, r.potential});
  t.rows.push_back({std::string("closed"), table.closed_form});
  return t;
}

json convergence_json(const ConvergenceTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"terms", r.terms}, {"potential", r.potential}});
  }
  return {{"x", table.x},
          {"L", table.length},
          {"rows", rows},
          {"closed_form", table.closed_form}};
}

Table energies_table(const EigenSolution& solution) {
  Table t{{"N", "energy", "pib_energy", "defect"}, {}};
  for (const auto& d : defect_table(solution)) {
    Cell defect = d.defect ? Cell(*d.defect) : Cell(std::monostate{});
    t.rows.push_back({d.n, d.energy, pib_energy(d.n, solution.length), defect});
  }
  return t;
}

Table states_table(const EigenSolution& solution) {
  Table t;
  t.columns.push_back("x");
  for (int k = 1; k <= static_cast<int>(solution.states.size()); ++k) {
    t.columns.push_back("psi_" + std::to_string(k));
  }
  for (std::size_t j = 0; j < solution.positions.size(); ++j) {
    std::vector<Cell> row{solution.positions[j]};
    for (const auto& psi : solution.states) {
      row.emplace_back(psi[static_cast<Eigen::Index>(j)]);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

json solution_json(const EigenSolution& solution, bool with_states) {
  json defects = json::array();
  for (const auto& d : defect_table(solution)) defects.push_back(defect_cell(d));
  json out = {{"L", solution.length},
              {"M", solution.order},
              {"trusted_count", solution.trusted_count},
              {"max_imag", solution.max_imag},
              {"imag_warning", solution.imag_warning},
              {"energies", solution.energies},
              {"defects", defects},
              {"parities", parities_json(solution)}};
  if (with_states) {
    json states = json::array();
    for (const auto& psi : solution.states) states.push_back(to_vector(psi));
    out["x"] = solution.positions;
    out["states"] = states;
  }
  return out;
}

Table energy_sweep_table(std::span<const EnergySweepRow> rows) {
  Table t;
  t.columns.push_back("L");
  const std::size_t k = rows.empty() ? 0 : rows.front().energies.size();
  for (std::size_t n = 1; n <= k; ++n) t.columns.push_back("E" + std::to_string(n));
  for (std::size_t n = 1; n <= k; ++n) t.columns.push_back("PIB" + std::to_string(n));
  for (const auto& r : rows) {
    std::vector<Cell> row{r.length};
    for (const double e : r.energies) row.emplace_back(e);
    for (std::size_t n = 1; n <= k; ++n) {
      row.emplace_back(pib_energy(static_cast<int>(n), r.length));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

json energy_sweep_json(std::span<const EnergySweepRow> rows) {
  json out = json::array();
  for (const auto& r : rows) {
    std::vector<double> pib;
    for (std::size_t n = 1; n <= r.energies.size(); ++n) {
      pib.push_back(pib_energy(static_cast<int>(n), r.length));
    }
    out.push_back({{"L", r.length}, {"M", r.order}, {"energies", r.energies},
                   {"pib", pib}});
  }
  return {{"rows", out}};
}

Table splitting_table(std::span<const SplittingRecord> records) {
  Table t{{"L", "dE_numeric", "dE_analytic_abs", "dE_analytic_signed"}, {}};
  for (const auto& r : records) {
    t.rows.push_back({r.length, r.numeric, r.analytic_abs(), r.analytic});
  }
  return t;
}

json splitting_json(std::span<const SplittingRecord> records) {
  json rows = json::array();
  for (const auto& r : records) {
    rows.push_back({{"L", r.length},
                    {"M", r.order},
                    {"E1", r.ground},
                    {"E2", r.excited},
                    {"dE_numeric", r.numeric},
                    {"dE_analytic_abs", r.analytic_abs()},
                    {"dE_analytic_signed", r.analytic},
                    {"resolved", r.resolved}});
  }
  json out = {{"rows", rows}};
  for (const auto& [name, model] :
       {std::pair{"fit_pure_exponential", DecayModel::PureExponential},
        std::pair{"fit_analytic_prefactor", DecayModel::AnalyticPrefactor}}) {
    try {
      const auto fit = fit_splitting_decay(records, model);
      out[name] = {{"rate", fit.rate},
                   {"intercept", fit.intercept},
                   {"r_squared", fit.r_squared}};
    } catch (const std::domain_error&) {
      out[name] = nullptr;
    }
  }
  return out;
}

Table waveforms_table(std::span<const EigenSolution> solutions) {
  Table t;
  t.columns = {"L", "x"};
  const std::size_t k = solutions.empty() ? 0 : solutions.front().states.size();
  for (std::size_t n = 1; n <= k; ++n) t.columns.push_back("psi_" + std::to_string(n));
  for (std::size_t n = 1; n <= k; ++n) t.columns.push_back("parity_" + std::to_string(n));
  for (const auto& s : solutions) {
    for (std::size_t j = 0; j < s.positions.size(); ++j) {
      std::vector<Cell> row{s.length, s.positions[j]};
      for (const auto& psi : s.states) {
        row.emplace_back(psi[static_cast<Eigen::Index>(j)]);
      }
      for (const auto p : s.parities) row.emplace_back(std::string(to_string(p)));
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

json waveforms_json(std::span<const EigenSolution> solutions) {
  json out = json::array();
  for (const auto& s : solutions) out.push_back(solution_json(s, true));
  return {{"waveforms", out}};
}

Table limits_table(const EigenSolution& solution) {
  Table t{{"n", "energy", "limiting", "relative_error"}, {}};
  for (std::size_t k = 0; k < solution.energies.size(); ++k) {
    const double limit = image_state_energy(static_cast<int>(k) / 2 + 1);
    const double e = solution.energies[k];
    t.rows.push_back({static_cast<int>(k) + 1, e, limit,
                      std::abs(e - limit) / std::abs(limit)});
  }
  return t;
}

json limits_json(const EigenSolution& solution) {
  json rows = json::array();
  for (std::size_t k = 0; k < solution.energies.size(); ++k) {
    const double limit = image_state_energy(static_cast<int>(k) / 2 + 1);
    const double e = solution.energies[k];
    rows.push_back({{"n", k + 1},
                    {"energy", e},
                    {"limiting", limit},
                    {"relative_error", std::abs(e - limit) / std::abs(limit)}});
  }
  return {{"L", solution.length},
          {"M", solution.order},
          {"max_imag", solution.max_imag},
          {"rows", rows}};
}

}  // namespace imagewell::report
