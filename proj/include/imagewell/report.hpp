#pragma once

// Tabular and JSON serialization of the library's results. CSV output always
// carries a header row and prints reals with 17 significant digits, so equal
// inputs give byte-identical files.

#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "imagewell/analysis.hpp"
#include "imagewell/potential.hpp"
#include "imagewell/solver.hpp"

namespace imagewell::report {

using Cell = std::variant<std::monostate, double, int, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_real(double value);
void write_csv(std::ostream& out, const Table& table);

// Columns: x, closed, closed_without_gamma, first_image
Table potential_table(std::span<const PotentialSample> samples);
nlohmann::json potential_json(double length,
                              std::span<const PotentialSample> samples);

// Columns: terms, potential. The closed form is the last row, terms "closed".
Table convergence_csv(const ConvergenceTable& table);
// {x, L, rows: [{terms, potential}], closed_form}
nlohmann::json convergence_json(const ConvergenceTable& table);

// Columns: N, energy, pib_energy, defect (empty for E <= 0)
Table energies_table(const EigenSolution& solution);
// Columns: x, psi_1, ..., psi_k
Table states_table(const EigenSolution& solution);
nlohmann::json solution_json(const EigenSolution& solution, bool with_states);

// Columns: L, E1..Ek, PIB1..PIBk
Table energy_sweep_table(std::span<const EnergySweepRow> rows);
nlohmann::json energy_sweep_json(std::span<const EnergySweepRow> rows);

// Columns: L, dE_numeric, dE_analytic_abs, dE_analytic_signed
Table splitting_table(std::span<const SplittingRecord> records);
nlohmann::json splitting_json(std::span<const SplittingRecord> records);

// Columns: L, x, psi_1, ..., psi_k, parity_1, ..., parity_k
Table waveforms_table(std::span<const EigenSolution> solutions);
nlohmann::json waveforms_json(std::span<const EigenSolution> solutions);

// Columns: n, energy, limiting, relative_error. Level n pairs with image
// state ceil(n / 2).
Table limits_table(const EigenSolution& solution);
nlohmann::json limits_json(const EigenSolution& solution);

}  // namespace imagewell::report
