#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opensteady/cli/config.hpp"

namespace opensteady::cli {

/// One CSV row. Quantities that were not requested, or whose solve failed,
/// are empty.
struct SweepRecord {
  std::string model;
  double t1 = 0.0;
  double t2 = 0.0;
  double j = 0.0;
  std::optional<double> u;
  std::optional<double> s;
  std::optional<double> c_t1;
  std::optional<double> c_t2;
  std::optional<double> f_gibbs_t1;
  std::optional<double> f_gibbs_t2;
  std::vector<double> populations;
  /// Population of the highest basis state; used for the Fock cutoff warning.
  double top_level_population = 0.0;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

/// Parameters of every grid point in row-major order (axis1 outer).
std::vector<ModelParams> sweep_grid(const SweepSpec& spec);

/// Evaluates the requested quantities at one parameter point. Solver errors
/// are captured in SweepRecord::error rather than thrown.
SweepRecord evaluate_point(const SweepSpec& spec, const ModelParams& params);

/// Evaluates the whole grid with up to `workers` concurrent solves. Output
/// order is the grid order regardless of completion order.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int workers);

std::string csv_header(const SweepSpec& spec);
std::string csv_row(const SweepSpec& spec, const SweepRecord& record);
void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRecord>& records);

/// 12 significant digits, '.' decimal separator, locale independent.
std::string format_number(double value);

/// Fock tail above which the CLI warns that the cutoff is too small.
inline constexpr double kTailWarning = 1e-6;

}  // namespace opensteady::cli
