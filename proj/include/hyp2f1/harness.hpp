#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyp2f1/numerics.hpp"
#include "hyp2f1/series_result.hpp"

namespace hyp2f1 {

/// Settings shared by single evaluations and rasters.
struct MethodOptions {
  Complex w{0.5, 0.5};    // expansion point for onepoint-w
  Complex z0{0.5, 0.0};   // Buhring expansion point
  double rho = 0.9;       // radius for the classical-region raster
  double tol = kDefaultTolerance;
  std::optional<std::size_t> n_terms;  // fixed truncation; method default if empty
};

std::size_t default_terms(MethodId method) noexcept;

/// Region membership of z for a method. Maclaurin reports the union of the
/// six classical regions at options.rho; the oracle reports distance to the
/// cut [1, inf).
RegionVerdict method_region(MethodId method, Complex z, const MethodOptions& options = {});

/// Deterministic method choice:
/// maclaurin if |z| <= 0.5; else threepoint, twopoint, onepoint-half in that
/// order when c > b > 0 and z is in the method's region; else buhring if
/// b - a is not an integer and z is outside the z0 circle; else the Euler
/// oracle if c > b > 0. Throws NoMethodError otherwise.
MethodId select_method(const HypParams& params, Complex z,
                       const MethodOptions& options = {});

/// Every route whose predicate holds at z, in the order select_method uses.
std::vector<MethodId> candidate_methods(const HypParams& params, Complex z,
                                        const MethodOptions& options = {});

struct Evaluation {
  MethodId method = MethodId::Maclaurin;
  SeriesResult result;
  double in_region_margin = 0.0;
};

/// Evaluates with a given method. With `method` empty, tries the candidates
/// in order and returns the first converged result, or the one with the
/// smallest error estimate if none converges.
Evaluation evaluate(const HypParams& params, Complex z, std::optional<MethodId> method,
                    const MethodOptions& options = {});

// ---------------------------------------------------------------------------
// Relative-error tables

inline constexpr std::size_t kTableColumns = 5;

struct TableRow {
  double a = 0.0, b = 0.0, c = 0.0;
  Complex z{};
  std::string z_label;
  /// Relative errors printed in the published table, for side-by-side output.
  std::array<double, kTableColumns> reported_buhring{};
  std::array<double, kTableColumns> reported_featured{};
};

struct TableSpec {
  int id = 0;
  MethodId featured = MethodId::OnePointHalf;
  Complex w{0.5, 0.0};
  Complex z0{0.5, 0.0};
  std::array<int, kTableColumns> n_columns{0, 5, 10, 15, 20};
  /// Highest summation index evaluated for each column. Equal to n_columns
  /// for tables 1-3; table 4's published columns correspond to ceil(n/2).
  std::array<std::size_t, kTableColumns> term_index{0, 5, 10, 15, 20};
  std::vector<TableRow> rows;
};

/// Built-in specs for tables 1-4. `literal_n` makes table 4 use the column
/// label itself as the summation index.
TableSpec table_spec(int id, bool literal_n = false);

struct TableCell {
  std::optional<double> rel_error;
  std::string error_label;  // set when the method threw
};

struct TableRowResult {
  Complex reference{};
  double reference_est_error = 0.0;
  std::array<TableCell, kTableColumns> buhring;
  std::array<TableCell, kTableColumns> featured;
};

struct TableResult {
  TableSpec spec;
  std::vector<TableRowResult> rows;
};

TableResult run_table(const TableSpec& spec);

std::string table_to_csv(const TableResult& table);
std::string table_to_json(const TableResult& table);

/// "0.xxxE+k" with a mantissa in [0.1, 1), the format of the published tables.
std::string format_mantissa_exponent(double x);

// ---------------------------------------------------------------------------
// Region rasters

struct RasterSpec {
  MethodId method = MethodId::TwoPoint;
  double xmin = -4.0, xmax = 4.0, ymin = -4.0, ymax = 4.0;
  std::size_t res = 256;  // points per axis
  MethodOptions options;
};

inline constexpr std::size_t kMaxRasterRes = 4096;

struct RasterCell {
  double x = 0.0, y = 0.0;
  RegionVerdict verdict;
};

/// Row-major (y outer, x inner) grid of region verdicts over the closed box.
/// Throws ConfigError for non-finite or empty bounds and res outside
/// [1, 4096].
std::vector<RasterCell> region_raster(const RasterSpec& spec);
std::string raster_to_csv(const std::vector<RasterCell>& cells);

// ---------------------------------------------------------------------------
// CLI support

/// Parses "RE", "IMi", "RE+IMi", "RE-IMi" (decimal or scientific), "i", "-i",
/// and the exact tokens "exp(i*pi/3)" / "exp(-i*pi/3)". Throws ConfigError.
Complex parse_complex(std::string_view text);

/// Exit code for a failed evaluation: 3 for domain/region errors, 4 for
/// numerical breakdown, 2 for configuration errors.
int exit_code(ErrorKind kind) noexcept;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Quick invariant checks run by the `selftest` subcommand.
std::vector<CheckResult> selftest();

}  // namespace hyp2f1
