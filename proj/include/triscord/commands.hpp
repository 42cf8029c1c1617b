#pragma once

// Implementation of the `triscord` subcommands. Kept in the library so the
// tests drive them without spawning processes.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triscord/correlations.hpp"
#include "triscord/oracle.hpp"
#include "triscord/xstate.hpp"

namespace triscord::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailure = 1,
  kExitConstraintViolation = 2,
  kExitUsage = 64,
  kExitIoError = 73,
};

inline constexpr std::uint64_t kDefaultSeed = 12345;

// --seed flag, else TRISCORD_SEED, else kDefaultSeed. Throws std::invalid_argument
// on a malformed environment value.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

// Strict decimal parse; the whole string must be consumed.
std::optional<double> parse_real(std::string_view text);

// Fixed 9 significant digits, '.' separator.
std::string format_number(double v);

// ---- report ----

std::string report_json(const CorrelationReport& r);
std::string report_table(const CorrelationReport& r);

int cmd_report(const XParams& p, bool json, std::ostream& out, std::ostream& err);

// ---- sweep ----

enum class Slice { C1EqC2, A1Zero, C2Zero };
enum class Quantity { D3, N3, T3, J3, SCond, Branch };

std::optional<Slice> parse_slice(std::string_view name);
std::optional<Quantity> parse_quantity(std::string_view name);
const char* to_string(Slice s) noexcept;
const char* to_string(Quantity q) noexcept;

struct SweepSpec {
  Slice slice = Slice::A1Zero;
  int n = 201;
  std::string output;
  std::vector<Quantity> quantities = {Quantity::D3, Quantity::N3};
};

struct SliceAxes {
  std::string x_name;
  std::string y_name;
  double x_lo, x_hi, y_lo, y_hi;
};

// Bounding box of the valid region of the slice.
SliceAxes slice_axes(Slice s);
XParams slice_point(Slice s, double x, double y);

struct SweepSummary {
  std::size_t rows = 0;
  double max_d3 = -1.0;
  double argmax_x = 0.0;
  double argmax_y = 0.0;
};

// Writes the CSV (header + one row per valid grid point, x-major ascending).
SweepSummary write_sweep(const SweepSpec& spec, std::ostream& csv);

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err);

// ---- stats ----

struct BranchStats {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::array<std::size_t, 3> counts{};

  double share_percent(Branch b) const noexcept;
};

BranchStats branch_stats(std::size_t samples, std::uint64_t seed);

int cmd_stats(std::size_t samples, std::uint64_t seed, std::ostream& out);

// ---- check ----

// Fixed states always checked in addition to the random sample.
const std::vector<XParams>& benchmark_states();

struct CheckOptions {
  std::size_t samples = 100;
  int grid = 48;
  std::uint64_t seed = kDefaultSeed;
  bool refine = true;
};

struct CheckSummary {
  std::vector<ValidationResult> results;
  std::size_t worst = 0;  // index of the largest |gap|
  bool all_pass = true;
};

CheckSummary run_check(const CheckOptions& opt, const AnalyticCondEntropy& analytic = conditional_entropy);

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err,
              const AnalyticCondEntropy& analytic = conditional_entropy);

}  // namespace triscord::cli
