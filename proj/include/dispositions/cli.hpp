#ifndef DISPOSITIONS_CLI_HPP
#define DISPOSITIONS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dispositions/analytic.hpp"
#include "dispositions/core.hpp"

namespace dispositions::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::string_view kSweepHeader =
    "p,q,r,v_noncoop,v_coop,eu_cm,eu_sm,margin,critical_ratio,cm_rational";

// 17 significant digits; infinities print as `inf`.
std::string format_number(double value);

enum class Axis { P, Q, R, VNonCoop, VCoop };

struct AxisSpec {
  Axis axis;
  double start;
  double stop;
  std::uint64_t count;
};

// Parses `name=start:stop:count`, name one of p, q, r, vnc, vc.
AxisSpec parse_axis(std::string_view text);

struct SweepGrid {
  std::vector<AxisSpec> axes;  // outermost first
  // Values for parameters that are not swept.
  std::optional<double> p, q, r, vnc, vc;
};

struct SweepRow {
  double p, q, r, v_noncoop, v_coop;
  double eu_cm, eu_sm, margin, critical_ratio;
  bool cm_rational;
};

// Expands the grid in lexicographic order of its axes and evaluates every
// point. All points are validated before any is evaluated; the first bad one
// raises ValidationError naming its coordinates.
std::vector<SweepRow> run_sweep(const SweepGrid& grid, unsigned workers = 1);

std::string sweep_csv(const std::vector<SweepRow>& rows);

struct RunOptions {
  unsigned workers = 0;  // 0 = hardware concurrency
};

// Reads DISPOSITIONS_SIM_THREADS; unset, empty or 0 means auto.
RunOptions options_from_env();

// Entry point shared by the executable and the tests. `args` excludes the
// program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const RunOptions& options = {});

}  // namespace dispositions::cli

#endif  // DISPOSITIONS_CLI_HPP
