#pragma once

// Command implementations behind the `kelvin` executable. Each command writes
// its table to `out`, diagnostics to `err`, and returns the process exit
// status: 0 success, 1 tolerance or bound failure, 2 usage error.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace kelvin::cli {

enum class Format { csv, json, pretty };
enum class MethodChoice { bessho, ursell, paris, oracle, all };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Evenly spaced values lo, ..., hi (count of them). Parsed from "lo:hi:count".
struct Range {
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;

    std::vector<double> values() const;
};

/// Throws UsageError on malformed text.
Range parse_range(const std::string& text);

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    MethodChoice method = MethodChoice::paris;
    std::optional<int> n;  ///< empty: automatic truncation
    double abs_tol = 1e-12;
    Format format = Format::csv;
    std::optional<std::string> output_path;
    std::optional<Range> x_range;
    std::optional<Range> rho_range;
    std::optional<Range> alpha_range;
    int threads = 0;  ///< 0: KELVIN_THREADS or hardware concurrency
};

/// Cell of an output table; monostate renders as an empty field.
using Cell = std::variant<std::monostate, double, long, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Renders a table. CSV and JSON numbers use 17 significant digits.
void write_table(std::ostream& out, const Table& table, Format format,
                 const std::string& command, const RunConfig& cfg);

/// Throws UsageError unless 0 < x <= 3, 0 < rho <= 1, |alpha| <= pi/2.
void validate_point(double x, double rho, double alpha);

int cmd_eval(double x, double rho, double alpha, const RunConfig& cfg, std::ostream& out,
             std::ostream& err);
int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_coeffs(int n, const Range& x_range, double alpha, const RunConfig& cfg,
               std::ostream& out, std::ostream& err);
int cmd_field(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the commands above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kelvin::cli
