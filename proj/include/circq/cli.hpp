#pragma once

#include "circq/core.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Malformed user input. `line` is 1-based when the input is a file.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg, std::optional<std::size_t> line = std::nullopt)
        : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + msg : msg), line_(line) {}

    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    std::optional<std::size_t> line_;
};

/// Comma-separated finite reals, exactly `count` of them.
std::vector<double> parse_reals(std::string_view text, std::size_t count);

/// Rows of a CSV with header `x,y,z`. Blank lines are skipped.
std::vector<Vector3> parse_vector_csv(std::istream& in);

struct BatchRow {
    std::size_t index;
    Vector3 vector;
    std::optional<double> cos_phi;  // empty for zero vectors
    std::optional<double> phi_rad;
    std::string character;          // spacelike | null | timelike | error:zero-vector
};

std::vector<BatchRow> classify_rows(const CirculantMetric& m, const std::vector<Vector3>& vectors,
                                    const ToleranceConfig& tol);

/// JSON document with the metric, the tolerances and the row array.
std::string render_batch_report(const CirculantMetric& m, const ToleranceConfig& tol,
                                const std::vector<BatchRow>& rows);

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 verification or residual failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace circq::cli
