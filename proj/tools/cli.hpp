#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "freespec/rank.hpp"
#include "freespec/verify.hpp"

namespace freespec::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadArgs = 2;
inline constexpr int kExitUnavailable = 3;

inline constexpr int kMaxExactOrder = 24;

// Record builders. Each returns a JSON array of flat objects; rationals are "p/q" strings.
json moments_records(const RankParam& rank, double t, int n_max);
json stationary_records(const RankParam& rank, int points);
json flow_records(const RankParam& rank, double t_end, int steps, const std::vector<double>& zs);
json blowup_records(const RankParam& rank, double t);
json jacobi_records(const RankParam& rank, double t, int n_max);
json verify_records(const std::vector<Check>& checks);

/// Fixed CSV column order per command.
const std::vector<std::string>& csv_header(const std::string& command);
void write_csv(const std::string& command, const json& records, std::ostream& os);
void write_json(const json& records, std::ostream& os);

/// Human-readable pass/fail matrix.
void print_matrix(const std::vector<Check>& checks, std::ostream& os);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace freespec::cli
