#ifndef HRLB_TOOLS_CLI_HPP
#define HRLB_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hrlb/kgraph.hpp"

namespace hrlb::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudget = 3 };

std::string tool_version();

// Runs one command line; output goes to `out` unless --out is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct ReportConfig {
  std::vector<std::uint32_t> n_grid;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 0;
  unsigned retry_cap = 64;
};

struct ReportRow {
  std::uint32_t n = 0;
  std::uint64_t placed = 0;  // edge-disjoint copies
  double eps = 0;            // placed / n^k
  std::uint64_t total = 0;   // all copies, exact unless capped
  bool capped = false;
  double delta = 0;  // total / n^v(F)
  double bound = 0;  // n^(v(F)-1) / n^v(F)
  std::string status;
};

inline constexpr const char* kReportColumns =
    "n,placed_edge_disjoint_count,eps,total_F_copies,delta,bound,status";

// One row per grid point, built on core(F). Throws PreconditionError when F
// is k-partite.
std::vector<ReportRow> run_report(const KGraph& f, const ReportConfig& cfg);
std::string report_csv(const std::vector<ReportRow>& rows);

}  // namespace hrlb::cli

#endif  // HRLB_TOOLS_CLI_HPP
