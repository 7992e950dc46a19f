#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kmetric/report.hpp"

namespace kmetric {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      // parse/usage errors, bad instances
inline constexpr int kExitInfeasible = 3; // infeasible or k too large
inline constexpr int kExitExhausted = 4;  // node budget spent
inline constexpr int kExitViolated = 5;   // some statement contradicted

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
  std::string command;
  std::string graph_expr;
  int k_lo = 0, k_hi = 0;  // 0 = unset
  OutputFormat format = OutputFormat::Text;
  long node_budget = kDefaultNodeBudget;
  int threads = 1;
  std::uint64_t seed = 0x6b6d65747269630ull;
  // command-specific extras
  std::optional<TheoremId> only;
  std::string base_expr;
  std::string attach_list;
  int n_lo = 0, n_hi = 0;
  int random_count = 0;
  int all_limit = 0;
  bool audit = false;
};

// Entry points; the second runs fully in-process for tests.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace kmetric
