#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kmetric/formulas.hpp"

namespace kmetric {

// Closed catalog of checkable statements. Sweeps and the verification corpus
// address them by these names.
enum class TheoremId {
  FanDim1,
  FanDim2,
  FanDim3,
  WheelDim1,
  WheelDim2,
  WheelDim3,
  WheelDim4,
  JoinDimensionalK,
  CoronaDimensionalValue,
  Girth5Regular2Delta,
  SandwichBounds,
  TwinDim2Equality,
  Diam2Equality,
  K1HUpperBound,
  Diam6Equality,
  CoronaPathsClosed,
  CoronaCyclesClosed,
};

const char* to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(const std::string& name);
std::vector<TheoremId> all_theorem_ids();

enum class Verdict {
  Confirmed,     // exact prediction met
  BoundHeld,     // bound-only prediction met
  Inapplicable,  // hypotheses not satisfied; nothing claimed
  Violated,      // prediction contradicted by the solver
  Skipped,       // solver ran out of budget; instance marked, not judged
};

const char* to_string(Verdict v);

struct TheoremReport {
  TheoremId theorem{};
  std::string instance;  // expression the CLI could re-run
  Prediction predicted;
  std::optional<long> observed;
  Verdict verdict = Verdict::Inapplicable;
  std::string note;  // skip reason, bound kind, etc.
};

// Applies the verdict rules: inapplicable first, then exact/bound matching.
TheoremReport judge(TheoremId id, std::string instance,
                    const Prediction& predicted, std::optional<long> observed);

// Serialization. One JSON object / CSV row per report; schemas are stable.
std::string to_json(const TheoremReport& r);
std::string reports_to_json(const std::vector<TheoremReport>& rs);
std::string csv_header();
std::string to_csv_row(const TheoremReport& r);

// Corona statements come in three flavours: the family itself, its edge
// complements, and join(K1, .) of each member.
enum class CoronaVariant { Direct, ComplementFamily, JoinedFamily };

// ----- checks ----------------------------------------------------------------
// Each builds the instance, computes the prediction and the solver value, and
// judges. A spent node budget yields a Skipped report instead of throwing.
TheoremReport check_fan_dim(int n, int k, const SolveOptions& opts = {});
TheoremReport check_wheel_dim(int n, int k, const SolveOptions& opts = {});
TheoremReport check_join_dimensional(const Graph& h, const std::string& name);
TheoremReport check_corona_dimensional(const CoronaSpec& spec,
                                       const std::string& name);
TheoremReport check_girth5_regular(const CoronaSpec& spec,
                                   const std::string& name);
TheoremReport check_sandwich(const CoronaSpec& spec, int k,
                             const std::string& name,
                             const SolveOptions& opts = {});
TheoremReport check_twin_dim2(const CoronaSpec& spec, const std::string& name,
                              const SolveOptions& opts = {});
TheoremReport check_diam2(const CoronaSpec& spec, int k,
                          const std::string& name,
                          const SolveOptions& opts = {});
TheoremReport check_k1h_upper(const CoronaSpec& spec, int k,
                              const std::string& name,
                              const SolveOptions& opts = {});
TheoremReport check_diam6(const CoronaSpec& spec, int k,
                          const std::string& name,
                          CoronaVariant variant = CoronaVariant::Direct,
                          const SolveOptions& opts = {});
TheoremReport check_paths_cycles(const CoronaSpec& spec, int k,
                                 const std::string& name,
                                 CoronaVariant variant = CoronaVariant::Direct,
                                 const SolveOptions& opts = {});

// The corona a variant actually measures (complemented / joined attachments).
CoronaSpec apply_variant(const CoronaSpec& spec, CoronaVariant variant);
std::string variant_expr(const std::string& base_expr,
                         const std::vector<std::string>& attach_exprs,
                         CoronaVariant variant);

// One deferred check. Sweeps and the corpus queue these and run them with
// instance-level parallelism; reports come back in queue order either way. A
// task that runs out of budget yields a Skipped report for its label.
struct CheckTask {
  TheoremId id{};
  std::string label;
  std::function<TheoremReport()> run;
};

std::vector<TheoremReport> run_check_tasks(const std::vector<CheckTask>& tasks,
                                           int threads);

}  // namespace kmetric
