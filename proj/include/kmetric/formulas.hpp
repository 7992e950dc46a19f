#pragma once

#include <string>

#include "kmetric/constructions.hpp"
#include "kmetric/solver.hpp"

namespace kmetric {

// Closed-form values for joined families. Outside the stated (n, k) ranges
// these throw OutOfRange rather than extrapolate.
//
// fan(n):   k=1 for n >= 1, k=2 for n >= 2, k=3 for n >= 4.
// wheel(n): k=1,2 for n >= 3, k=3,4 for n >= 5.
int fan_dim(int n, int k);
int wheel_dim(int n, int k);

// Dimensional k of join(K1, h): min of c_of_h(h) and order(h)-maxdeg(h)+1.
int join_dimensional_k(const Graph& h);  // throws TrivialGraph

// ----- Prediction -----------------------------------------------------------
// What a statement claims about one instance. Inapplicable predictions carry
// the failed hypothesis in `reason` and never guess a value.
enum class PredictionKind {
  Exact,             // observed must equal lower (== upper)
  Range,             // lower <= observed <= upper
  UpperBound,        // observed <= upper
  StrictUpperBound,  // observed < upper
};

struct Prediction {
  bool applicable = false;
  std::string reason;
  PredictionKind kind = PredictionKind::Exact;
  long lower = 0;
  long upper = 0;

  static Prediction inapplicable(std::string why);
  static Prediction exact(long v);
  static Prediction range(long lo, long hi);
  static Prediction upper_bound(long hi);
  static Prediction strict_upper(long hi);

  bool matches(long observed) const;
  // Range predictions that collapse to a point act like Exact.
  bool is_exact() const {
    return kind == PredictionKind::Exact ||
           (kind == PredictionKind::Range && lower == upper);
  }
};

// ----- corona statements ------------------------------------------------------
// Each function mirrors one statement's hypotheses exactly; any miss yields
// Inapplicable. Solver-backed terms (attachment dims, hub indicators) honor
// `opts`.

// Dimensional k of the corona equals c_of_family(attachments). Needs a
// connected base of order >= 2 and non-trivial attachments.
Prediction corona_dimensional_value(const CoronaSpec& spec);

// For connected non-trivial attachments and 1 <= k <= c_of_family:
// sum dim_k(H_i) <= dim_k(corona) <= sum |V(H_i)|.
Prediction sandwich_bounds(const CoronaSpec& spec, int k,
                           const SolveOptions& opts = {});

// dim_2(corona) = sum |V(H_i)| exactly when every vertex of every attachment
// has a twin; otherwise strictly below that sum.
Prediction twin_dim2_equality(const CoronaSpec& spec);

// Attachments of diameter <= 2: dim_k(corona) = sum dim_k(H_i) for
// 1 <= k <= min dimensional_k(H_i).
Prediction diam2_equality(const CoronaSpec& spec, int k,
                          const SolveOptions& opts = {});

// dim_k(corona) <= sum (dim_k(join(K1,H_i)) - f_of_h_k(H_i, k)) for
// 1 <= k <= min dimensional_k(join(K1, H_i)).
Prediction k1h_upper_bound(const CoronaSpec& spec, int k,
                           const SolveOptions& opts = {});

// Attachments each of diameter >= 6, or a cycle of order >= 7:
// dim_k(corona) = sum dim_k(join(K1,H_i)) for 1 <= k <= c_of_family. The same
// value is claimed for the complemented family and for join(K1,.) applied to
// every attachment.
Prediction diam6_equality(const CoronaSpec& spec, int k,
                          const SolveOptions& opts = {});

// Uniform all-path or all-cycle families, via the fan/wheel closed forms:
// paths need order >= 7 for k=1 and >= 6 for k=2,3; cycles need order >= 7
// for k=1..4. Claim extends to the complemented and joined variants as well.
Prediction corona_paths_cycles_closed(const CoronaSpec& spec, int k);

// Attachments all delta-regular with girth >= 5 (forests count as infinite
// girth): the corona's dimensional k is exactly 2*delta.
Prediction girth5_regular_value(const CoronaSpec& spec);

}  // namespace kmetric
