#include "kmetric/formulas.hpp"

#include <algorithm>
#include <string>

#include "kmetric/metric_sets.hpp"

namespace kmetric {

namespace {

[[noreturn]] void out_of_range(const char* family, int n, int k) {
  fail(ErrorCode::OutOfRange, std::string(family) + " closed form undefined for n=" +
                                  std::to_string(n) + ", k=" + std::to_string(k));
}

}  // namespace

int fan_dim(int n, int k) {
  switch (k) {
    case 1:
      if (n < 1) out_of_range("fan", n, k);
      if (n == 1) return 1;
      if (n == 2 || n == 3) return 2;
      if (n == 6) return 3;
      return (2 * n + 2) / 5;
    case 2:
      if (n < 2) out_of_range("fan", n, k);
      if (n == 2) return 3;
      if (n <= 5) return 4;
      return (n + 2) / 2;  // ceil((n+1)/2)
    case 3:
      if (n < 4) out_of_range("fan", n, k);
      if (n <= 5) return 5;
      return n - (n - 4) / 5;
    default:
      out_of_range("fan", n, k);
  }
}

int wheel_dim(int n, int k) {
  switch (k) {
    case 1:
      if (n < 3) out_of_range("wheel", n, k);
      if (n == 3 || n == 6) return 3;
      if (n == 4 || n == 5) return 2;
      return (2 * n + 2) / 5;
    case 2:
      if (n < 3) out_of_range("wheel", n, k);
      if (n <= 6) return 4;
      return (n + 1) / 2;  // ceil(n/2)
    case 3:
      if (n < 5) out_of_range("wheel", n, k);
      if (n <= 6) return 5;
      return n - n / 5;
    case 4:
      if (n < 5) out_of_range("wheel", n, k);
      if (n <= 6) return 6;
      return n;
    default:
      out_of_range("wheel", n, k);
  }
}

int join_dimensional_k(const Graph& h) {
  if (h.order() < 2)
    fail(ErrorCode::TrivialGraph, "join_dimensional_k needs order >= 2");
  return std::min(c_of_h(h), h.order() - h.max_degree() + 1);
}

// ----- Prediction ------------------------------------------------------------

Prediction Prediction::inapplicable(std::string why) {
  Prediction p;
  p.applicable = false;
  p.reason = std::move(why);
  return p;
}
Prediction Prediction::exact(long v) {
  return Prediction{true, {}, PredictionKind::Exact, v, v};
}
Prediction Prediction::range(long lo, long hi) {
  return Prediction{true, {}, PredictionKind::Range, lo, hi};
}
Prediction Prediction::upper_bound(long hi) {
  return Prediction{true, {}, PredictionKind::UpperBound, 0, hi};
}
Prediction Prediction::strict_upper(long hi) {
  return Prediction{true, {}, PredictionKind::StrictUpperBound, 0, hi};
}

bool Prediction::matches(long observed) const {
  switch (kind) {
    case PredictionKind::Exact: return observed == lower;
    case PredictionKind::Range: return lower <= observed && observed <= upper;
    case PredictionKind::UpperBound: return observed <= upper;
    case PredictionKind::StrictUpperBound: return observed < upper;
  }
  return false;
}

// ----- corona statements --------------------------------------------------------

namespace {

// Checks shared by every corona statement; extra hypotheses layer on top.
std::optional<std::string> corona_shape_problem(const CoronaSpec& s,
                                                bool need_connected_attachments) {
  if (s.base.order() < 2) return "base must have at least two vertices";
  if (!is_connected(s.base)) return "base must be connected";
  if (int(s.attachments.size()) != s.base.order())
    return "family size must equal base order";
  for (const Graph& h : s.attachments) {
    if (h.order() < 2) return "attachments must be non-trivial";
    if (need_connected_attachments && !is_connected(h))
      return "attachments must be connected";
  }
  return std::nullopt;
}

long family_order_sum(const CoronaSpec& s) {
  long t = 0;
  for (const Graph& h : s.attachments) t += h.order();
  return t;
}

bool every_vertex_twinned(const Graph& h) {
  std::vector<char> twinned(size_t(h.order()), 0);
  for (auto [x, y] : twins(h)) twinned[size_t(x)] = twinned[size_t(y)] = 1;
  return std::all_of(twinned.begin(), twinned.end(), [](char c) { return c != 0; });
}

bool is_path_graph(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.order() - 1 && g.max_degree() <= 2;
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

}  // namespace

Prediction corona_dimensional_value(const CoronaSpec& spec) {
  if (auto why = corona_shape_problem(spec, false))
    return Prediction::inapplicable(*why);
  return Prediction::exact(c_of_family(spec.attachments));
}

Prediction sandwich_bounds(const CoronaSpec& spec, int k,
                           const SolveOptions& opts) {
  if (auto why = corona_shape_problem(spec, true))
    return Prediction::inapplicable(*why);
  const int kmax = c_of_family(spec.attachments);
  if (k < 1 || k > kmax)
    return Prediction::inapplicable("k outside 1..c_of_family = 1.." +
                                    std::to_string(kmax));
  long lo = 0;
  for (const Graph& h : spec.attachments) lo += dim_k(h, k, opts);
  return Prediction::range(lo, family_order_sum(spec));
}

Prediction twin_dim2_equality(const CoronaSpec& spec) {
  if (auto why = corona_shape_problem(spec, true))
    return Prediction::inapplicable(*why);
  const long total = family_order_sum(spec);
  for (const Graph& h : spec.attachments) {
    if (!every_vertex_twinned(h)) return Prediction::strict_upper(total);
  }
  return Prediction::exact(total);
}

Prediction diam2_equality(const CoronaSpec& spec, int k,
                          const SolveOptions& opts) {
  if (auto why = corona_shape_problem(spec, true))
    return Prediction::inapplicable(*why);
  int kmax = kMaxOrder;
  for (const Graph& h : spec.attachments) {
    if (diameter(h) > 2)
      return Prediction::inapplicable("attachment of diameter > 2");
    kmax = std::min(kmax, dimensional_k(h));
  }
  if (k < 1 || k > kmax)
    return Prediction::inapplicable(
        "k outside 1..min dimensional_k(H_i) = 1.." + std::to_string(kmax));
  long total = 0;
  for (const Graph& h : spec.attachments) total += dim_k(h, k, opts);
  return Prediction::exact(total);
}

Prediction k1h_upper_bound(const CoronaSpec& spec, int k,
                           const SolveOptions& opts) {
  if (auto why = corona_shape_problem(spec, false))
    return Prediction::inapplicable(*why);
  int kmax = kMaxOrder;
  for (const Graph& h : spec.attachments)
    kmax = std::min(kmax, dimensional_k(join(complete(1), h).first));
  if (k < 1 || k > kmax)
    return Prediction::inapplicable(
        "k outside 1..min dimensional_k(K1+H_i) = 1.." + std::to_string(kmax));
  long total = 0;
  for (const Graph& h : spec.attachments) {
    total += dim_k(join(complete(1), h).first, k, opts) - f_of_h_k(h, k, opts);
  }
  return Prediction::upper_bound(total);
}

Prediction diam6_equality(const CoronaSpec& spec, int k,
                          const SolveOptions& opts) {
  if (auto why = corona_shape_problem(spec, true))
    return Prediction::inapplicable(*why);
  for (const Graph& h : spec.attachments) {
    const bool long_cycle = is_cycle_graph(h) && h.order() >= 7;
    if (!long_cycle && diameter(h) < 6)
      return Prediction::inapplicable(
          "attachment needs diameter >= 6 or a cycle of order >= 7");
  }
  const int kmax = c_of_family(spec.attachments);
  if (k < 1 || k > kmax)
    return Prediction::inapplicable("k outside 1..c_of_family = 1.." +
                                    std::to_string(kmax));
  long total = 0;
  for (const Graph& h : spec.attachments)
    total += dim_k(join(complete(1), h).first, k, opts);
  return Prediction::exact(total);
}

Prediction corona_paths_cycles_closed(const CoronaSpec& spec, int k) {
  if (auto why = corona_shape_problem(spec, true))
    return Prediction::inapplicable(*why);

  bool all_paths = true, all_cycles = true;
  for (const Graph& h : spec.attachments) {
    all_paths = all_paths && is_path_graph(h);
    all_cycles = all_cycles && is_cycle_graph(h);
  }
  if (!all_paths && !all_cycles)
    return Prediction::inapplicable("family must be all paths or all cycles");

  long total = 0;
  if (all_paths) {
    const int min_order = (k == 1) ? 7 : 6;
    if (k < 1 || k > 3)
      return Prediction::inapplicable("paths: k must be in 1..3");
    for (const Graph& h : spec.attachments) {
      if (h.order() < min_order)
        return Prediction::inapplicable("paths: every order must be >= " +
                                        std::to_string(min_order));
      total += fan_dim(h.order(), k);
    }
  } else {
    if (k < 1 || k > 4)
      return Prediction::inapplicable("cycles: k must be in 1..4");
    for (const Graph& h : spec.attachments) {
      if (h.order() < 7)
        return Prediction::inapplicable("cycles: every order must be >= 7");
      total += wheel_dim(h.order(), k);
    }
  }
  return Prediction::exact(total);
}

Prediction girth5_regular_value(const CoronaSpec& spec) {
  if (auto why = corona_shape_problem(spec, false))
    return Prediction::inapplicable(*why);
  int delta = -1;
  for (const Graph& h : spec.attachments) {
    const int d0 = h.degree(0);
    for (int v = 1; v < h.order(); ++v) {
      if (h.degree(v) != d0)
        return Prediction::inapplicable("attachment is not regular");
    }
    if (delta < 0) delta = d0;
    if (d0 != delta)
      return Prediction::inapplicable("attachments have different degrees");
    if (auto gi = girth(h); gi && *gi < 5)
      return Prediction::inapplicable("attachment girth below 5");
  }
  return Prediction::exact(2L * delta);
}

}  // namespace kmetric
