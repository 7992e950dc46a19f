#include "kmetric/report.hpp"

#include <functional>
#include <sstream>

#include <json.hpp>

#include "kmetric/metric_sets.hpp"

namespace kmetric {

namespace {

struct IdName {
  TheoremId id;
  const char* name;
};

constexpr IdName kIdNames[] = {
    {TheoremId::FanDim1, "FanDim1"},
    {TheoremId::FanDim2, "FanDim2"},
    {TheoremId::FanDim3, "FanDim3"},
    {TheoremId::WheelDim1, "WheelDim1"},
    {TheoremId::WheelDim2, "WheelDim2"},
    {TheoremId::WheelDim3, "WheelDim3"},
    {TheoremId::WheelDim4, "WheelDim4"},
    {TheoremId::JoinDimensionalK, "JoinDimensionalK"},
    {TheoremId::CoronaDimensionalValue, "CoronaDimensionalValue"},
    {TheoremId::Girth5Regular2Delta, "Girth5Regular2Delta"},
    {TheoremId::SandwichBounds, "SandwichBounds"},
    {TheoremId::TwinDim2Equality, "TwinDim2Equality"},
    {TheoremId::Diam2Equality, "Diam2Equality"},
    {TheoremId::K1HUpperBound, "K1HUpperBound"},
    {TheoremId::Diam6Equality, "Diam6Equality"},
    {TheoremId::CoronaPathsClosed, "CoronaPathsClosed"},
    {TheoremId::CoronaCyclesClosed, "CoronaCyclesClosed"},
};

const char* kind_name(PredictionKind k) {
  switch (k) {
    case PredictionKind::Exact: return "exact";
    case PredictionKind::Range: return "range";
    case PredictionKind::UpperBound: return "upper";
    case PredictionKind::StrictUpperBound: return "strict-upper";
  }
  return "?";
}

}  // namespace

const char* to_string(TheoremId id) {
  for (const auto& e : kIdNames) {
    if (e.id == id) return e.name;
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(const std::string& name) {
  for (const auto& e : kIdNames) {
    if (name == e.name) return e.id;
  }
  return std::nullopt;
}

std::vector<TheoremId> all_theorem_ids() {
  std::vector<TheoremId> out;
  for (const auto& e : kIdNames) out.push_back(e.id);
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "Confirmed";
    case Verdict::BoundHeld: return "BoundHeld";
    case Verdict::Inapplicable: return "Inapplicable";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::Skipped: return "Skipped";
  }
  return "?";
}

TheoremReport judge(TheoremId id, std::string instance,
                    const Prediction& predicted, std::optional<long> observed) {
  TheoremReport r;
  r.theorem = id;
  r.instance = std::move(instance);
  r.predicted = predicted;
  r.observed = observed;
  if (!predicted.applicable) {
    r.verdict = Verdict::Inapplicable;
    r.note = predicted.reason;
    return r;
  }
  if (!observed) {
    r.verdict = Verdict::Skipped;
    r.note = "node budget exhausted";
    return r;
  }
  if (!predicted.matches(*observed)) {
    r.verdict = Verdict::Violated;
  } else {
    r.verdict = predicted.is_exact() ? Verdict::Confirmed : Verdict::BoundHeld;
  }
  return r;
}

// ----- serialization -----------------------------------------------------------

std::string to_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = to_string(r.theorem);
  j["instance"] = r.instance;
  j["applicable"] = r.predicted.applicable;
  j["reason"] = r.predicted.applicable ? "" : r.predicted.reason;
  if (r.predicted.applicable) {
    j["kind"] = kind_name(r.predicted.kind);
    switch (r.predicted.kind) {
      case PredictionKind::Exact:
        j["predicted"] = r.predicted.lower;
        break;
      case PredictionKind::Range:
        j["predicted_lower"] = r.predicted.lower;
        j["predicted_upper"] = r.predicted.upper;
        break;
      case PredictionKind::UpperBound:
      case PredictionKind::StrictUpperBound:
        j["predicted_upper"] = r.predicted.upper;
        break;
    }
  }
  if (r.observed) j["observed"] = *r.observed;
  j["verdict"] = to_string(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

std::string reports_to_json(const std::vector<TheoremReport>& rs) {
  std::ostringstream out;
  out << "[\n";
  for (size_t i = 0; i < rs.size(); ++i) {
    out << "  " << to_json(rs[i]);
    if (i + 1 < rs.size()) out << ",";
    out << "\n";
  }
  out << "]";
  return out.str();
}

std::string csv_header() {
  return "theorem,instance,applicable,kind,predicted_lower,predicted_upper,"
         "observed,verdict,note";
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv_row(const TheoremReport& r) {
  std::ostringstream out;
  out << to_string(r.theorem) << "," << csv_quote(r.instance) << ","
      << (r.predicted.applicable ? "true" : "false") << ",";
  if (r.predicted.applicable) {
    out << kind_name(r.predicted.kind) << ",";
    const bool has_lower = r.predicted.kind == PredictionKind::Exact ||
                           r.predicted.kind == PredictionKind::Range;
    if (has_lower) out << r.predicted.lower;
    out << ",";
    if (r.predicted.kind != PredictionKind::Exact)
      out << r.predicted.upper;
    else
      out << r.predicted.lower;
  } else {
    out << ",,";
  }
  out << ",";
  if (r.observed) out << *r.observed;
  out << "," << to_string(r.verdict) << ","
      << csv_quote(r.note.empty() ? (r.predicted.applicable ? "" : r.predicted.reason)
                                  : r.note);
  return out.str();
}

// ----- checks --------------------------------------------------------------------

namespace {

// Runs the solver term of a check; a spent budget becomes "no observation".
std::optional<long> observe(const std::function<long()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ResourceExhausted) return std::nullopt;
    throw;
  }
}

}  // namespace

CoronaSpec apply_variant(const CoronaSpec& spec, CoronaVariant variant) {
  if (variant == CoronaVariant::Direct) return spec;
  CoronaSpec out;
  out.base = spec.base;
  out.attachments.reserve(spec.attachments.size());
  for (const Graph& h : spec.attachments) {
    out.attachments.push_back(variant == CoronaVariant::ComplementFamily
                                  ? complement(h)
                                  : join(complete(1), h).first);
  }
  return out;
}

std::string variant_expr(const std::string& base_expr,
                         const std::vector<std::string>& attach_exprs,
                         CoronaVariant variant) {
  std::string out = "corona(" + base_expr + ";";
  for (size_t i = 0; i < attach_exprs.size(); ++i) {
    if (i) out += ",";
    switch (variant) {
      case CoronaVariant::Direct: out += attach_exprs[i]; break;
      case CoronaVariant::ComplementFamily:
        out += "comp(" + attach_exprs[i] + ")";
        break;
      case CoronaVariant::JoinedFamily:
        out += "join(K1;" + attach_exprs[i] + ")";
        break;
    }
  }
  out += ")";
  return out;
}

TheoremReport check_fan_dim(int n, int k, const SolveOptions& opts) {
  const TheoremId id = k == 1   ? TheoremId::FanDim1
                       : k == 2 ? TheoremId::FanDim2
                                : TheoremId::FanDim3;
  const std::string instance = "F" + std::to_string(n);
  Prediction p;
  try {
    p = Prediction::exact(fan_dim(n, k));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OutOfRange) throw;
    return judge(id, instance, Prediction::inapplicable(e.what()), {});
  }
  return judge(id, instance, p,
               observe([&] { return long(dim_k(fan(n), k, opts)); }));
}

TheoremReport check_wheel_dim(int n, int k, const SolveOptions& opts) {
  const TheoremId id = k == 1   ? TheoremId::WheelDim1
                       : k == 2 ? TheoremId::WheelDim2
                       : k == 3 ? TheoremId::WheelDim3
                                : TheoremId::WheelDim4;
  const std::string instance = "W" + std::to_string(n);
  Prediction p;
  try {
    p = Prediction::exact(wheel_dim(n, k));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OutOfRange) throw;
    return judge(id, instance, Prediction::inapplicable(e.what()), {});
  }
  return judge(id, instance, p,
               observe([&] { return long(dim_k(wheel(n), k, opts)); }));
}

TheoremReport check_join_dimensional(const Graph& h, const std::string& name) {
  const std::string instance = "join(K1;" + name + ")";
  Prediction p;
  try {
    p = Prediction::exact(join_dimensional_k(h));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TrivialGraph) throw;
    return judge(TheoremId::JoinDimensionalK, instance,
                 Prediction::inapplicable(e.what()), {});
  }
  const Graph jg = join(complete(1), h).first;
  return judge(TheoremId::JoinDimensionalK, instance, p,
               long(dimensional_k(jg)));
}

TheoremReport check_corona_dimensional(const CoronaSpec& spec,
                                       const std::string& name) {
  const Prediction p = corona_dimensional_value(spec);
  std::optional<long> obs;
  if (p.applicable) obs = long(dimensional_k(corona(spec).first));
  return judge(TheoremId::CoronaDimensionalValue, name, p, obs);
}

TheoremReport check_girth5_regular(const CoronaSpec& spec,
                                   const std::string& name) {
  const Prediction p = girth5_regular_value(spec);
  std::optional<long> obs;
  if (p.applicable) obs = long(dimensional_k(corona(spec).first));
  return judge(TheoremId::Girth5Regular2Delta, name, p, obs);
}

namespace {

// Shared tail: build the (possibly variant) corona, solve for k, judge.
TheoremReport judge_corona_dim(TheoremId id, const CoronaSpec& spec, int k,
                               const std::string& name, const Prediction& p,
                               const SolveOptions& opts,
                               CoronaVariant variant = CoronaVariant::Direct) {
  const std::string instance = name + " k=" + std::to_string(k);
  if (!p.applicable) return judge(id, instance, p, {});
  const CoronaSpec measured = apply_variant(spec, variant);
  return judge(id, instance, p, observe([&] {
                 return long(dim_k(corona(measured).first, k, opts));
               }));
}

}  // namespace

TheoremReport check_sandwich(const CoronaSpec& spec, int k,
                             const std::string& name, const SolveOptions& opts) {
  return judge_corona_dim(TheoremId::SandwichBounds, spec, k, name,
                          sandwich_bounds(spec, k, opts), opts);
}

TheoremReport check_twin_dim2(const CoronaSpec& spec, const std::string& name,
                              const SolveOptions& opts) {
  return judge_corona_dim(TheoremId::TwinDim2Equality, spec, 2, name,
                          twin_dim2_equality(spec), opts);
}

TheoremReport check_diam2(const CoronaSpec& spec, int k, const std::string& name,
                          const SolveOptions& opts) {
  return judge_corona_dim(TheoremId::Diam2Equality, spec, k, name,
                          diam2_equality(spec, k, opts), opts);
}

TheoremReport check_k1h_upper(const CoronaSpec& spec, int k,
                              const std::string& name, const SolveOptions& opts) {
  return judge_corona_dim(TheoremId::K1HUpperBound, spec, k, name,
                          k1h_upper_bound(spec, k, opts), opts);
}

TheoremReport check_diam6(const CoronaSpec& spec, int k, const std::string& name,
                          CoronaVariant variant, const SolveOptions& opts) {
  return judge_corona_dim(TheoremId::Diam6Equality, spec, k, name,
                          diam6_equality(spec, k, opts), opts, variant);
}

TheoremReport check_paths_cycles(const CoronaSpec& spec, int k,
                                 const std::string& name, CoronaVariant variant,
                                 const SolveOptions& opts) {
  bool cycles = true;
  for (const Graph& h : spec.attachments)
    cycles = cycles && h.order() >= 3 && h.edge_count() == h.order();
  const TheoremId id =
      cycles ? TheoremId::CoronaCyclesClosed : TheoremId::CoronaPathsClosed;
  return judge_corona_dim(id, spec, k, name, corona_paths_cycles_closed(spec, k),
                          opts, variant);
}

std::vector<TheoremReport> run_check_tasks(const std::vector<CheckTask>& tasks,
                                           int threads) {
  std::vector<TheoremReport> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const int nt = threads > 0 ? threads : 1;
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (long i = 0; i < long(tasks.size()); ++i) {
    try {
      out[size_t(i)] = tasks[size_t(i)].run();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ResourceExhausted) {
        // Budget spent before the check could intercept it (e.g. inside a
        // prediction's own solver terms). Mark and move on.
        TheoremReport r;
        r.theorem = tasks[size_t(i)].id;
        r.instance = tasks[size_t(i)].label;
        r.predicted = Prediction::inapplicable("node budget exhausted");
        r.verdict = Verdict::Skipped;
        r.note = "node budget exhausted";
        out[size_t(i)] = r;
      } else {
        errors[size_t(i)] = std::current_exception();
      }
    } catch (...) {
      errors[size_t(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace kmetric
