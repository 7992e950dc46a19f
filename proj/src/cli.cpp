#include "kmetric/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "kmetric/constructions.hpp"
#include "kmetric/corpus.hpp"
#include "kmetric/expr.hpp"
#include "kmetric/metric_sets.hpp"
#include "kmetric/random_graphs.hpp"
#include "kmetric/solver.hpp"

namespace kmetric {

namespace {

// ----- small formatting helpers ----------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string pad(const std::string& s, size_t w) {
  return s + std::string(s.size() < w ? w - s.size() : 0, ' ');
}

std::string ints_joined(const std::vector<int>& xs, char sep = ' ') {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

const char* proof_name(Proof p) {
  return p == Proof::Exact ? "exact" : "greedy-upper-bound";
}

std::string predicted_str(const Prediction& p) {
  if (!p.applicable) return "-";
  switch (p.kind) {
    case PredictionKind::Exact: return std::to_string(p.lower);
    case PredictionKind::Range:
      return std::to_string(p.lower) + ".." + std::to_string(p.upper);
    case PredictionKind::UpperBound: return "<=" + std::to_string(p.upper);
    case PredictionKind::StrictUpperBound:
      return "<" + std::to_string(p.upper);
  }
  return "-";
}

std::string observed_str(const std::optional<long>& o) {
  return o ? std::to_string(*o) : "-";
}

// Strict "a" or "a..b" (inclusive). Returns false on anything else.
bool parse_span(const std::string& s, int& lo, int& hi) {
  auto read_int = [](std::string_view v, int& x) {
    const char* b = v.data();
    const char* e = b + v.size();
    auto [p, ec] = std::from_chars(b, e, x);
    return ec == std::errc{} && p == e;
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    if (!read_int(s, lo)) return false;
    hi = lo;
    return true;
  }
  return read_int(std::string_view(s).substr(0, dots), lo) &&
         read_int(std::string_view(s).substr(dots + 2), hi) && lo <= hi;
}

// Top-level comma split of "H1,H2,...", keeping the sub-expressions as text so
// reports can name each attachment.
std::vector<std::string> split_attachments(const std::string& list) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : list) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.push_back(cur);
  for (std::string& s : out) {
    const auto a = s.find_first_not_of(" \t");
    const auto b = s.find_last_not_of(" \t");
    s = a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  }
  return out;
}

// ----- report rendering (sweep + verify) --------------------------------------

struct Tally {
  long rows = 0, confirmed = 0, bound_held = 0, inapplicable = 0, skipped = 0,
       violated = 0;
  void count(Verdict v) {
    ++rows;
    switch (v) {
      case Verdict::Confirmed: ++confirmed; break;
      case Verdict::BoundHeld: ++bound_held; break;
      case Verdict::Inapplicable: ++inapplicable; break;
      case Verdict::Skipped: ++skipped; break;
      case Verdict::Violated: ++violated; break;
    }
  }
};

std::string tally_str(const Tally& t) {
  std::string out;
  auto item = [&](long v, const char* what) {
    if (v == 0) return;
    if (!out.empty()) out += ", ";
    out += std::to_string(v) + " " + what;
  };
  item(t.confirmed, "confirmed");
  item(t.bound_held, "bounds held");
  item(t.inapplicable, "inapplicable");
  item(t.skipped, "skipped");
  item(t.violated, "VIOLATED");
  return out.empty() ? "nothing" : out;
}

void print_report_table(std::ostream& out, const std::vector<TheoremReport>& rs) {
  size_t wt = 7, wi = 8, wp = 9, wo = 8, wv = 7;
  for (const TheoremReport& r : rs) {
    wt = std::max(wt, std::string(to_string(r.theorem)).size());
    wi = std::max(wi, r.instance.size());
    wp = std::max(wp, predicted_str(r.predicted).size());
    wo = std::max(wo, observed_str(r.observed).size());
    wv = std::max(wv, std::string(to_string(r.verdict)).size());
  }
  auto line = [&out](std::string row) {
    row.erase(row.find_last_not_of(' ') + 1);
    out << row << "\n";
  };
  line(pad("theorem", wt + 2) + pad("instance", wi + 2) +
       pad("predicted", wp + 2) + pad("observed", wo + 2) +
       pad("verdict", wv + 2) + "note");
  for (const TheoremReport& r : rs) {
    line(pad(to_string(r.theorem), wt + 2) + pad(r.instance, wi + 2) +
         pad(predicted_str(r.predicted), wp + 2) +
         pad(observed_str(r.observed), wo + 2) +
         pad(to_string(r.verdict), wv + 2) + r.note);
  }
}

nlohmann::ordered_json reports_json_value(const std::vector<TheoremReport>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TheoremReport& r : rs)
    arr.push_back(nlohmann::ordered_json::parse(to_json(r)));
  return arr;
}

void emit_reports_csv(std::ostream& out, const std::vector<TheoremReport>& rs) {
  out << csv_header() << "\n";
  for (const TheoremReport& r : rs) out << to_csv_row(r) << "\n";
}

int report_exit_code(const Tally& t, bool exhausted_matters) {
  if (t.violated > 0) return kExitViolated;
  if (exhausted_matters && t.skipped > 0) return kExitExhausted;
  return kExitOk;
}

// ----- analyze ----------------------------------------------------------------

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = parse_graph_expr(cfg.graph_expr);
  const int n = g.order();
  const bool conn = is_connected(g);
  const std::optional<int> gr = girth(g);
  std::optional<int> diam, kdim, cval;
  if (conn) diam = n == 1 ? 0 : diameter(g);
  if (conn && n >= 2) kdim = dimensional_k(g);
  if (n >= 2) cval = c_of_h(g);
  const auto tw = twins(g);
  if (!conn)
    err << "warning: graph is disconnected; distance statistics omitted\n";

  auto opt_str = [](const std::optional<int>& v, const char* none) {
    return v ? std::to_string(*v) : std::string(none);
  };
  std::string twin_str;
  for (const auto& [a, b] : tw) {
    if (!twin_str.empty()) twin_str += ';';
    twin_str += std::to_string(a) + "-" + std::to_string(b);
  }

  switch (cfg.format) {
    case OutputFormat::Text: {
      out << "graph: " << cfg.graph_expr << "\n"
          << "order: " << n << "\n"
          << "size: " << g.edge_count() << "\n"
          << "connected: " << (conn ? "yes" : "no") << "\n"
          << "diameter: " << opt_str(diam, "-") << "\n"
          << "girth: " << opt_str(gr, "acyclic") << "\n"
          << "dimensional k: " << opt_str(kdim, "-") << "\n"
          << "C(H): " << opt_str(cval, "-") << "\n";
      out << "twins:";
      if (tw.empty()) out << " none";
      for (const auto& [a, b] : tw) out << " (" << a << "," << b << ")";
      out << "\n";
      break;
    }
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["graph"] = cfg.graph_expr;
      j["order"] = n;
      j["size"] = g.edge_count();
      j["connected"] = conn;
      j["diameter"] = diam ? nlohmann::ordered_json(*diam) : nullptr;
      j["girth"] = gr ? nlohmann::ordered_json(*gr) : nullptr;
      j["dimensional_k"] = kdim ? nlohmann::ordered_json(*kdim) : nullptr;
      j["c_value"] = cval ? nlohmann::ordered_json(*cval) : nullptr;
      auto pairs = nlohmann::ordered_json::array();
      for (const auto& [a, b] : tw) pairs.push_back({a, b});
      j["twin_pairs"] = pairs;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      out << "graph,order,size,connected,diameter,girth,dimensional_k,c_value,"
             "twin_pairs\n";
      out << csv_field(cfg.graph_expr) << "," << n << "," << g.edge_count()
          << "," << (conn ? "true" : "false") << "," << opt_str(diam, "") << ","
          << opt_str(gr, "") << "," << opt_str(kdim, "") << ","
          << opt_str(cval, "") << "," << twin_str << "\n";
      break;
    }
  }
  return kExitOk;
}

// ----- dimk -------------------------------------------------------------------

int cmd_dimk(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Graph g = parse_graph_expr(cfg.graph_expr);
  int lo = cfg.k_lo, hi = cfg.k_hi;
  if (lo == 0) {
    lo = 1;
    hi = dimensional_k(g);
  }

  struct Row {
    BasisResult r;
    double ms = 0;
  };
  std::vector<Row> rows;
  for (int k = lo; k <= hi; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    BasisResult r = solve_exact(build_instance(g, k, {}, {}, cfg.node_budget));
    const auto t1 = std::chrono::steady_clock::now();
    rows.push_back(
        {std::move(r), std::chrono::duration<double, std::milli>(t1 - t0).count()});
  }

  switch (cfg.format) {
    case OutputFormat::Text: {
      out << "graph: " << cfg.graph_expr << "  order: " << g.order() << "\n";
      out << pad("k", 4) << pad("dim", 6) << pad("nodes", 12) << pad("proof", 20)
          << "time_ms\n";
      for (const Row& row : rows) {
        std::ostringstream ms;
        ms.setf(std::ios::fixed);
        ms.precision(1);
        ms << row.ms;
        out << pad(std::to_string(row.r.k), 4) << pad(std::to_string(row.r.dim), 6)
            << pad(std::to_string(row.r.nodes_explored), 12)
            << pad(proof_name(row.r.proof), 20) << ms.str() << "\n";
      }
      break;
    }
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["graph"] = cfg.graph_expr;
      j["order"] = g.order();
      auto arr = nlohmann::ordered_json::array();
      for (const Row& row : rows) {
        nlohmann::ordered_json e;
        e["k"] = row.r.k;
        e["dim"] = row.r.dim;
        e["nodes"] = row.r.nodes_explored;
        e["proof"] = proof_name(row.r.proof);
        arr.push_back(e);
      }
      j["rows"] = arr;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      out << "graph,k,dim,nodes,proof\n";
      for (const Row& row : rows)
        out << csv_field(cfg.graph_expr) << "," << row.r.k << "," << row.r.dim
            << "," << row.r.nodes_explored << "," << proof_name(row.r.proof)
            << "\n";
      break;
    }
  }
  return kExitOk;
}

// ----- basis ------------------------------------------------------------------

int cmd_basis(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Graph g = parse_graph_expr(cfg.graph_expr);
  const int k = cfg.k_lo == 0 ? 1 : cfg.k_lo;
  const MulticoverInstance inst = build_instance(g, k, {}, {}, cfg.node_budget);
  const BasisResult res = solve_exact(inst);
  std::vector<std::vector<int>> all;
  if (cfg.all_limit > 0) all = solve_exact_all(inst, cfg.all_limit);

  const bool labeled = !g.labels().empty();
  auto label_line = [&](const std::vector<int>& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) s += ' ';
      s += g.labels()[size_t(w[i])];
    }
    return s;
  };

  std::vector<std::tuple<int, int, int>> audit;  // x, y, coverage
  if (cfg.audit) {
    Bitset chosen(g.order());
    for (int v : res.witness) chosen.set(v);
    const PairTable pt = build_pair_table(g);
    for (const DistinctiveSet& row : pt.rows)
      audit.emplace_back(row.pair.first, row.pair.second,
                         Bitset::and_count(row.members, chosen));
  }

  switch (cfg.format) {
    case OutputFormat::Text: {
      out << "graph: " << cfg.graph_expr << "  order: " << g.order() << "\n"
          << "k: " << k << "\n"
          << "dim: " << res.dim << "\n"
          << "nodes: " << res.nodes_explored << "\n"
          << "basis: " << ints_joined(res.witness) << "\n";
      if (labeled) out << "labels: " << label_line(res.witness) << "\n";
      if (!all.empty()) {
        out << "bases (up to " << cfg.all_limit << "):\n";
        for (const auto& w : all) out << "  " << ints_joined(w) << "\n";
      }
      if (cfg.audit) {
        out << "coverage by pair (need >= " << k << "):\n";
        for (const auto& [x, y, c] : audit)
          out << "  (" << x << "," << y << "): " << c << "\n";
      }
      break;
    }
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["graph"] = cfg.graph_expr;
      j["order"] = g.order();
      j["k"] = k;
      j["dim"] = res.dim;
      j["nodes"] = res.nodes_explored;
      j["proof"] = proof_name(res.proof);
      j["basis"] = res.witness;
      if (labeled) {
        auto ls = nlohmann::ordered_json::array();
        for (int v : res.witness) ls.push_back(g.labels()[size_t(v)]);
        j["basis_labels"] = ls;
      }
      if (!all.empty()) j["bases"] = all;
      if (cfg.audit) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [x, y, c] : audit) {
          nlohmann::ordered_json e;
          e["x"] = x;
          e["y"] = y;
          e["coverage"] = c;
          arr.push_back(e);
        }
        j["coverage"] = arr;
      }
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      out << "graph,k,dim,basis\n";
      if (all.empty()) {
        out << csv_field(cfg.graph_expr) << "," << k << "," << res.dim << ","
            << csv_field(ints_joined(res.witness)) << "\n";
      } else {
        for (const auto& w : all)
          out << csv_field(cfg.graph_expr) << "," << k << "," << res.dim << ","
              << csv_field(ints_joined(w)) << "\n";
      }
      break;
    }
  }
  return kExitOk;
}

// ----- sweep ------------------------------------------------------------------

struct NamedAttachment {
  std::string expr;
  Graph g;
};

bool is_fan_wheel(TheoremId id) {
  switch (id) {
    case TheoremId::FanDim1:
    case TheoremId::FanDim2:
    case TheoremId::FanDim3:
    case TheoremId::WheelDim1:
    case TheoremId::WheelDim2:
    case TheoremId::WheelDim3:
    case TheoremId::WheelDim4:
      return true;
    default:
      return false;
  }
}

void default_n_span(TheoremId id, int& lo, int& hi) {
  switch (id) {
    case TheoremId::FanDim1:
    case TheoremId::FanDim2: lo = 1; hi = 14; break;
    case TheoremId::FanDim3: lo = 3; hi = 14; break;
    case TheoremId::WheelDim1: lo = 3; hi = 14; break;
    case TheoremId::WheelDim2: lo = 3; hi = 12; break;
    case TheoremId::WheelDim3: lo = 4; hi = 12; break;
    default: lo = 5; hi = 12; break;  // WheelDim4
  }
}

// Largest k the statement can be asked about on this family; used when the
// sweep has no explicit --k.
int default_k_hi(TheoremId id, const CoronaSpec& spec) {
  switch (id) {
    case TheoremId::SandwichBounds:
    case TheoremId::Diam6Equality:
    case TheoremId::CoronaPathsClosed:
    case TheoremId::CoronaCyclesClosed:
      return c_of_family(spec.attachments);
    case TheoremId::Diam2Equality: {
      int m = kMaxOrder;
      for (const Graph& h : spec.attachments) m = std::min(m, dimensional_k(h));
      return m;
    }
    case TheoremId::K1HUpperBound: {
      int m = kMaxOrder;
      for (const Graph& h : spec.attachments)
        m = std::min(m, dimensional_k(join(complete(1), h).first));
      return m;
    }
    default:
      return 0;  // statement has no k parameter
  }
}

void add_corona_tasks(std::vector<CheckTask>& tasks, TheoremId id,
                      const CoronaSpec& spec, const std::string& name, int k_lo,
                      int k_hi, const SolveOptions& opts) {
  auto push = [&](int k, std::function<TheoremReport()> run) {
    tasks.push_back({id, name + " k=" + std::to_string(k), std::move(run)});
  };
  switch (id) {
    case TheoremId::CoronaDimensionalValue:
      tasks.push_back({id, name, [spec, name] {
                         return check_corona_dimensional(spec, name);
                       }});
      return;
    case TheoremId::Girth5Regular2Delta:
      tasks.push_back(
          {id, name, [spec, name] { return check_girth5_regular(spec, name); }});
      return;
    case TheoremId::TwinDim2Equality:
      tasks.push_back({id, name + " k=2", [spec, name, opts] {
                         return check_twin_dim2(spec, name, opts);
                       }});
      return;
    default: break;
  }
  if (k_lo == 0) {
    k_lo = 1;
    k_hi = std::max(1, default_k_hi(id, spec));
  }
  for (int k = k_lo; k <= k_hi; ++k) {
    switch (id) {
      case TheoremId::SandwichBounds:
        push(k, [spec, k, name, opts] {
          return check_sandwich(spec, k, name, opts);
        });
        break;
      case TheoremId::Diam2Equality:
        push(k, [spec, k, name, opts] { return check_diam2(spec, k, name, opts); });
        break;
      case TheoremId::K1HUpperBound:
        push(k,
             [spec, k, name, opts] { return check_k1h_upper(spec, k, name, opts); });
        break;
      case TheoremId::Diam6Equality:
        push(k, [spec, k, name, opts] {
          return check_diam6(spec, k, name, CoronaVariant::Direct, opts);
        });
        break;
      default:  // CoronaPathsClosed / CoronaCyclesClosed
        push(k, [spec, k, name, opts] {
          return check_paths_cycles(spec, k, name, CoronaVariant::Direct, opts);
        });
        break;
    }
  }
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const TheoremId id = *cfg.only;
  const SolveOptions opts{cfg.node_budget};
  std::vector<CheckTask> tasks;

  if (is_fan_wheel(id)) {
    int lo = cfg.n_lo, hi = cfg.n_hi;
    if (lo == 0) default_n_span(id, lo, hi);
    const bool fans = id == TheoremId::FanDim1 || id == TheoremId::FanDim2 ||
                      id == TheoremId::FanDim3;
    const int k = id == TheoremId::FanDim1   ? 1
                  : id == TheoremId::FanDim2 ? 2
                  : id == TheoremId::FanDim3 ? 3
                  : id == TheoremId::WheelDim1 ? 1
                  : id == TheoremId::WheelDim2 ? 2
                  : id == TheoremId::WheelDim3 ? 3
                                               : 4;
    for (int n = lo; n <= hi; ++n) {
      const std::string label = (fans ? "F" : "W") + std::to_string(n);
      tasks.push_back({id, label, [fans, n, k, opts] {
                         return fans ? check_fan_dim(n, k, opts)
                                     : check_wheel_dim(n, k, opts);
                       }});
    }
  } else if (id == TheoremId::JoinDimensionalK) {
    if (cfg.attach_list.empty()) {
      err << "error: sweep JoinDimensionalK needs --attach \"H1,H2,...\"\n";
      return kExitUsage;
    }
    for (const std::string& e : split_attachments(cfg.attach_list)) {
      const Graph h = parse_graph_expr(e);
      tasks.push_back({id, "join(K1;" + e + ")",
                       [h, e] { return check_join_dimensional(h, e); }});
    }
  } else if (cfg.random_count > 0) {
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.random_count; ++i) {
      const CoronaSpec spec = random_corona_spec(rng, 3, 5);
      std::string name = "random#" + std::to_string(i) + " orders=" +
                         std::to_string(spec.base.order()) + ":";
      for (size_t a = 0; a < spec.attachments.size(); ++a) {
        if (a) name += ",";
        name += std::to_string(spec.attachments[a].order());
      }
      add_corona_tasks(tasks, id, spec, name, cfg.k_lo, cfg.k_hi, opts);
    }
  } else {
    if (cfg.base_expr.empty() || cfg.attach_list.empty()) {
      err << "error: sweep " << to_string(id)
          << " needs --base and --attach (or --random N)\n";
      return kExitUsage;
    }
    CoronaSpec spec;
    spec.base = parse_graph_expr(cfg.base_expr);
    std::vector<std::string> exprs = split_attachments(cfg.attach_list);
    for (const std::string& e : exprs)
      spec.attachments.push_back(parse_graph_expr(e));
    const std::string name = variant_expr(cfg.base_expr, exprs,
                                          CoronaVariant::Direct);
    add_corona_tasks(tasks, id, spec, name, cfg.k_lo, cfg.k_hi, opts);
  }

  const std::vector<TheoremReport> reports = run_check_tasks(tasks, cfg.threads);
  Tally t;
  for (const TheoremReport& r : reports) t.count(r.verdict);

  switch (cfg.format) {
    case OutputFormat::Text:
      print_report_table(out, reports);
      out << "\n" << t.rows << " rows: " << tally_str(t) << "\n";
      break;
    case OutputFormat::Json:
      out << reports_to_json(reports) << "\n";
      break;
    case OutputFormat::Csv:
      emit_reports_csv(out, reports);
      break;
  }
  return report_exit_code(t, /*exhausted_matters=*/false);
}

// ----- verify -----------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  CorpusOptions copts;
  copts.only = cfg.only;
  copts.node_budget = cfg.node_budget;
  copts.threads = cfg.threads;
  const std::vector<TheoremReport> reports = run_verification_corpus(copts);

  std::map<TheoremId, Tally> per;
  Tally total;
  for (const TheoremReport& r : reports) {
    per[r.theorem].count(r.verdict);
    total.count(r.verdict);
  }

  switch (cfg.format) {
    case OutputFormat::Text: {
      print_report_table(out, reports);
      out << "\nsummary:\n";
      for (TheoremId id : all_theorem_ids()) {
        const auto it = per.find(id);
        if (it == per.end()) continue;
        out << "  " << pad(to_string(id), 24) << it->second.rows
            << " rows: " << tally_str(it->second) << "\n";
      }
      out << "total: " << total.rows << " rows: " << tally_str(total) << "\n";
      break;
    }
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["reports"] = reports_json_value(reports);
      auto sum = nlohmann::ordered_json::array();
      for (TheoremId id : all_theorem_ids()) {
        const auto it = per.find(id);
        if (it == per.end()) continue;
        nlohmann::ordered_json e;
        e["theorem"] = to_string(id);
        e["rows"] = it->second.rows;
        e["confirmed"] = it->second.confirmed;
        e["bound_held"] = it->second.bound_held;
        e["inapplicable"] = it->second.inapplicable;
        e["skipped"] = it->second.skipped;
        e["violated"] = it->second.violated;
        sum.push_back(e);
      }
      j["summary"] = sum;
      j["violations"] = total.violated;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      emit_reports_csv(out, reports);
      break;
  }
  return report_exit_code(total, /*exhausted_matters=*/true);
}

// ----- argument parsing and dispatch ------------------------------------------

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "analyze") return cmd_analyze(cfg, out, err);
    if (cfg.command == "dimk") return cmd_dimk(cfg, out, err);
    if (cfg.command == "basis") return cmd_basis(cfg, out, err);
    if (cfg.command == "sweep") return cmd_sweep(cfg, out, err);
    return cmd_verify(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::KTooLarge:
      case ErrorCode::Infeasible:
        return kExitInfeasible;
      case ErrorCode::ResourceExhausted:
        return kExitExhausted;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  std::string format_str = "text", k_str, n_str, theorem_str, only_str;

  CLI::App app{"k-metric generators, bases and dimension of connected graphs"};
  app.name("kmetric");

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_str, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--budget", cfg.node_budget,
                    "search-node budget before giving up")
        ->envname("KMETRIC_NODE_BUDGET")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "worker threads")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "order, size, diameter, girth, twins, C(H), dimensional k");
  analyze->add_option("expr", cfg.graph_expr, "graph expression or @file")
      ->required();
  add_common(analyze);

  CLI::App* dimk =
      app.add_subcommand("dimk", "k-metric dimension over a k range");
  dimk->add_option("expr", cfg.graph_expr, "graph expression or @file")
      ->required();
  dimk->add_option("--k", k_str,
                   "k or inclusive range a..b (default: 1..dimensional k)");
  add_common(dimk);

  CLI::App* basis = app.add_subcommand(
      "basis", "one optimal k-metric basis, or several with --all");
  basis->add_option("expr", cfg.graph_expr, "graph expression or @file")
      ->required();
  basis->add_option("--k", cfg.k_lo, "parameter k (default 1)")
      ->check(CLI::PositiveNumber);
  basis->add_option("--all", cfg.all_limit, "list up to N optimal bases")
      ->check(CLI::PositiveNumber);
  basis->add_flag("--audit", cfg.audit,
                  "show per-pair coverage of the basis (text/json)");
  add_common(basis);

  CLI::App* sweep =
      app.add_subcommand("sweep", "check one statement across a range");
  sweep->add_option("theorem", theorem_str, "statement name")->required();
  sweep->add_option("--n", n_str, "order range a..b for fan/wheel sweeps");
  sweep->add_option("--k", k_str, "k or range a..b for corona sweeps");
  sweep->add_option("--base", cfg.base_expr, "corona base expression");
  sweep->add_option("--attach", cfg.attach_list,
                    "comma-separated attachment expressions");
  sweep->add_option("--random", cfg.random_count,
                    "check N random corona instances instead of --base/--attach")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", cfg.seed, "RNG seed for --random");
  add_common(sweep);

  CLI::App* verify =
      app.add_subcommand("verify", "run the full curated statement corpus");
  verify->add_option("--only", only_str, "restrict to one statement");
  add_common(verify);

  app.require_subcommand(1);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  cfg.format = format_str == "json"  ? OutputFormat::Json
               : format_str == "csv" ? OutputFormat::Csv
                                     : OutputFormat::Text;
  if (!k_str.empty() && !parse_span(k_str, cfg.k_lo, cfg.k_hi)) {
    err << "error: --k wants an integer or range a..b, got '" << k_str << "'\n";
    return kExitUsage;
  }
  if (!n_str.empty() && !parse_span(n_str, cfg.n_lo, cfg.n_hi)) {
    err << "error: --n wants an integer or range a..b, got '" << n_str << "'\n";
    return kExitUsage;
  }
  if (!k_str.empty() && cfg.k_lo < 1) {
    err << "error: k must be at least 1\n";
    return kExitUsage;
  }

  const auto resolve_theorem = [&](const std::string& s) {
    std::optional<TheoremId> id = parse_theorem_id(s);
    if (!id) {
      err << "error: unknown statement '" << s << "'; valid names:";
      for (TheoremId t : all_theorem_ids()) err << " " << to_string(t);
      err << "\n";
    }
    return id;
  };

  if (app.got_subcommand(analyze)) cfg.command = "analyze";
  if (app.got_subcommand(dimk)) cfg.command = "dimk";
  if (app.got_subcommand(basis)) {
    cfg.command = "basis";
    if (cfg.audit && cfg.format == OutputFormat::Csv) {
      err << "error: --audit has no csv rendering; use text or json\n";
      return kExitUsage;
    }
  }
  if (app.got_subcommand(sweep)) {
    cfg.command = "sweep";
    cfg.only = resolve_theorem(theorem_str);
    if (!cfg.only) return kExitUsage;
  }
  if (app.got_subcommand(verify)) {
    cfg.command = "verify";
    if (!only_str.empty()) {
      cfg.only = resolve_theorem(only_str);
      if (!cfg.only) return kExitUsage;
    }
  }

#ifdef _OPENMP
  omp_set_num_threads(std::max(1, cfg.threads));
#endif
  return dispatch(cfg, out, err);
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace kmetric
