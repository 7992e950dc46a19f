#include "kmetric/corpus.hpp"

#include <string>
#include <utility>
#include <vector>

#include "kmetric/constructions.hpp"
#include "kmetric/graph.hpp"
#include "kmetric/solver.hpp"

namespace kmetric {

namespace {

// A graph together with the expression that rebuilds it on the CLI.
struct Named {
  std::string expr;
  Graph g;
};

Named P(int n) { return {"P" + std::to_string(n), path(n)}; }
Named C(int n) { return {"C" + std::to_string(n), cycle(n)}; }
Named K(int n) { return {"K" + std::to_string(n), complete(n)}; }
Named S(int n) { return {"S" + std::to_string(n), star(n)}; }
Named F(int n) { return {"F" + std::to_string(n), fan(n)}; }
Named Pet() { return {"petersen", petersen()}; }

struct NamedSpec {
  std::string base_expr;
  std::vector<std::string> attach_exprs;
  CoronaSpec spec;
};

NamedSpec make_spec(const Named& base, std::vector<Named> hs) {
  NamedSpec out;
  out.base_expr = base.expr;
  out.spec.base = base.g;
  for (Named& h : hs) {
    out.attach_exprs.push_back(std::move(h.expr));
    out.spec.attachments.push_back(std::move(h.g));
  }
  return out;
}

std::string spec_name(const NamedSpec& s,
                      CoronaVariant v = CoronaVariant::Direct) {
  return variant_expr(s.base_expr, s.attach_exprs, v);
}

struct Builder {
  std::vector<CheckTask> tasks;
  std::optional<TheoremId> only;
  SolveOptions opts;

  void add(TheoremId id, std::string label, std::function<TheoremReport()> run) {
    if (only && *only != id) return;
    tasks.push_back({id, std::move(label), std::move(run)});
  }
};

void add_fans_wheels(Builder& b) {
  const SolveOptions opts = b.opts;
  // n ranges start one step below each formula's floor so the verifier also
  // exercises the out-of-range guard (those rows come back Inapplicable).
  for (int n = 1; n <= 14; ++n)
    b.add(TheoremId::FanDim1, "F" + std::to_string(n),
          [n, opts] { return check_fan_dim(n, 1, opts); });
  for (int n = 1; n <= 14; ++n)
    b.add(TheoremId::FanDim2, "F" + std::to_string(n),
          [n, opts] { return check_fan_dim(n, 2, opts); });
  for (int n = 3; n <= 14; ++n)
    b.add(TheoremId::FanDim3, "F" + std::to_string(n),
          [n, opts] { return check_fan_dim(n, 3, opts); });
  for (int n = 3; n <= 14; ++n)
    b.add(TheoremId::WheelDim1, "W" + std::to_string(n),
          [n, opts] { return check_wheel_dim(n, 1, opts); });
  for (int n = 3; n <= 12; ++n)
    b.add(TheoremId::WheelDim2, "W" + std::to_string(n),
          [n, opts] { return check_wheel_dim(n, 2, opts); });
  for (int n = 4; n <= 12; ++n)
    b.add(TheoremId::WheelDim3, "W" + std::to_string(n),
          [n, opts] { return check_wheel_dim(n, 3, opts); });
  for (int n = 5; n <= 12; ++n)
    b.add(TheoremId::WheelDim4, "W" + std::to_string(n),
          [n, opts] { return check_wheel_dim(n, 4, opts); });
}

void add_join_dimensional(Builder& b) {
  std::vector<Named> hs;
  for (int n = 4; n <= 7; ++n) hs.push_back(P(n));
  for (int n = 5; n <= 8; ++n) hs.push_back(C(n));
  hs.push_back(K(4));
  hs.push_back(K(5));
  hs.push_back(S(4));
  hs.push_back(S(5));
  hs.push_back(Pet());
  for (const Named& h : hs)
    b.add(TheoremId::JoinDimensionalK, "join(K1;" + h.expr + ")",
          [h] { return check_join_dimensional(h.g, h.expr); });
}

void add_corona_dimensional(Builder& b) {
  const std::vector<NamedSpec> specs = {
      make_spec(P(2), {K(2), K(2)}),
      make_spec(P(2), {P(4), P(4)}),
      make_spec(P(3), {P(4), C(5), K(3)}),
      make_spec(P(2), {C(6), C(6)}),
      make_spec(C(3), {S(4), S(4), S(4)}),
      make_spec(P(2), {P(4), C(5)}),
  };
  for (const NamedSpec& s : specs)
    b.add(TheoremId::CoronaDimensionalValue, spec_name(s), [s] {
      return check_corona_dimensional(s.spec, spec_name(s));
    });
}

void add_girth5_regular(Builder& b) {
  const std::vector<NamedSpec> specs = {
      make_spec(P(2), {C(5), C(5)}),
      make_spec(P(3), {C(5), C(5), C(5)}),
      make_spec(P(2), {C(7), C(7)}),
      make_spec(P(2), {Pet(), Pet()}),
      make_spec(P(2), {K(2), K(2)}),   // 1-regular forest branch
      make_spec(P(2), {C(4), C(4)}),   // girth 4: guard fires
      make_spec(P(2), {C(5), Pet()}),  // mixed degree: guard fires
  };
  for (const NamedSpec& s : specs)
    b.add(TheoremId::Girth5Regular2Delta, spec_name(s), [s] {
      return check_girth5_regular(s.spec, spec_name(s));
    });
}

void add_sandwich(Builder& b) {
  const SolveOptions opts = b.opts;
  // Each entry sweeps k = 1..hi; hi one past C(family) on the K3 pair so the
  // k-range guard shows up in the output.
  const std::vector<std::pair<NamedSpec, int>> sweeps = {
      {make_spec(P(2), {P(4), P(4)}), 3},
      {make_spec(P(2), {C(6), C(6)}), 4},
      {make_spec(P(2), {K(3), K(3)}), 3},
      {make_spec(P(3), {P(4), C(5), K(3)}), 2},
      {make_spec(P(2), {C(5), P(6)}), 3},
  };
  for (const auto& [s, hi] : sweeps)
    for (int k = 1; k <= hi; ++k)
      b.add(TheoremId::SandwichBounds,
            spec_name(s) + " k=" + std::to_string(k),
            [s, k, opts] { return check_sandwich(s.spec, k, spec_name(s), opts); });
}

void add_twin_dim2(Builder& b) {
  const SolveOptions opts = b.opts;
  // First group: every attachment vertex has a twin, so equality must hold.
  // Second group breaks the condition somewhere; the bound must be strict.
  const std::vector<NamedSpec> specs = {
      make_spec(P(2), {K(2), K(2)}),
      make_spec(P(3), {K(2), K(3), K(2)}),
      make_spec(P(2), {C(4), C(4)}),
      make_spec(P(2), {K(4), K(4)}),
      make_spec(P(2), {P(4), K(2)}),
      make_spec(P(2), {P(5), P(5)}),
      make_spec(C(3), {K(2), K(2), P(4)}),
  };
  for (const NamedSpec& s : specs)
    b.add(TheoremId::TwinDim2Equality, spec_name(s) + " k=2", [s, opts] {
      return check_twin_dim2(s.spec, spec_name(s), opts);
    });
}

void add_diam2(Builder& b) {
  const SolveOptions opts = b.opts;
  const std::vector<std::pair<NamedSpec, int>> sweeps = {
      {make_spec(P(2), {K(4), K(4)}), 2},
      {make_spec(P(2), {S(4), S(4)}), 2},
      {make_spec(P(3), {F(5), F(5), F(5)}), 3},
      {make_spec(P(2), {C(5), C(5)}), 4},
      {make_spec(P(2), {P(4), P(4)}), 1},  // diameter 3: guard fires
  };
  for (const auto& [s, hi] : sweeps)
    for (int k = 1; k <= hi; ++k)
      b.add(TheoremId::Diam2Equality, spec_name(s) + " k=" + std::to_string(k),
            [s, k, opts] { return check_diam2(s.spec, k, spec_name(s), opts); });
}

void add_k1h_upper(Builder& b) {
  const SolveOptions opts = b.opts;
  // K2 sweep runs to k=3, one past the joined copies' dimensional k.
  const std::vector<std::pair<NamedSpec, int>> sweeps = {
      {make_spec(P(2), {P(6), P(6)}), 3},
      {make_spec(P(2), {C(7), C(7)}), 4},
      {make_spec(P(2), {K(2), K(2)}), 3},
      {make_spec(P(2), {S(4), P(4)}), 2},
  };
  for (const auto& [s, hi] : sweeps)
    for (int k = 1; k <= hi; ++k)
      b.add(TheoremId::K1HUpperBound, spec_name(s) + " k=" + std::to_string(k),
            [s, k, opts] { return check_k1h_upper(s.spec, k, spec_name(s), opts); });
}

void add_diam6(Builder& b) {
  const SolveOptions opts = b.opts;
  const std::vector<CoronaVariant> variants = {CoronaVariant::Direct,
                                               CoronaVariant::ComplementFamily,
                                               CoronaVariant::JoinedFamily};
  const NamedSpec cycles = make_spec(P(2), {C(7), C(7)});
  const NamedSpec paths = make_spec(P(2), {P(7), P(7)});
  for (CoronaVariant v : variants) {
    for (int k = 1; k <= 4; ++k)
      b.add(TheoremId::Diam6Equality,
            spec_name(cycles, v) + " k=" + std::to_string(k), [=] {
              return check_diam6(cycles.spec, k, spec_name(cycles, v), v, opts);
            });
    for (int k = 1; k <= 3; ++k)
      b.add(TheoremId::Diam6Equality,
            spec_name(paths, v) + " k=" + std::to_string(k), [=] {
              return check_diam6(paths.spec, k, spec_name(paths, v), v, opts);
            });
  }
  const NamedSpec mixed = make_spec(P(2), {P(8), C(7)});
  for (int k = 1; k <= 3; ++k)
    b.add(TheoremId::Diam6Equality,
          spec_name(mixed) + " k=" + std::to_string(k), [=] {
            return check_diam6(mixed.spec, k, spec_name(mixed),
                               CoronaVariant::Direct, opts);
          });
  // Guards: diameter 5 attachments, and k past C(family).
  const NamedSpec low = make_spec(P(2), {P(6), P(6)});
  b.add(TheoremId::Diam6Equality, spec_name(low) + " k=1", [=] {
    return check_diam6(low.spec, 1, spec_name(low), CoronaVariant::Direct, opts);
  });
  b.add(TheoremId::Diam6Equality, spec_name(cycles) + " k=5", [=] {
    return check_diam6(cycles.spec, 5, spec_name(cycles), CoronaVariant::Direct,
                       opts);
  });
}

void add_paths_cycles(Builder& b) {
  const SolveOptions opts = b.opts;
  const std::vector<CoronaVariant> variants = {CoronaVariant::Direct,
                                               CoronaVariant::ComplementFamily,
                                               CoronaVariant::JoinedFamily};
  // Paths: P6 misses the k=1 order floor, so that row documents the guard.
  const NamedSpec p67 = make_spec(P(2), {P(6), P(7)});
  for (int k = 1; k <= 3; ++k)
    b.add(TheoremId::CoronaPathsClosed,
          spec_name(p67) + " k=" + std::to_string(k), [=] {
            return check_paths_cycles(p67.spec, k, spec_name(p67),
                                      CoronaVariant::Direct, opts);
          });
  const NamedSpec p77 = make_spec(P(2), {P(7), P(7)});
  for (CoronaVariant v : variants)
    for (int k = 1; k <= 3; ++k)
      b.add(TheoremId::CoronaPathsClosed,
            spec_name(p77, v) + " k=" + std::to_string(k), [=] {
              return check_paths_cycles(p77.spec, k, spec_name(p77, v), v, opts);
            });
  // Cycles.
  const NamedSpec c78 = make_spec(P(2), {C(7), C(8)});
  for (int k = 1; k <= 4; ++k)
    b.add(TheoremId::CoronaCyclesClosed,
          spec_name(c78) + " k=" + std::to_string(k), [=] {
            return check_paths_cycles(c78.spec, k, spec_name(c78),
                                      CoronaVariant::Direct, opts);
          });
  const NamedSpec c77 = make_spec(P(2), {C(7), C(7)});
  for (int k = 1; k <= 4; ++k)
    b.add(TheoremId::CoronaCyclesClosed,
          spec_name(c77) + " k=" + std::to_string(k), [=] {
            return check_paths_cycles(c77.spec, k, spec_name(c77),
                                      CoronaVariant::Direct, opts);
          });
  for (CoronaVariant v : {CoronaVariant::ComplementFamily,
                          CoronaVariant::JoinedFamily})
    for (int k : {1, 4})
      b.add(TheoremId::CoronaCyclesClosed,
            spec_name(c77, v) + " k=" + std::to_string(k), [=] {
              return check_paths_cycles(c77.spec, k, spec_name(c77, v), v, opts);
            });
  // Guards: short cycles, and k past the wheel range.
  const NamedSpec c66 = make_spec(P(2), {C(6), C(6)});
  b.add(TheoremId::CoronaCyclesClosed, spec_name(c66) + " k=1", [=] {
    return check_paths_cycles(c66.spec, 1, spec_name(c66), CoronaVariant::Direct,
                              opts);
  });
  b.add(TheoremId::CoronaCyclesClosed, spec_name(c77) + " k=5", [=] {
    return check_paths_cycles(c77.spec, 5, spec_name(c77), CoronaVariant::Direct,
                              opts);
  });
}

}  // namespace

std::vector<TheoremReport> run_verification_corpus(const CorpusOptions& opts) {
  Builder b;
  b.only = opts.only;
  b.opts.node_budget = opts.node_budget;
  add_fans_wheels(b);
  add_join_dimensional(b);
  add_corona_dimensional(b);
  add_girth5_regular(b);
  add_sandwich(b);
  add_twin_dim2(b);
  add_diam2(b);
  add_k1h_upper(b);
  add_diam6(b);
  add_paths_cycles(b);
  return run_check_tasks(b.tasks, opts.threads);
}

}  // namespace kmetric
