#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "unasp/depgraph.hpp"
#include "unasp/mi.hpp"

namespace unasp {

struct NmiConfig {
  double eps = 0.009;
  std::size_t max_outer_iters = 10000;
  std::size_t n_b = 5;
  double damping = 1.0;  // weight of the new iterate; below 1 averages with the previous one
};

using Valuation = std::map<AtomId, Interval>;

// Substitutes fixed values for the given atoms into every body, then runs
// the monotonic stage. Rules of atoms in `drop` are removed first.
inline MiState inner_pass(const TransformedProgram& p, const Valuation& fixed, const std::vector<AtomId>& drop = {}) {
  std::vector<std::optional<EpistemicValue>> known(p.atoms->size());
  for (const auto& [a, v] : fixed) known[a] = EpistemicValue(v);
  auto lookup = strict_lookup(known);
  std::map<AtomId, Expr> rules;
  for (const auto& [a, e] : p.rules)
    if (std::find(drop.begin(), drop.end(), a) == drop.end()) rules.emplace(a, simplify(substitute(e, lookup)));
  MiState s = mi_fixpoint(p.with_rules(std::move(rules)));
  if (!s.halted_inconsistent && !s.residual.rules.empty())
    throw Error(Errc::CyclicVpg, "atom " + p.name(s.residual.rules.begin()->first) +
                                     " is still on a cycle after fixing the assumption set");
  return s;
}

enum class NmiStatus { Converged, MaxItersExceeded, HaltedInconsistent };

inline const char* status_name(NmiStatus s) {
  switch (s) {
    case NmiStatus::Converged: return "converged";
    case NmiStatus::MaxItersExceeded: return "max-iters-exceeded";
    case NmiStatus::HaltedInconsistent: return "halted-inconsistent";
  }
  return "?";
}

struct NmiStep {
  Valuation chosen;
  double delta = 0;
};

struct NmiOutcome {
  NmiStatus status = NmiStatus::Converged;
  Valuation values;  // every component atom after the final pass (chosen atoms only if halted)
  std::size_t iters = 0;
  std::vector<NmiStep> trace;
  std::optional<AtomId> conflict;
};

using NmiObserver = std::function<void(std::size_t, const NmiStep&)>;

// Largest gap between a valuation and one inner pass seeded from its chosen
// atoms; infinite when that pass halts.
inline double support_residual(const TransformedProgram& p, const std::vector<AtomId>& chosen, const Valuation& v) {
  Valuation fixed;
  for (auto a : chosen) fixed[a] = v.at(a);
  MiState s = inner_pass(p, fixed);
  if (s.halted_inconsistent) return std::numeric_limits<double>::infinity();
  double r = 0;
  for (const auto& [a, x] : v)
    if (auto y = s.value(a)) r = std::max(r, distance(x, *y));
  return r;
}

inline NmiOutcome nmi_iterate(const TransformedProgram& p, const std::vector<AtomId>& chosen, const Valuation& init,
                              const NmiConfig& cfg, const NmiObserver& observe = {}) {
  NmiOutcome out;
  Valuation cur;
  for (auto a : chosen) cur[a] = init.count(a) ? init.at(a) : Interval::unknown();
  auto halt = [&](const MiState& s) {
    out.status = NmiStatus::HaltedInconsistent;
    out.conflict = s.conflict;
    out.values = cur;
    return out;
  };
  for (std::size_t n = 1; n <= cfg.max_outer_iters; ++n) {
    MiState s = inner_pass(p, cur);
    if (s.halted_inconsistent) return halt(s);
    NmiStep step;
    const double w = cfg.damping;
    for (auto a : chosen) {
      Interval f = *s.value(a);
      step.delta = std::max(step.delta, distance(f, cur[a]));
      step.chosen[a] = w == 1.0 ? f
                                : Interval::rounded(w * f.lower() + (1 - w) * cur[a].lower(),
                                                    w * f.upper() + (1 - w) * cur[a].upper());
    }
    cur = step.chosen;
    out.iters = n;
    if (observe) observe(n, step);
    out.trace.push_back(std::move(step));
    if (out.trace.back().delta < cfg.eps) {
      MiState fin = inner_pass(p, cur);
      if (fin.halted_inconsistent) return halt(fin);
      // Stop only once the emitted valuation is itself supported within eps.
      Valuation values = fin.assigned();
      if (support_residual(p, chosen, values) >= cfg.eps) continue;
      out.values = std::move(values);
      return out;
    }
  }
  out.status = NmiStatus::MaxItersExceeded;
  out.values = cur;
  return out;
}

// ---- gain --------------------------------------------------------------

struct GainVector {
  double g1 = 1, g2 = 1;
  double norm() const { return std::max(std::abs(g1), std::abs(g2)); }
};

namespace detail {

// Constants feeding an operator vertex other than through `skip_edge`.
inline std::vector<Interval> side_constants(const DepGraph& g, std::size_t v, std::size_t skip_edge) {
  std::vector<Interval> out;
  for (auto e : g.in[v]) {
    if (e == skip_edge) continue;
    const Edge& ed = g.edges[e];
    const Vertex& src = g.vertices[ed.from];
    if (src.kind != VertexKind::Const)
      throw Error(Errc::NonConstantOperand, "operator of " + g.atoms->name(g.vertices[v].atom) +
                                                " has a non-constant operand " + g.label(ed.from));
    Interval c = src.value;
    for (auto op : ed.ops) c = op == EdgeOp::Neg ? negate(c) : naf(c);
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

// Gain of a simple cycle seen from its assumption atom. The state tracks
// the coefficient with which the lower (G1) and upper (G2) bound of the
// atom's previous value reach the current node: negation swaps the bounds,
// naf copies the lower coefficient to both, and constants scale them.
inline GainVector cycle_gain(const DepGraph& g, const Vpp& vpp, bool skip_kagg = false) {
  const std::size_t n = vpp.nodes.size();
  if (n < 2 || !vpp.nodes.front().previous || vpp.nodes.back().previous)
    throw Error(Errc::StructuralMismatch, "value-propagation path is not a single path");
  std::vector<std::optional<std::size_t>> incoming(n);
  for (const auto& e : vpp.edges) {
    if (e.to != e.from + 1 || incoming[e.to])
      throw Error(Errc::StructuralMismatch, "value-propagation path is not a single path");
    incoming[e.to] = e.edge;
  }
  GainVector G;
  bool flag = false;
  for (std::size_t i = 1; i < n; ++i) {
    if (!incoming[i]) throw Error(Errc::StructuralMismatch, "value-propagation path is disconnected");
    for (auto op : g.edges[*incoming[i]].ops) {
      if (!flag) continue;
      if (op == EdgeOp::Neg)
        std::swap(G.g1, G.g2);
      else
        G.g2 = G.g1;
    }
    std::size_t v = vpp.nodes[i].vertex;
    switch (g.vertices[v].kind) {
      case VertexKind::And:
        for (const auto& c : detail::side_constants(g, v, *incoming[i])) {
          G.g1 *= c.lower();
          G.g2 *= c.upper();
        }
        flag = true;
        break;
      case VertexKind::Or:
        for (const auto& c : detail::side_constants(g, v, *incoming[i])) {
          G.g1 *= 1 - c.lower();
          G.g2 *= 1 - c.upper();
        }
        flag = true;
        break;
      case VertexKind::Kagg:
        if (!skip_kagg) throw Error(Errc::StructuralMismatch, "knowledge aggregation on the path");
        break;
      default: break;
    }
  }
  return G;
}

// ---- contraction classification -------------------------------------------

enum class ContractionClass {
  NoNafNoKagg,
  SimpleCycleGainLt1,
  ConjPathBound,
  KaggCycle,
  BranchBoundRequired,
  Unclassified,
};

inline const char* class_name(ContractionClass c) {
  switch (c) {
    case ContractionClass::NoNafNoKagg: return "no-naf-no-kagg";
    case ContractionClass::SimpleCycleGainLt1: return "simple-cycle-gain-lt-1";
    case ContractionClass::ConjPathBound: return "conj-path-bound";
    case ContractionClass::KaggCycle: return "kagg-cycle";
    case ContractionClass::BranchBoundRequired: return "branch-bound-required";
    case ContractionClass::Unclassified: return "unclassified";
  }
  return "?";
}

struct ContractionReport {
  ContractionClass cls = ContractionClass::Unclassified;
  std::vector<std::pair<AtomId, GainVector>> gains;
  std::vector<std::size_t> k_counts;
  std::string note;
};

struct ComponentFeatures {
  bool naf = false;         // a -1 edge inside the component
  bool kagg = false;        // a knowledge-aggregation vertex inside
  std::size_t kaggs = 0;
  bool constants = false;   // a constant feeding a conjunction or disjunction inside
};

inline ComponentFeatures features(const DepGraph& g, const Component& comp) {
  std::set<std::size_t> inside(comp.vertices.begin(), comp.vertices.end());
  ComponentFeatures f;
  for (auto v : comp.vertices) {
    VertexKind k = g.vertices[v].kind;
    if (k == VertexKind::Kagg) {
      f.kagg = true;
      ++f.kaggs;
    }
    for (auto e : g.in[v]) {
      const Edge& ed = g.edges[e];
      if (inside.count(ed.from) && ed.weight() == EdgeWeight::Naf) f.naf = true;
      if ((k == VertexKind::And || k == VertexKind::Or) && g.vertices[ed.from].kind == VertexKind::Const)
        f.constants = true;
    }
  }
  return f;
}

inline ContractionReport check_contraction(const DepGraph& g, const Component& comp, const std::vector<Cycle>& cycles,
                                           const std::vector<AtomId>& chosen) {
  ContractionReport r;
  ComponentFeatures f = features(g, comp);
  if (f.kagg && f.kaggs == 1 && cycles.size() == 1) {
    r.cls = ContractionClass::KaggCycle;
    if (chosen.size() == 1) {
      try {
        Vpg vpg = build_vpg(g, comp, chosen);
        r.gains.push_back({chosen[0], cycle_gain(g, vpg.paths[0], true)});
      } catch (const Error& e) {
        r.note = e.what();
      }
    }
    return r;
  }
  if (!f.naf && !f.kagg) {
    r.cls = ContractionClass::NoNafNoKagg;
    return r;
  }
  if (!f.kagg && !chosen.empty()) {
    try {
      Vpg vpg = build_vpg(g, comp, chosen);
      if (cycles.size() == 1 && vpg.paths.size() == 1) {
        GainVector G = cycle_gain(g, vpg.paths[0]);
        r.gains.push_back({vpg.paths[0].atom, G});
        if (G.norm() < 1) {
          r.cls = ContractionClass::SimpleCycleGainLt1;
          return r;
        }
      } else {
        bool all = true;
        std::set<std::size_t> inside(comp.vertices.begin(), comp.vertices.end());
        for (const auto& p : vpg.paths) {
          double gain = 1;
          std::size_t extra = 0;
          for (std::size_t i = 0; i < p.nodes.size(); ++i) {
            std::size_t v = p.nodes[i].vertex;
            VertexKind k = g.vertices[v].kind;
            if (k == VertexKind::Or) all = false;
            if (k != VertexKind::And) continue;
            std::size_t varying = 0;
            for (auto e : g.in[v]) {
              const Vertex& src = g.vertices[g.edges[e].from];
              if (src.kind == VertexKind::Const)
                gain *= src.value.upper();
              else
                ++varying;
            }
            extra += varying > 0 ? varying - 1 : 0;
          }
          r.gains.push_back({p.atom, GainVector{gain, gain}});
          r.k_counts.push_back(extra);
          if (!(gain < 1.0 / static_cast<double>(extra + 2))) all = false;
        }
        if (all) {
          r.cls = ContractionClass::ConjPathBound;
          return r;
        }
      }
    } catch (const Error& e) {
      r.note = e.what();
    }
  }
  if (!f.constants && f.naf) {
    r.cls = ContractionClass::BranchBoundRequired;
    return r;
  }
  r.cls = ContractionClass::Unclassified;
  return r;
}

// ---- knowledge-aggregation cycles ----------------------------------------------

struct KaggResult {
  Valuation values;
  std::string provenance;
};

struct KaggShape {
  AtomId atom;     // head of the aggregating rule
  Interval bound;  // the constant operand
  Expr rest;       // the other operand
};

inline KaggShape kagg_shape(const TransformedProgram& p) {
  DepGraph g = build_dep_graph(p);
  SccPlan plan = scc_condense(g);
  std::optional<std::size_t> cyc;
  for (std::size_t c = 0; c < plan.components.size(); ++c)
    if (plan.components[c].cyclic) {
      if (cyc) throw Error(Errc::StructuralMismatch, "more than one cyclic component");
      cyc = c;
    }
  if (!cyc) throw Error(Errc::StructuralMismatch, "no cycle");
  const Component& comp = plan.components[*cyc];
  if (comp.atoms.size() != p.rules.size()) throw Error(Errc::StructuralMismatch, "atoms outside the cycle");
  if (enumerate_cycles(g, comp.vertices).size() != 1) throw Error(Errc::StructuralMismatch, "not a simple cycle");
  std::optional<KaggShape> shape;
  for (const auto& [a, e] : p.rules) {
    std::size_t count = 0;
    std::function<void(const Expr&)> walk = [&](const Expr& x) {
      if (x.kind == ExprKind::Kagg) ++count;
      for (const auto& k : x.kids) walk(k);
    };
    walk(e);
    if (count == 0) continue;
    if (shape || count > 1 || e.kind != ExprKind::Kagg)
      throw Error(Errc::StructuralMismatch, "more than one knowledge aggregation");
    const Expr& x = e.kids[0];
    const Expr& y = e.kids[1];
    if (x.is_const() == y.is_const()) throw Error(Errc::StructuralMismatch, "aggregation needs one constant operand");
    shape = KaggShape{a, x.is_const() ? x.value : y.value, x.is_const() ? y : x};
  }
  if (!shape) throw Error(Errc::StructuralMismatch, "no knowledge aggregation");
  return *shape;
}

// Width-only comparison of two valuations over the same atoms; true when
// `x` is nowhere narrower than `y`.
inline bool kp_leq(const Valuation& x, const Valuation& y) {
  for (const auto& [a, v] : x) {
    auto it = y.find(a);
    if (it == y.end() || v.width() < it->second.width() - eps_cmp) return false;
  }
  return true;
}

inline std::vector<KaggResult> solve_kagg_cycle(const TransformedProgram& p, const NmiConfig& cfg) {
  KaggShape shape = kagg_shape(p);
  auto rules = p.rules;
  rules[shape.atom] = shape.rest;
  TransformedProgram dropped = p.with_rules(std::move(rules));

  auto lookup_in = [](const Valuation& v) {
    return [&v](AtomId a, bool negative) -> std::optional<EpistemicValue> {
      auto it = v.find(a);
      if (it == v.end()) return std::nullopt;
      return negative ? negate(it->second) : it->second;
    };
  };

  std::vector<KaggResult> out;
  NmiConfig tight = cfg;
  tight.eps = std::min(cfg.eps, 1e-12);
  NmiOutcome r = nmi_iterate(dropped, {shape.atom}, {{shape.atom, Interval::unknown()}}, tight);
  // The case analysis needs a unique fixpoint without the aggregation.
  if (r.status != NmiStatus::Converged)
    throw Error(Errc::StructuralMismatch, std::string("iteration without aggregation: ") + status_name(r.status));
  for (const Interval& start : {Interval::exact(0), Interval::exact(1)}) {
    NmiOutcome o = nmi_iterate(dropped, {shape.atom}, {{shape.atom, start}}, tight);
    if (o.status != NmiStatus::Converged || distance(o.values.at(shape.atom), r.values.at(shape.atom)) > 1e-6)
      throw Error(Errc::StructuralMismatch, "iteration without aggregation has more than one fixpoint");
  }
  const Valuation& minus = r.values;
  Interval v1 = evaluate(shape.rest, lookup_in(minus)).interval();
  bool case1 = v1.approx(shape.bound) || more_certain(v1, shape.bound);

  MiState s = inner_pass(p, {{shape.atom, shape.bound}}, {shape.atom});
  bool case2 = false;
  Valuation seeded;
  if (!s.halted_inconsistent) {
    seeded = s.assigned();
    seeded[shape.atom] = shape.bound;
    EpistemicValue v2 = evaluate(shape.rest, lookup_in(seeded));
    case2 = v2.consistent() && (v2.interval().approx(shape.bound) || more_certain(shape.bound, v2.interval()));
  }

  if (case1 && case2) {
    bool a = kp_leq(minus, seeded), b = kp_leq(seeded, minus);
    if (a) out.push_back({minus, "kagg-case3"});
    else if (b) out.push_back({seeded, "kagg-case4"});
    else {
      out.push_back({minus, "kagg-case5"});
      out.push_back({seeded, "kagg-case5"});
    }
  } else if (case1) {
    out.push_back({minus, "kagg-case1"});
  } else if (case2) {
    out.push_back({seeded, "kagg-case2"});
  }
  return out;
}

// ---- branch and bound ----------------------------------------------------

inline std::vector<double> seed_grid(std::size_t n_b) {
  std::vector<double> v;
  for (std::size_t i = 0; i < n_b; ++i) v.push_back(static_cast<double>(i) / static_cast<double>(n_b - 1));
  return v;
}

// Seed intervals [x_i, x_j], i <= j, over the sorted sample points.
inline std::vector<Interval> seed_intervals(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Interval> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i; j < xs.size(); ++j) out.push_back(Interval(xs[i], xs[j]));
  return out;
}

inline std::vector<Valuation> branch_and_bound(const TransformedProgram& p, const std::vector<AtomId>& chosen,
                                               const NmiConfig& cfg, const std::vector<double>& seeds = {}) {
  std::vector<Interval> xs = seed_intervals(seeds.empty() ? seed_grid(cfg.n_b) : seeds);
  std::vector<Valuation> out;
  std::vector<std::size_t> idx(chosen.size(), 0);
  while (true) {
    Valuation seed;
    for (std::size_t k = 0; k < chosen.size(); ++k) seed[chosen[k]] = xs[idx[k]];
    MiState s = inner_pass(p, seed);
    if (!s.halted_inconsistent) {
      bool stable = true;
      for (auto a : chosen) stable = stable && distance(*s.value(a), seed[a]) < cfg.eps;
      if (stable) out.push_back(s.assigned());
    }
    std::size_t k = chosen.size();
    while (k > 0 && ++idx[k - 1] == xs.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace unasp
