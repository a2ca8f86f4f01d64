#pragma once

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "unasp/grounder.hpp"
#include "unasp/nmi.hpp"
#include "unasp/semantics.hpp"

namespace unasp {

enum class TraceKind { Mi, Nmi, Graph };
enum class OutputFormat { Text, Json };

struct SolverConfig {
  NmiConfig nmi;
  std::optional<std::vector<double>> seeds;
  std::set<TraceKind> trace;
  OutputFormat format = OutputFormat::Text;
  std::size_t max_answer_sets = 64;
  std::size_t jobs = 1;
  std::ostream* trace_out = nullptr;
  bool verify = true;

  void validate() const {
    if (!(nmi.eps > 0)) throw Error(Errc::BadModel, "eps must be positive");
    if (nmi.n_b < 2) throw Error(Errc::BadModel, "n_b must be at least 2");
    if (max_answer_sets < 1) throw Error(Errc::BadModel, "max_answer_sets must be at least 1");
    if (seeds)
      for (double x : *seeds)
        if (!(x >= 0 && x <= 1)) throw Error(Errc::BadModel, "seed " + format_number(x) + " outside [0,1]");
  }
};

enum class SolveStatus { Ok, NoAnswerSet, Inconsistent, Incomplete };

inline const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Ok: return "ok";
    case SolveStatus::NoAnswerSet: return "no-answer-set";
    case SolveStatus::Inconsistent: return "inconsistent";
    case SolveStatus::Incomplete: return "incomplete";
  }
  return "?";
}

enum class Dispatch { Acyclic, Nmi, AllUnknown, KaggCycle, BranchBound };

inline const char* dispatch_name(Dispatch d) {
  switch (d) {
    case Dispatch::Acyclic: return "acyclic";
    case Dispatch::Nmi: return "nmi";
    case Dispatch::AllUnknown: return "all-unknown";
    case Dispatch::KaggCycle: return "kagg-cycle";
    case Dispatch::BranchBound: return "branch-and-bound";
  }
  return "?";
}

struct ComponentReport {
  std::vector<std::string> atoms;
  Dispatch dispatch = Dispatch::Acyclic;
  std::vector<std::string> cycles;
  std::vector<std::string> chosen;
  std::optional<ContractionReport> contraction;
  std::size_t evaluations = 0;  // once per incoming branch
  std::size_t iterations = 0;   // outer NMI steps, summed over branches
  std::size_t results = 0;      // valuations produced, summed over branches
  std::vector<std::string> notes;
};

struct Diagnostics {
  std::size_t mi_steps = 0;
  std::optional<std::string> conflict;  // atom whose aggregation produced an inconsistency
  std::vector<ComponentReport> components;
  std::vector<std::string> topo_order;  // component labels
  std::size_t branches = 0;
  std::size_t rejected = 0;  // candidates failing the answer-set check
  bool truncated = false;
  bool max_iters_exceeded = false;
  std::vector<std::string> notes;
};

struct SolveReport {
  SolveStatus status = SolveStatus::NoAnswerSet;
  std::vector<Interpretation> answer_sets;
  Diagnostics diagnostics;
};

namespace detail {

using Branch = Valuation;

inline std::string atoms_label(const std::vector<AtomId>& atoms, const AtomTable& t) {
  std::string s;
  for (auto a : atoms) s += (s.empty() ? "" : ",") + t.name(a);
  return "{" + s + "}";
}

inline std::string valuation_string(const Valuation& v, const AtomTable& t) {
  std::string s;
  for (const auto& [a, x] : v) s += (s.empty() ? "" : " ") + t.name(a) + ":" + to_string(x);
  return s;
}

inline auto valuation_lookup(const Valuation& v) {
  return [&v](AtomId a, bool negative) -> std::optional<EpistemicValue> {
    auto it = v.find(a);
    if (it == v.end()) return std::nullopt;
    return negative ? negate(it->second) : it->second;
  };
}

struct BranchResult {
  std::vector<Valuation> values;  // component valuations, one per outgoing branch
  bool inconsistent = false;
  bool max_iters = false;
  bool truncated = false;
  std::optional<AtomId> conflict;
  ComponentReport report;
};

// Cap on seed combinations sampled beside an iteration.
inline constexpr double kMaxSeedCombos = 4096;

inline BranchResult eval_split(const TransformedProgram& sub, const SolverConfig& cfg);

// Evaluates one cyclic component under the upstream values of a branch.
inline BranchResult eval_cyclic(const TransformedProgram& residual, const Component& comp, const Branch& up,
                                const SolverConfig& cfg) {
  BranchResult out;
  const AtomTable& table = *residual.atoms;
  ComponentReport& rep = out.report;
  for (auto a : comp.atoms) rep.atoms.push_back(table.name(a));

  std::map<AtomId, Expr> rules;
  auto lookup = valuation_lookup(up);
  for (auto a : comp.atoms) rules.emplace(a, simplify(substitute(residual.rules.at(a), lookup)));
  TransformedProgram sub = residual.with_rules(std::move(rules));

  DepGraph g = build_dep_graph(sub);
  SccPlan plan = scc_condense(g);
  const Component* local = nullptr;
  for (const auto& c : plan.components)
    if (c.cyclic && c.atoms.size() == comp.atoms.size()) local = &c;
  if (!local) {
    // Upstream values broke the component into smaller pieces.
    BranchResult split = eval_split(sub, cfg);
    split.report.atoms = rep.atoms;
    split.report.dispatch = Dispatch::Acyclic;
    split.report.notes.insert(split.report.notes.begin(), "component split by upstream values");
    split.report.evaluations = 1;
    split.report.results = split.values.size();
    return split;
  }
  std::vector<Cycle> cycles = enumerate_cycles(g, local->vertices);
  for (const auto& c : cycles) rep.cycles.push_back(cycle_string(c, table));
  ComponentFeatures f = features(g, *local);

  auto names = [&](const std::vector<AtomId>& v) {
    std::vector<std::string> s;
    for (auto a : v) s.push_back(table.name(a));
    return s;
  };
  auto trace_nmi = [&](std::size_t n, const NmiStep& st) {
    if (cfg.trace_out && cfg.trace.count(TraceKind::Nmi))
      *cfg.trace_out << "nmi " << atoms_label(comp.atoms, table) << " step " << n
                     << " D=" << format_number(st.delta) << " " << valuation_string(st.chosen, table) << "\n";
  };
  auto run_nmi = [&] {
    rep.dispatch = Dispatch::Nmi;
    AssumptionSelection sel = select_assumption_set(g, *local, cycles, SelectionMode::Nmi, [&](const auto& s) {
      try {
        build_vpg(g, *local, s);
        return true;
      } catch (const Error&) {
        return false;
      }
    });
    rep.chosen = names(sel.chosen);
    rep.contraction = check_contraction(g, *local, cycles, sel.chosen);
    Valuation init;
    for (auto a : sel.chosen) init[a] = Interval::unknown();
    NmiOutcome r = nmi_iterate(sub, sel.chosen, init, cfg.nmi, trace_nmi);
    rep.iterations += r.iters;
    if (r.status == NmiStatus::MaxItersExceeded) {
      NmiConfig damped = cfg.nmi;
      damped.damping = 0.5;
      rep.notes.push_back("plain iteration did not settle; retried with damping 0.5");
      r = nmi_iterate(sub, sel.chosen, init, damped, trace_nmi);
      rep.iterations += r.iters;
    }
    // Iteration finds at most one fixpoint; with naf edges or aggregation
    // there can be more, so stable seeds are added alongside.
    std::vector<Valuation> seeded;
    if (f.naf || f.kagg) {
      std::vector<double> xs = cfg.seeds.value_or(seed_grid(cfg.nmi.n_b));
      double per_atom = static_cast<double>(seed_intervals(xs).size());
      if (std::pow(per_atom, static_cast<double>(sel.chosen.size())) <= kMaxSeedCombos)
        seeded = branch_and_bound(sub, sel.chosen, cfg.nmi, xs);
      else
        rep.notes.push_back("seed grid too large; sampling skipped");
    }
    auto add_seeded = [&] {
      std::size_t added = 0;
      for (auto& v : seeded) {
        auto dup = std::find_if(out.values.begin(), out.values.end(), [&](const Valuation& w) {
          return std::all_of(v.begin(), v.end(), [&](const auto& kv) {
            return distance(kv.second, w.at(kv.first)) < std::max(cfg.nmi.eps, eps_cmp);
          });
        });
        if (dup == out.values.end()) {
          out.values.push_back(std::move(v));
          ++added;
        } else if (support_residual(sub, sel.chosen, v) < support_residual(sub, sel.chosen, *dup)) {
          *dup = std::move(v);
        }
      }
      return added;
    };
    if (r.status != NmiStatus::Converged && !seeded.empty()) {
      rep.notes.push_back(std::string("iteration ") + status_name(r.status) + "; stable seeds used instead");
      add_seeded();
      return;
    }
    if (r.status == NmiStatus::Converged) {
      out.values.push_back(r.values);
      if (add_seeded()) rep.notes.push_back("stable seeds added to the iteration result");
      return;
    }
    switch (r.status) {
      case NmiStatus::Converged: break;
      case NmiStatus::MaxItersExceeded: out.max_iters = true; break;
      case NmiStatus::HaltedInconsistent:
        out.inconsistent = true;
        out.conflict = r.conflict;
        break;
    }
  };

  if (f.kagg) {
    rep.dispatch = Dispatch::KaggCycle;
    try {
      for (auto& k : solve_kagg_cycle(sub, cfg.nmi)) {
        out.values.push_back(std::move(k.values));
        rep.notes.push_back(k.provenance);
      }
      rep.contraction = ContractionReport{ContractionClass::KaggCycle, {}, {}, {}};
    } catch (const Error& e) {
      if (e.code() != Errc::StructuralMismatch) throw;
      rep.notes.push_back(std::string("aggregation cycle fallback: ") + e.what());
      run_nmi();
    }
  } else if (!f.constants && f.naf) {
    rep.dispatch = Dispatch::BranchBound;
    try {
      AssumptionSelection sel = select_assumption_set(g, *local, cycles, SelectionMode::BranchBound);
      rep.chosen = names(sel.chosen);
      rep.contraction = ContractionReport{ContractionClass::BranchBoundRequired, {}, {}, {}};
      out.values = branch_and_bound(sub, sel.chosen, cfg.nmi, cfg.seeds.value_or(std::vector<double>{}));
      if (out.values.empty()) {
        rep.notes.push_back("no stable seed; falling back to iteration");
        run_nmi();
      }
    } catch (const Error& e) {
      if (e.code() != Errc::NoValidAssumptionSet && e.code() != Errc::CyclicVpg) throw;
      rep.notes.push_back(std::string("branch-and-bound fallback: ") + e.what());
      run_nmi();
    }
  } else if (!f.constants && !f.naf) {
    rep.dispatch = Dispatch::AllUnknown;
    rep.contraction = ContractionReport{ContractionClass::NoNafNoKagg, {}, {}, {}};
    Valuation v;
    for (auto a : comp.atoms) v[a] = Interval::unknown();
    out.values.push_back(std::move(v));
  } else {
    run_nmi();
  }
  rep.evaluations = 1;
  rep.results = out.values.size();
  return out;
}

// Runs the monotonic stage and the component loop on a substituted
// component whose cycle structure changed.
inline BranchResult eval_split(const TransformedProgram& sub, const SolverConfig& cfg) {
  BranchResult out;
  MiState mi = mi_fixpoint(sub);
  if (mi.halted_inconsistent) {
    out.inconsistent = true;
    out.conflict = mi.conflict;
    return out;
  }
  std::vector<Branch> branches{mi.assigned()};
  const TransformedProgram& residual = mi.residual;
  if (!residual.rules.empty()) {
    DepGraph g = build_dep_graph(residual);
    SccPlan plan = scc_condense(g);
    for (auto c : plan.topo_order) {
      const Component& comp = plan.components[c];
      if (comp.atoms.empty()) continue;
      std::vector<Branch> next;
      for (auto& b : branches) {
        if (!comp.cyclic) {
          AtomId a = comp.atoms[0];
          EpistemicValue v = evaluate(residual.rules.at(a), valuation_lookup(b));
          if (!v.consistent()) {
            out.inconsistent = true;
            if (!out.conflict) out.conflict = a;
            continue;
          }
          b[a] = v.interval();
          next.push_back(std::move(b));
          continue;
        }
        BranchResult r = eval_cyclic(residual, comp, b, cfg);
        if (r.inconsistent) {
          out.inconsistent = true;
          if (!out.conflict) out.conflict = r.conflict;
        }
        out.max_iters = out.max_iters || r.max_iters;
        out.truncated = out.truncated || r.truncated;
        for (auto& n : r.report.notes) out.report.notes.push_back(n);
        for (auto& v : r.values) {
          Branch nb = b;
          for (auto& [a, x] : v) nb[a] = x;
          next.push_back(std::move(nb));
        }
      }
      if (next.size() > cfg.max_answer_sets) {
        next.resize(cfg.max_answer_sets);
        out.truncated = true;
      }
      branches = std::move(next);
      if (branches.empty()) break;
    }
  }
  for (auto& b : branches) {
    Valuation v;
    for (const auto& [a, _] : sub.rules) v[a] = b.at(a);
    out.values.push_back(std::move(v));
  }
  return out;
}

inline void merge(ComponentReport& into, ComponentReport&& from) {
  if (into.evaluations == 0) {
    into = std::move(from);
    return;
  }
  into.evaluations += from.evaluations;
  into.iterations += from.iterations;
  into.results += from.results;
  for (auto& n : from.notes)
    if (std::find(into.notes.begin(), into.notes.end(), n) == into.notes.end()) into.notes.push_back(std::move(n));
}

}  // namespace detail

inline Interpretation to_interpretation(const Valuation& v, const AtomTable& t) {
  Interpretation i;
  for (const auto& [a, x] : v) i.set(t.name(a), false, x);
  return i;
}

inline SolveReport solve(const Program& input, const SolverConfig& cfg = {}) {
  cfg.validate();
  SolveReport rep;
  Diagnostics& diag = rep.diagnostics;
  const Program p = ground(input);
  const TransformedProgram t = transform_program(p);
  const AtomTable& table = *t.atoms;
  auto trace = [&](TraceKind k) -> std::ostream* {
    return cfg.trace_out && cfg.trace.count(k) ? cfg.trace_out : nullptr;
  };

  MiState mi = mi_fixpoint(t, [&](const MiState& s) {
    if (auto* os = trace(TraceKind::Mi)) {
      *os << "mi step " << s.step << ":";
      for (auto a : s.last_assigned) *os << " " << table.name(a) << ":" << to_string(*s.interp[a]);
      *os << "\n";
    }
  });
  diag.mi_steps = mi.step;
  if (mi.halted_inconsistent) {
    diag.conflict = table.name(*mi.conflict);
    diag.notes.push_back("monotonic stage produced an inconsistency at " + *diag.conflict);
    rep.status = SolveStatus::NoAnswerSet;
    return rep;
  }

  std::vector<detail::Branch> branches{mi.assigned()};
  bool inconsistent = false, incomplete = false;
  const TransformedProgram& residual = mi.residual;
  if (!residual.rules.empty()) {
    DepGraph g = build_dep_graph(residual);
    SccPlan plan = scc_condense(g);
    std::vector<std::size_t> order;
    for (auto c : plan.topo_order)
      if (!plan.components[c].atoms.empty()) order.push_back(c);
    for (auto c : order) diag.topo_order.push_back(detail::atoms_label(plan.components[c].atoms, table));
    if (auto* os = trace(TraceKind::Graph)) {
      *os << "graph components:";
      for (const auto& s : diag.topo_order) *os << " " << s;
      *os << "\n";
    }

    for (auto c : order) {
      const Component& comp = plan.components[c];
      ComponentReport creport;
      std::vector<detail::Branch> next;
      if (!comp.cyclic) {
        AtomId a = comp.atoms[0];
        creport.atoms = {table.name(a)};
        for (auto& b : branches) {
          EpistemicValue v = evaluate(residual.rules.at(a), detail::valuation_lookup(b));
          ++creport.evaluations;
          if (!v.consistent()) {
            inconsistent = true;
            if (!diag.conflict) diag.conflict = table.name(a);
            continue;
          }
          b[a] = v.interval();
          ++creport.results;
          next.push_back(std::move(b));
        }
      } else {
        std::vector<detail::BranchResult> results(branches.size());
        const std::size_t jobs = std::max<std::size_t>(cfg.jobs, 1);
        for (std::size_t lo = 0; lo < branches.size(); lo += jobs) {
          std::size_t hi = std::min(branches.size(), lo + jobs);
          if (hi - lo == 1) {
            results[lo] = detail::eval_cyclic(residual, comp, branches[lo], cfg);
            continue;
          }
          std::vector<std::future<detail::BranchResult>> fs;
          for (std::size_t k = lo; k < hi; ++k)
            fs.push_back(std::async(std::launch::async, [&, k] {
              return detail::eval_cyclic(residual, comp, branches[k], cfg);
            }));
          for (std::size_t k = lo; k < hi; ++k) results[k] = fs[k - lo].get();
        }
        for (std::size_t k = 0; k < branches.size(); ++k) {
          auto& r = results[k];
          if (r.inconsistent) {
            inconsistent = true;
            if (!diag.conflict && r.conflict) diag.conflict = table.name(*r.conflict);
          }
          if (r.max_iters) incomplete = diag.max_iters_exceeded = true;
          if (r.truncated) incomplete = diag.truncated = true;
          for (auto& v : r.values) {
            detail::Branch b = branches[k];
            for (auto& [a, x] : v) b[a] = x;
            next.push_back(std::move(b));
          }
          detail::merge(creport, std::move(r.report));
        }
      }
      if (auto* os = trace(TraceKind::Graph))
        *os << "component " << detail::atoms_label(comp.atoms, table) << " -> " << next.size() << " branch(es)\n";
      diag.components.push_back(std::move(creport));
      if (next.size() > cfg.max_answer_sets) {
        next.resize(cfg.max_answer_sets);
        incomplete = diag.truncated = true;
      }
      branches = std::move(next);
      if (branches.empty()) break;
    }
  }
  diag.branches = branches.size();

  std::vector<Interpretation> candidates;
  for (const auto& b : branches) candidates.push_back(to_interpretation(b, table));
  VerifyOptions vo;
  vo.tol = std::max(cfg.nmi.eps, eps_cmp);
  vo.candidates = candidates;
  for (auto& i : candidates) {
    if (cfg.verify) {
      Verdict v = check_answer_set(i, t, vo);
      if (!v) {
        ++diag.rejected;
        diag.notes.push_back("rejected " + to_string(i) + ": " + v.reason);
        continue;
      }
    }
    rep.answer_sets.push_back(i.strict_closure());
  }

  if (!rep.answer_sets.empty())
    rep.status = incomplete ? SolveStatus::Incomplete : SolveStatus::Ok;
  else if (incomplete)
    rep.status = SolveStatus::Incomplete;
  else if (inconsistent)
    rep.status = SolveStatus::Inconsistent;
  else
    rep.status = SolveStatus::NoAnswerSet;
  return rep;
}

// ---- structural analysis without solving ----------------------------------

struct ComponentAnalysis {
  std::vector<std::string> atoms;
  bool cyclic = false;
  std::vector<std::string> cycles;
  std::vector<std::string> nmi_assumption;
  std::vector<std::string> bb_assumption;
  std::optional<ContractionReport> contraction;
  std::vector<std::string> notes;
};

struct AnalysisReport {
  std::vector<std::string> mi_assigned;  // "name:[l,u]"
  std::vector<ComponentAnalysis> components;  // topological order
  std::string dot;
};

inline AnalysisReport analyze(const Program& input) {
  const Program p = ground(input);
  const TransformedProgram t = transform_program(p);
  AnalysisReport rep;
  MiState mi = mi_fixpoint(t);
  for (const auto& [a, v] : mi.assigned()) rep.mi_assigned.push_back(t.name(a) + ":" + to_string(v));
  DepGraph g = build_dep_graph(mi.residual);
  SccPlan plan = scc_condense(g);
  rep.dot = to_dot(g, &plan);
  for (auto c : plan.topo_order) {
    const Component& comp = plan.components[c];
    if (comp.atoms.empty()) continue;
    ComponentAnalysis ca;
    ca.cyclic = comp.cyclic;
    for (auto a : comp.atoms) ca.atoms.push_back(t.name(a));
    if (comp.cyclic) {
      try {
        auto cycles = enumerate_cycles(g, comp.vertices);
        for (const auto& cy : cycles) ca.cycles.push_back(cycle_string(cy, *t.atoms));
        std::vector<AtomId> chosen;
        try {
          chosen = select_assumption_set(g, comp, cycles, SelectionMode::Nmi).chosen;
          for (auto a : chosen) ca.nmi_assumption.push_back(t.name(a));
        } catch (const Error& e) {
          ca.notes.push_back(e.what());
        }
        try {
          for (auto a : select_assumption_set(g, comp, cycles, SelectionMode::BranchBound).chosen)
            ca.bb_assumption.push_back(t.name(a));
        } catch (const Error&) {
        }
        ca.contraction = check_contraction(g, comp, cycles, chosen);
      } catch (const Error& e) {
        ca.notes.push_back(e.what());
      }
    }
    rep.components.push_back(std::move(ca));
  }
  return rep;
}

}  // namespace unasp
