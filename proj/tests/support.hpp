#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "unasp/unasp.hpp"

namespace unasp::testing {

inline std::string programs_dir() { return UNASP_PROGRAMS_DIR; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Program load(const std::string& name) { return parse_program(read_file(programs_dir() + "/" + name)); }

inline bool near(const Interval& x, double lo, double hi, double tol) {
  return std::abs(x.lower() - lo) <= tol && std::abs(x.upper() - hi) <= tol;
}

inline Interval pos(const Interpretation& i, const std::string& a) { return *i.get(a, false); }

inline AtomId id(const TransformedProgram& t, const std::string& a) { return *t.atoms->find(a); }

// ---- random generation ---------------------------------------------------

using Rng = std::mt19937_64;

inline double uniform(Rng& r, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(r);
}
inline std::size_t pick(Rng& r, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(r); }
inline bool chance(Rng& r, double p) { return uniform(r) < p; }

inline Interval random_interval(Rng& r) {
  double x = uniform(r), y = uniform(r);
  return {std::min(x, y), std::max(x, y)};
}

// Two-decimal interval, printable in the rule language.
inline Interval random_decimal_interval(Rng& r) {
  int x = static_cast<int>(pick(r, 101)), y = static_cast<int>(pick(r, 101));
  return {std::min(x, y) / 100.0, std::max(x, y) / 100.0};
}

inline const Interval& random_grid_interval(Rng& r) { return grid_intervals()[pick(r, grid_intervals().size())]; }

inline std::string text(const Interval& v) { return to_string(v); }

// Random read-once expression over atoms 0..m-1: And/Or/Neg only.
inline Expr random_read_once(Rng& r, std::vector<AtomId> atoms) {
  std::shuffle(atoms.begin(), atoms.end(), r);
  std::vector<Expr> parts;
  for (auto a : atoms) parts.push_back(Expr::lit(a, false));
  while (parts.size() > 1) {
    std::size_t i = pick(r, parts.size());
    Expr x = std::move(parts[i]);
    parts.erase(parts.begin() + static_cast<long>(i));
    std::size_t j = pick(r, parts.size());
    Expr y = std::move(parts[j]);
    std::vector<Expr> kids{std::move(x), std::move(y)};
    parts[j] = chance(r, 0.5) ? Expr::conj(std::move(kids)) : Expr::disj(std::move(kids));
    if (chance(r, 0.3)) parts[j] = Expr::neg(std::move(parts[j]));
  }
  return chance(r, 0.3) ? Expr::neg(std::move(parts[0])) : std::move(parts[0]);
}

// Strongly connected, naf-free, aggregation-free program over n atoms: a
// ring x0 <- x1 <- ... <- x0 plus extra rules with positive heads.
inline std::string random_positive_component(Rng& r, std::size_t n) {
  std::ostringstream s;
  auto name = [](std::size_t k) { return "x" + std::to_string(k); };
  auto lit = [&](std::size_t k) { return (chance(r, 0.3) ? "-" : "") + name(k); };
  for (std::size_t k = 0; k < n; ++k) s << name(k) << " <- " << text(random_decimal_interval(r)) << " : " << lit((k + 1) % n) << ".\n";
  std::size_t extra = pick(r, n + 1);
  for (std::size_t e = 0; e < extra; ++e) {
    std::size_t head = pick(r, n);
    std::vector<std::size_t> atoms(n);
    std::iota(atoms.begin(), atoms.end(), 0);
    std::shuffle(atoms.begin(), atoms.end(), r);
    std::size_t len = 1 + pick(r, std::min<std::size_t>(n, 3));
    s << name(head) << " <- " << text(random_decimal_interval(r)) << " : ";
    for (std::size_t k = 0; k < len; ++k) s << (k ? ", " : "") << lit(atoms[k]);
    if (chance(r, 0.2)) s << ", " << text(random_decimal_interval(r));
    s << ".\n";
  }
  return s.str();
}

// Simple cycle x0 <- x1 <- ... <- x(n-1) <- x0 with constant conjuncts and
// disjuncts, optional classical negation or naf on each link.
inline std::string random_simple_cycle(Rng& r, std::size_t n) {
  std::ostringstream s;
  auto nonzero = [&] {
    Interval v = random_decimal_interval(r);
    return v.upper() == 0 ? Interval(0.5, 0.5) : v;
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::string next = "x" + std::to_string((k + 1) % n);
    double p = uniform(r);
    std::string lit = p < 0.25 ? "-" + next : p < 0.45 ? "not " + next : next;
    s << "x" << k << " <- " << text(nonzero()) << " : " << lit;
    if (chance(r, 0.4)) s << ", " << text(nonzero());
    s << ".\n";
    if (chance(r, 0.4)) {
      Interval d = random_decimal_interval(r);
      if (d.lower() == 1) d = Interval(0.5, 1);
      s << "x" << k << " <- [1,1] : " << text(d) << ".\n";
    }
  }
  return s.str();
}

// Program over the atoms a and b with grid weights and constants.
inline std::string random_tiny_program(Rng& r) {
  static const char* lits[] = {"a", "b", "-a", "-b"};
  std::size_t atoms = 1 + pick(r, 2);
  std::size_t rules = 1 + pick(r, 3);
  std::ostringstream s;
  auto grid = [&] { return chance(r, 0.4) ? Interval::exact(1) : random_grid_interval(r); };
  for (std::size_t k = 0; k < rules; ++k) {
    std::size_t h = pick(r, atoms) + (chance(r, 0.3) ? 2 : 0);
    s << lits[h] << " <- " << text(grid());
    std::size_t len = pick(r, 3);
    for (std::size_t j = 0; j < len; ++j) {
      s << (j ? ", " : " : ");
      if (chance(r, 0.25)) {
        s << text(random_grid_interval(r));
      } else {
        if (chance(r, 0.35)) s << "not ";
        s << lits[pick(r, atoms) + (chance(r, 0.3) ? 2 : 0)];
      }
    }
    s << ".\n";
  }
  return s.str();
}

// Normal program: positive heads, naf allowed, no classical negation.
inline std::string random_normal_program(Rng& r) {
  std::size_t atoms = 1 + pick(r, 5);
  std::size_t rules = 1 + pick(r, 8);
  std::ostringstream s;
  auto name = [](std::size_t k) { return "p" + std::to_string(k); };
  for (std::size_t k = 0; k < rules; ++k) {
    s << name(pick(r, atoms)) << " <- " << text(random_decimal_interval(r));
    std::size_t len = pick(r, 4);
    for (std::size_t j = 0; j < len; ++j) {
      s << (j ? ", " : " : ");
      double p = uniform(r);
      if (p < 0.15)
        s << text(random_decimal_interval(r));
      else
        s << (p < 0.5 ? "not " : "") << name(pick(r, atoms));
    }
    s << ".\n";
  }
  return s.str();
}

// ---- oracles -------------------------------------------------------------

inline bool on_grid(double x) {
  for (double g : {0.0, 0.25, 0.5, 0.75, 1.0})
    if (std::abs(x - g) <= 1e-12) return true;
  return false;
}

// True when every rule body of the transformed program maps grid
// valuations to grid intervals (or to the inconsistency marker).
inline bool grid_closed(const TransformedProgram& t) {
  std::vector<std::string> names;
  for (const auto& [a, e] : t.rules) names.push_back(t.name(a));
  bool closed = true;
  for_each_grid_interpretation(names, [&](const Interpretation& i) {
    if (!closed) return;
    for (const auto& [a, e] : t.rules) {
      EpistemicValue v = evaluate(e, *t.atoms, i);
      if (v.consistent() && !(on_grid(v.interval().lower()) && on_grid(v.interval().upper()))) closed = false;
    }
  });
  return closed;
}

// k-minimal supported models of the reduct, by enumeration over the grid
// of fifteen intervals per atom (original-program semantics).
inline std::vector<Interpretation> grid_answer_sets(const Program& p) {
  std::vector<std::string> names;
  for (const auto& a : p.atom_base()) names.push_back(a.str());
  std::vector<Interpretation> out;
  for_each_grid_interpretation(names, [&](const Interpretation& i) {
    Program red = reduct(p, i);
    if (!is_supported_model(i, red)) return;
    bool minimal = true;
    for_each_grid_interpretation(names, [&](const Interpretation& j) {
      if (minimal && strictly_below_kp(j, i) && is_supported_model(j, red)) minimal = false;
    });
    if (minimal) out.push_back(i);
  });
  return out;
}

inline Interpretation positive_part(const Interpretation& i) {
  Interpretation out;
  for (const auto& [a, v] : i.positive()) out.set(a, false, v);
  return out;
}

inline bool same_sets(std::vector<Interpretation> x, std::vector<Interpretation> y, double tol) {
  if (x.size() != y.size()) return false;
  for (const auto& i : x) {
    auto it = std::find_if(y.begin(), y.end(), [&](const Interpretation& j) { return i.approx(j, tol); });
    if (it == y.end()) return false;
    y.erase(it);
  }
  return true;
}

// Chain path: a feeds a conjunction with [x1,y1], negated into a
// conjunction with [x2,y2], a disjunction with [x3,y3], then naf into a
// conjunction with [x4,y4] that defines a.
inline TransformedProgram chain_program(const Interval& c1, const Interval& c2, const Interval& c3, const Interval& c4) {
  auto t = std::make_shared<AtomTable>();
  AtomId a = t->add("a");
  Expr n1 = Expr::conj({Expr::lit(a), Expr::constant(c1)});
  Expr n2 = Expr::conj({Expr::neg(n1), Expr::constant(c2)});
  Expr n3 = Expr::disj({n2, Expr::constant(c3)});
  Expr n4 = Expr::conj({Expr::naf(n3), Expr::constant(c4)});
  TransformedProgram p;
  p.atoms = t;
  p.rules.emplace(a, n4);
  return p;
}

inline GainVector chain_closed_form(const Interval& c1, const Interval& c2, const Interval& c3, const Interval& c4) {
  double y1 = c1.upper(), x2 = c2.lower(), x3 = c3.lower(), x4 = c4.lower(), y4 = c4.upper();
  return {y1 * x2 * x4 * (1 - x3), y1 * x2 * y4 * (1 - x3)};
}

inline GainVector gain_of_single_cycle(const TransformedProgram& p) {
  DepGraph g = build_dep_graph(p);
  SccPlan plan = scc_condense(g);
  for (const auto& c : plan.components) {
    if (!c.cyclic) continue;
    auto cycles = enumerate_cycles(g, c.vertices);
    auto sel = select_assumption_set(g, c, cycles, SelectionMode::Nmi);
    Vpg vpg = build_vpg(g, c, sel.chosen);
    return cycle_gain(g, vpg.paths.at(0));
  }
  throw std::runtime_error("no cycle");
}

// One outer step of the ex7 iteration in closed form.
struct Ex7State {
  double a1, a2, g1, g2;
};

inline Ex7State ex7_step(const Ex7State& s) {
  return {0.6 - 0.6 * s.a1 * (1 - s.g1), 0.8 - 0.8 * s.a1 * (1 - s.g2), 0.3 - 0.3 * (1 - s.g1) * s.a2,
          0.7 - 0.63 * (1 - s.g2) * s.a1};
}

// Shared scaffolding for the component-level properties.
struct Cut {
  TransformedProgram program;
  std::vector<AtomId> chosen;
  ContractionReport contraction;
};

inline Cut cut_component(const Program& p) {
  TransformedProgram t = transform_program(ground(p));
  MiState mi = mi_fixpoint(t);
  if (mi.residual.rules.size() != t.rules.size()) throw std::runtime_error("component partly closed by MI");
  DepGraph g = build_dep_graph(t);
  SccPlan plan = scc_condense(g);
  for (const auto& c : plan.components) {
    if (c.atoms.size() != t.rules.size()) continue;
    auto cycles = enumerate_cycles(g, c.vertices);
    auto sel = select_assumption_set(g, c, cycles, SelectionMode::Nmi, [&](const std::vector<AtomId>& s) {
      try {
        build_vpg(g, c, s);
        return true;
      } catch (const Error&) {
        return false;
      }
    });
    return {t, sel.chosen, check_contraction(g, c, cycles, sel.chosen)};
  }
  throw std::runtime_error("not strongly connected");
}

}  // namespace unasp::testing
