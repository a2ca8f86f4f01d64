#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "unasp/transform.hpp"

namespace unasp {

enum class VertexKind { Atom, And, Or, Kagg, Const };
enum class EdgeOp { Neg, Naf };
enum class EdgeWeight { None, Naf, Neg };

struct Vertex {
  VertexKind kind = VertexKind::Atom;
  AtomId atom = 0;   // the atom itself, or the head owning an operator/constant
  Interval value;    // constants only
};

struct Edge {
  std::size_t from = 0, to = 0;
  std::vector<EdgeOp> ops;  // applied in order to the source's value

  EdgeWeight weight() const {
    if (std::find(ops.begin(), ops.end(), EdgeOp::Naf) != ops.end()) return EdgeWeight::Naf;
    if (!ops.empty()) return EdgeWeight::Neg;
    return EdgeWeight::None;
  }
};

class DepGraph {
 public:
  std::shared_ptr<const AtomTable> atoms;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> out, in;  // edge indices

  std::size_t add_vertex(Vertex v) {
    vertices.push_back(v);
    out.emplace_back();
    in.emplace_back();
    return vertices.size() - 1;
  }

  void add_edge(std::size_t from, std::size_t to, std::vector<EdgeOp> ops) {
    edges.push_back({from, to, std::move(ops)});
    out[from].push_back(edges.size() - 1);
    in[to].push_back(edges.size() - 1);
  }

  std::size_t atom_vertex(AtomId a) {
    auto it = atom_index_.find(a);
    if (it != atom_index_.end()) return it->second;
    std::size_t v = add_vertex({VertexKind::Atom, a, {}});
    atom_index_.emplace(a, v);
    return v;
  }

  std::optional<std::size_t> find_atom(AtomId a) const {
    auto it = atom_index_.find(a);
    if (it == atom_index_.end()) return std::nullopt;
    return it->second;
  }

  bool is_atom(std::size_t v) const { return vertices[v].kind == VertexKind::Atom; }

  std::string label(std::size_t v) const {
    const Vertex& x = vertices[v];
    switch (x.kind) {
      case VertexKind::Atom: return atoms->name(x.atom);
      case VertexKind::And: return "and";
      case VertexKind::Or: return "or";
      case VertexKind::Kagg: return "kagg";
      case VertexKind::Const: return to_string(x.value);
    }
    return "?";
  }

 private:
  std::map<AtomId, std::size_t> atom_index_;
};

namespace detail {

struct Port {
  std::size_t vertex;
  std::vector<EdgeOp> ops;
};

inline Port build_port(DepGraph& g, const Expr& e, AtomId owner) {
  switch (e.kind) {
    case ExprKind::Lit: {
      Port p{g.atom_vertex(e.atom), {}};
      if (e.negative) p.ops.push_back(EdgeOp::Neg);
      return p;
    }
    case ExprKind::Const: return {g.add_vertex({VertexKind::Const, owner, e.value}), {}};
    case ExprKind::Neg: {
      Port p = build_port(g, e.kids[0], owner);
      if (!p.ops.empty() && p.ops.back() == EdgeOp::Neg)
        p.ops.pop_back();
      else
        p.ops.push_back(EdgeOp::Neg);
      return p;
    }
    case ExprKind::Naf: {
      Port p = build_port(g, e.kids[0], owner);
      p.ops.push_back(EdgeOp::Naf);
      return p;
    }
    case ExprKind::And:
    case ExprKind::Or:
    case ExprKind::Kagg: {
      VertexKind k = e.kind == ExprKind::And ? VertexKind::And
                     : e.kind == ExprKind::Or ? VertexKind::Or
                                              : VertexKind::Kagg;
      std::size_t v = g.add_vertex({k, owner, {}});
      for (const auto& c : e.kids) {
        Port p = build_port(g, c, owner);
        g.add_edge(p.vertex, v, std::move(p.ops));
      }
      return {v, {}};
    }
  }
  return {0, {}};
}

}  // namespace detail

inline DepGraph build_dep_graph(const TransformedProgram& p) {
  DepGraph g;
  g.atoms = p.atoms;
  for (const auto& [a, e] : p.rules) g.atom_vertex(a);
  for (const auto& [a, e] : p.rules) {
    detail::Port port = detail::build_port(g, e, a);
    g.add_edge(port.vertex, g.atom_vertex(a), std::move(port.ops));
  }
  return g;
}

// ---- SCC condensation ----------------------------------------------------

struct Component {
  std::vector<std::size_t> vertices;  // sorted
  std::vector<AtomId> atoms;          // sorted
  bool cyclic = false;                // more than one vertex, or a self-loop
};

struct SccPlan {
  std::vector<Component> components;
  std::vector<std::size_t> topo_order;    // component indices
  std::vector<std::size_t> component_of;  // per vertex
};

// Kosaraju: first pass records finish order on g, second pass collects
// components on the transpose.
inline SccPlan scc_condense(const DepGraph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < g.out[v].size()) {
        std::size_t w = g.edges[g.out[v][i++]].to;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  SccPlan plan;
  const std::size_t none = static_cast<std::size_t>(-1);
  plan.component_of.assign(n, none);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (plan.component_of[*it] != none) continue;
    std::size_t c = plan.components.size();
    plan.components.emplace_back();
    std::vector<std::size_t> stack{*it};
    plan.component_of[*it] = c;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      plan.components[c].vertices.push_back(v);
      for (auto e : g.in[v]) {
        std::size_t w = g.edges[e].from;
        if (plan.component_of[w] == none) {
          plan.component_of[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  for (auto& comp : plan.components) {
    std::sort(comp.vertices.begin(), comp.vertices.end());
    for (auto v : comp.vertices)
      if (g.is_atom(v)) comp.atoms.push_back(g.vertices[v].atom);
    std::sort(comp.atoms.begin(), comp.atoms.end());
    comp.cyclic = comp.vertices.size() > 1;
    for (auto e : g.out[comp.vertices[0]])
      if (g.edges[e].to == comp.vertices[0]) comp.cyclic = true;
  }
  // Kahn's algorithm, smallest leading vertex first.
  const std::size_t m = plan.components.size();
  std::vector<std::set<std::size_t>> succ(m);
  std::vector<std::size_t> indeg(m, 0);
  for (const auto& e : g.edges) {
    std::size_t a = plan.component_of[e.from], b = plan.component_of[e.to];
    if (a != b && succ[a].insert(b).second) ++indeg[b];
  }
  auto key = [&](std::size_t c) { return plan.components[c].vertices[0]; };
  auto cmp = [&](std::size_t x, std::size_t y) { return key(x) > key(y); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> ready(cmp);
  for (std::size_t c = 0; c < m; ++c)
    if (indeg[c] == 0) ready.push(c);
  while (!ready.empty()) {
    std::size_t c = ready.top();
    ready.pop();
    plan.topo_order.push_back(c);
    for (auto d : succ[c])
      if (--indeg[d] == 0) ready.push(d);
  }
  return plan;
}

// ---- elementary cycles (Johnson) ------------------------------------------

struct Cycle {
  std::vector<std::size_t> vertices;  // starts at its smallest vertex
  std::vector<AtomId> atoms;          // rotated to start at the smallest atom

  std::vector<std::string> names(const AtomTable& t) const {
    std::vector<std::string> v;
    for (auto a : atoms) v.push_back(t.name(a));
    return v;
  }
};

inline std::string cycle_string(const Cycle& c, const AtomTable& t) {
  std::string s;
  for (auto a : c.atoms) s += t.name(a) + "->";
  return s + (c.atoms.empty() ? "" : t.name(c.atoms[0]));
}

inline constexpr std::size_t default_cycle_cap = 10000;

namespace detail {

class Johnson {
 public:
  Johnson(const DepGraph& g, const std::vector<std::size_t>& verts, std::size_t cap) : g_(g), cap_(cap) {
    for (auto v : verts) local_.emplace(v, local_.size());
    global_.assign(local_.size(), 0);
    for (auto [v, i] : local_) global_[i] = v;
    adj_.resize(local_.size());
    for (auto [v, i] : local_)
      for (auto e : g.out[v]) {
        auto it = local_.find(g.edges[e].to);
        if (it != local_.end()) adj_[i].push_back(it->second);
      }
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }

  std::vector<std::vector<std::size_t>> run() {
    const std::size_t n = adj_.size();
    blocked_.assign(n, 0);
    B_.assign(n, {});
    for (s_ = 0; s_ < n; ++s_) {
      auto comp = scc_of(s_);
      if (comp.empty()) continue;
      in_comp_.assign(n, 0);
      for (auto v : comp) {
        in_comp_[v] = 1;
        blocked_[v] = 0;
        B_[v].clear();
      }
      circuit(s_);
    }
    return std::move(found_);
  }

 private:
  // Vertices of the SCC containing s in the subgraph induced by {v >= s};
  // empty when s lies on no cycle there.
  std::vector<std::size_t> scc_of(std::size_t s) {
    const std::size_t n = adj_.size();
    std::vector<char> fwd(n, 0), bwd(n, 0);
    std::vector<std::size_t> st{s};
    fwd[s] = 1;
    while (!st.empty()) {
      auto v = st.back();
      st.pop_back();
      for (auto w : adj_[v])
        if (w >= s && !fwd[w]) fwd[w] = 1, st.push_back(w);
    }
    std::vector<std::vector<std::size_t>> radj(n);
    for (std::size_t v = s; v < n; ++v)
      for (auto w : adj_[v])
        if (w >= s) radj[w].push_back(v);
    st = {s};
    bwd[s] = 1;
    while (!st.empty()) {
      auto v = st.back();
      st.pop_back();
      for (auto w : radj[v])
        if (!bwd[w]) bwd[w] = 1, st.push_back(w);
    }
    std::vector<std::size_t> comp;
    for (std::size_t v = s; v < n; ++v)
      if (fwd[v] && bwd[v]) comp.push_back(v);
    bool self = std::find(adj_[s].begin(), adj_[s].end(), s) != adj_[s].end();
    if (comp.size() == 1 && !self) comp.clear();
    return comp;
  }

  void unblock(std::size_t u) {
    std::vector<std::size_t> st{u};
    while (!st.empty()) {
      auto v = st.back();
      st.pop_back();
      if (!blocked_[v]) continue;
      blocked_[v] = 0;
      for (auto w : B_[v]) st.push_back(w);
      B_[v].clear();
    }
  }

  bool circuit(std::size_t v) {
    bool f = false;
    path_.push_back(v);
    blocked_[v] = 1;
    for (auto w : adj_[v]) {
      if (!in_comp_[w]) continue;
      if (w == s_) {
        std::vector<std::size_t> c;
        for (auto x : path_) c.push_back(global_[x]);
        found_.push_back(std::move(c));
        if (found_.size() > cap_)
          throw Error(Errc::AnalysisOverflow, "more than " + std::to_string(cap_) + " elementary cycles");
        f = true;
      } else if (!blocked_[w]) {
        if (circuit(w)) f = true;
      }
    }
    if (f) {
      unblock(v);
    } else {
      for (auto w : adj_[v])
        if (in_comp_[w] && std::find(B_[w].begin(), B_[w].end(), v) == B_[w].end()) B_[w].push_back(v);
    }
    path_.pop_back();
    return f;
  }

  const DepGraph& g_;
  std::size_t cap_;
  std::map<std::size_t, std::size_t> local_;
  std::vector<std::size_t> global_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<char> blocked_, in_comp_;
  std::vector<std::vector<std::size_t>> B_;
  std::vector<std::size_t> path_;
  std::vector<std::vector<std::size_t>> found_;
  std::size_t s_ = 0;
};

}  // namespace detail

inline Cycle make_cycle(const DepGraph& g, std::vector<std::size_t> verts) {
  Cycle c;
  auto m = std::min_element(verts.begin(), verts.end());
  std::rotate(verts.begin(), m, verts.end());
  c.vertices = verts;
  for (auto v : verts)
    if (g.is_atom(v)) c.atoms.push_back(g.vertices[v].atom);
  if (!c.atoms.empty()) {
    auto a = std::min_element(c.atoms.begin(), c.atoms.end());
    std::rotate(c.atoms.begin(), a, c.atoms.end());
  }
  return c;
}

inline std::vector<Cycle> enumerate_cycles(const DepGraph& g, const std::vector<std::size_t>& component,
                                           std::size_t cap = default_cycle_cap) {
  std::vector<Cycle> out;
  for (auto& verts : detail::Johnson(g, component, cap).run()) out.push_back(make_cycle(g, std::move(verts)));
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    return std::tie(a.atoms, a.vertices) < std::tie(b.atoms, b.vertices);
  });
  return out;
}

// ---- assumption sets -------------------------------------------------------

struct IntersectionTable {
  std::vector<AtomId> columns;
  std::vector<std::vector<char>> rows;  // one per cycle

  std::size_t column(AtomId a) const {
    return static_cast<std::size_t>(std::find(columns.begin(), columns.end(), a) - columns.begin());
  }
};

inline IntersectionTable intersection_table(const Component& comp, const std::vector<Cycle>& cycles) {
  IntersectionTable t;
  t.columns = comp.atoms;
  for (const auto& c : cycles) {
    std::vector<char> row(t.columns.size(), 0);
    for (auto a : c.atoms) row[t.column(a)] = 1;
    t.rows.push_back(std::move(row));
  }
  return t;
}

// Every cycle contains a chosen atom.
inline bool covers_all_cycles(const IntersectionTable& t, const std::vector<AtomId>& chosen) {
  for (const auto& row : t.rows) {
    bool hit = false;
    for (auto a : chosen) hit = hit || row[t.column(a)];
    if (!hit) return false;
  }
  return true;
}

// Each chosen atom lies on a cycle that avoids the others.
inline bool chosen_independent(const IntersectionTable& t, const std::vector<AtomId>& chosen) {
  for (auto a : chosen) {
    bool ok = false;
    for (const auto& row : t.rows) {
      if (!row[t.column(a)]) continue;
      bool alone = true;
      for (auto b : chosen)
        if (b != a && row[t.column(b)]) alone = false;
      if (alone) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

enum class SelectionMode { Nmi, BranchBound };

struct AssumptionSelection {
  std::vector<AtomId> chosen;
  IntersectionTable table;
};

// Atoms feeding a disjunction directly: the preferred cut points, since a
// disjunct left on the path adds terms to every row of the Jacobian.
inline std::set<AtomId> disjunction_feeders(const DepGraph& g, const Component& comp) {
  std::set<std::size_t> inside(comp.vertices.begin(), comp.vertices.end());
  std::set<AtomId> out;
  for (const auto& e : g.edges)
    if (g.is_atom(e.from) && inside.count(e.from) && inside.count(e.to) && g.vertices[e.to].kind == VertexKind::Or)
      out.insert(g.vertices[e.from].atom);
  return out;
}

// Atoms receiving a naf edge from inside the component into their rule.
inline std::set<AtomId> naf_heads(const DepGraph& g, const Component& comp) {
  std::set<std::size_t> inside(comp.vertices.begin(), comp.vertices.end());
  std::set<AtomId> out;
  for (const auto& e : g.edges)
    if (e.weight() == EdgeWeight::Naf && inside.count(e.from) && inside.count(e.to))
      out.insert(g.vertices[e.to].atom);
  return out;
}

// Smallest independent set covering every cycle, found by iterative deepening
// over the intersection table: branch on the least-covered uncovered row,
// trying atoms that cover more rows first, disjunction feeders before others,
// then by atom order.
inline AssumptionSelection select_assumption_set(const DepGraph& g, const Component& comp,
                                                 const std::vector<Cycle>& cycles, SelectionMode mode,
                                                 const std::function<bool(const std::vector<AtomId>&)>& accept = {}) {
  if (cycles.empty()) throw Error(Errc::NoValidAssumptionSet, "component has no cycles");
  AssumptionSelection sel;
  sel.table = intersection_table(comp, cycles);
  const auto& t = sel.table;
  std::set<AtomId> allowed(comp.atoms.begin(), comp.atoms.end());
  if (mode == SelectionMode::BranchBound) allowed = naf_heads(g, comp);
  auto pref = disjunction_feeders(g, comp);
  std::map<AtomId, std::size_t> coverage;
  for (auto a : t.columns)
    for (const auto& row : t.rows) coverage[a] += row[t.column(a)] ? 1 : 0;
  auto better = [&](AtomId x, AtomId y) {
    if (coverage[x] != coverage[y]) return coverage[x] > coverage[y];
    if (pref.count(x) != pref.count(y)) return pref.count(x) > pref.count(y);
    return x < y;
  };

  std::vector<AtomId> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t budget) -> bool {
    std::optional<std::size_t> pick;
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      bool hit = false;
      std::size_t options = 0;
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (!t.rows[r][c]) continue;
        if (std::find(chosen.begin(), chosen.end(), t.columns[c]) != chosen.end()) hit = true;
        if (allowed.count(t.columns[c])) ++options;
      }
      if (!hit && options < best) {
        best = options;
        pick = r;
      }
    }
    if (!pick) {
      std::vector<AtomId> s = chosen;
      std::sort(s.begin(), s.end());
      return chosen_independent(t, s) && (!accept || accept(s));
    }
    if (budget == 0) return false;
    std::vector<AtomId> options;
    for (std::size_t c = 0; c < t.columns.size(); ++c)
      if (t.rows[*pick][c] && allowed.count(t.columns[c])) options.push_back(t.columns[c]);
    std::sort(options.begin(), options.end(), better);
    for (auto a : options) {
      chosen.push_back(a);
      if (search(budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t k = 1; k <= t.columns.size(); ++k) {
    chosen.clear();
    if (search(k)) {
      sel.chosen = chosen;
      std::sort(sel.chosen.begin(), sel.chosen.end());
      return sel;
    }
  }
  throw Error(Errc::NoValidAssumptionSet,
              mode == SelectionMode::BranchBound ? "no assumption set of naf-edge heads covers every cycle"
                                                 : "no assumption set satisfies the selection criteria");
}

// ---- value-propagation graph ----------------------------------------------

struct VpgNode {
  std::size_t vertex = 0;
  bool previous = false;  // a chosen atom's value from the previous step
  friend bool operator==(const VpgNode&, const VpgNode&) = default;
};

struct VpgEdge {
  std::size_t from = 0, to = 0;  // indices into Vpp::nodes
  std::size_t edge = 0;          // graph edge
};

// Everything feeding a chosen atom's next value, in topological order; the
// last node is the atom itself.
struct Vpp {
  AtomId atom = 0;
  std::vector<VpgNode> nodes;
  std::vector<VpgEdge> edges;
};

struct Vpg {
  std::vector<Vpp> paths;
};

inline Vpg build_vpg(const DepGraph& g, const Component& comp, const std::vector<AtomId>& chosen) {
  std::set<std::size_t> inside(comp.vertices.begin(), comp.vertices.end());
  std::set<std::size_t> cut;
  for (auto a : chosen) cut.insert(*g.find_atom(a));
  // Split graph: chosen atoms become a source copy (previous) and a sink.
  std::map<std::pair<std::size_t, bool>, std::size_t> id;
  std::vector<VpgNode> nodes;
  auto node = [&](std::size_t v, bool prev) {
    auto [it, fresh] = id.emplace(std::make_pair(v, prev), nodes.size());
    if (fresh) nodes.push_back({v, prev});
    return it->second;
  };
  struct SplitEdge {
    std::size_t from, to, edge;
  };
  std::vector<SplitEdge> sedges;
  for (auto v : comp.vertices) node(v, false);
  for (auto v : comp.vertices)
    for (auto e : g.out[v]) {
      std::size_t w = g.edges[e].to;
      if (!inside.count(w)) continue;
      sedges.push_back({node(v, cut.count(v) > 0), node(w, false), e});
    }
  const std::size_t n = nodes.size();
  std::vector<std::vector<std::size_t>> succ(n), pred(n);
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t i = 0; i < sedges.size(); ++i) {
    succ[sedges[i].from].push_back(i);
    pred[sedges[i].to].push_back(i);
    ++indeg[sedges[i].to];
  }
  std::vector<std::size_t> order, rank(n, 0);
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(i);
  while (!ready.empty()) {
    auto i = ready.top();
    ready.pop();
    rank[i] = order.size();
    order.push_back(i);
    for (auto e : succ[i])
      if (--indeg[sedges[e].to] == 0) ready.push(sedges[e].to);
  }
  if (order.size() != n) throw Error(Errc::CyclicVpg, "cutting at the assumption set leaves a cycle");

  Vpg vpg;
  for (auto a : chosen) {
    std::size_t sink = node(*g.find_atom(a), false);
    std::set<std::size_t> anc{sink};
    std::vector<std::size_t> st{sink};
    while (!st.empty()) {
      auto i = st.back();
      st.pop_back();
      for (auto e : pred[i])
        if (anc.insert(sedges[e].from).second) st.push_back(sedges[e].from);
    }
    std::vector<std::size_t> members(anc.begin(), anc.end());
    std::sort(members.begin(), members.end(), [&](auto x, auto y) { return rank[x] < rank[y]; });
    Vpp p;
    p.atom = a;
    std::map<std::size_t, std::size_t> local;
    for (auto i : members) {
      local.emplace(i, p.nodes.size());
      p.nodes.push_back(nodes[i]);
    }
    for (const auto& e : sedges)
      if (anc.count(e.from) && anc.count(e.to)) p.edges.push_back({local[e.from], local[e.to], e.edge});
    vpg.paths.push_back(std::move(p));
  }
  return vpg;
}

inline std::string to_dot(const DepGraph& g, const SccPlan* plan = nullptr) {
  std::string s = "digraph dependency {\n  rankdir=LR;\n";
  auto emit_vertex = [&](std::size_t v, const std::string& indent) {
    const auto& x = g.vertices[v];
    std::string shape = x.kind == VertexKind::Atom ? "ellipse" : x.kind == VertexKind::Const ? "box" : "diamond";
    s += indent + "v" + std::to_string(v) + " [label=\"" + g.label(v) + "\", shape=" + shape + "];\n";
  };
  if (plan) {
    for (std::size_t c = 0; c < plan->components.size(); ++c) {
      const auto& comp = plan->components[c];
      if (!comp.cyclic) {
        for (auto v : comp.vertices) emit_vertex(v, "  ");
        continue;
      }
      std::string name;
      for (auto a : comp.atoms) name += g.atoms->name(a);
      s += "  subgraph cluster_" + std::to_string(c) + " {\n    label=\"" + name + "\";\n";
      for (auto v : comp.vertices) emit_vertex(v, "    ");
      s += "  }\n";
    }
  } else {
    for (std::size_t v = 0; v < g.vertices.size(); ++v) emit_vertex(v, "  ");
  }
  for (const auto& e : g.edges) {
    s += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to);
    switch (e.weight()) {
      case EdgeWeight::Naf: s += " [label=\"-1\"]"; break;
      case EdgeWeight::Neg: s += " [label=\"neg\"]"; break;
      case EdgeWeight::None: break;
    }
    s += ";\n";
  }
  return s + "}\n";
}

}  // namespace unasp
