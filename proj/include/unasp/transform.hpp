#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "unasp/expr.hpp"
#include "unasp/program.hpp"

namespace unasp {

// One body expression per atom; rules carry no weight any more.
struct TransformedProgram {
  std::shared_ptr<const AtomTable> atoms;
  std::map<AtomId, Expr> rules;

  const std::string& name(AtomId a) const { return atoms->name(a); }

  // Same atoms, different rule set.
  TransformedProgram with_rules(std::map<AtomId, Expr> r) const { return {atoms, std::move(r)}; }
};

inline std::string to_string(const TransformedProgram& p) {
  std::string s;
  for (const auto& [a, e] : p.rules) s += p.name(a) + " <- " + to_string(e, *p.atoms) + ".\n";
  return s;
}

inline std::shared_ptr<const AtomTable> atom_table(const Program& p) {
  auto t = std::make_shared<AtomTable>();
  for (const auto& a : p.atom_base()) t->add(a.str());
  return t;
}

inline Expr body_expr(const Rule& r, const AtomTable& atoms) {
  std::vector<Expr> kids;
  for (const auto& b : r.body) {
    if (auto l = std::get_if<BodyLiteral>(&b)) {
      Expr e = Expr::lit(*atoms.find(l->literal.atom.str()), l->literal.negative);
      kids.push_back(l->naf ? Expr::naf(std::move(e)) : std::move(e));
    } else {
      kids.push_back(Expr::constant(std::get<Interval>(b)));
    }
  }
  kids.push_back(Expr::constant(r.weight));
  return simplify(Expr::conj(std::move(kids)));
}

inline Expr r_join(const Literal& l, const Program& p, const AtomTable& atoms) {
  std::vector<Expr> disjuncts;
  for (const auto& r : p.rules)
    if (r.head == l) disjuncts.push_back(body_expr(r, atoms));
  if (disjuncts.empty()) return Expr::constant(Interval::exact(0.0));
  return simplify(Expr::disj(std::move(disjuncts)));
}

inline Expr r_join(const Literal& l, const Program& p) { return r_join(l, p, *atom_table(p)); }

inline TransformedProgram transform_program(const Program& p) {
  TransformedProgram out;
  auto atoms = atom_table(p);
  out.atoms = atoms;
  std::map<std::string, std::pair<bool, bool>> heads;
  for (const auto& r : p.rules) {
    auto& h = heads[r.head.atom.str()];
    (r.head.negative ? h.second : h.first) = true;
  }
  for (const auto& a : p.atom_base()) {
    AtomId id = *atoms->find(a.str());
    auto it = heads.find(a.str());
    bool pos = it != heads.end() && it->second.first;
    bool neg = it != heads.end() && it->second.second;
    Expr e;
    if (pos && neg)
      e = simplify(Expr::kagg(r_join({a, false}, p, *atoms), Expr::neg(r_join({a, true}, p, *atoms))));
    else if (pos)
      e = r_join({a, false}, p, *atoms);
    else if (neg)
      e = simplify(Expr::neg(r_join({a, true}, p, *atoms)));
    else
      e = Expr::constant(Interval::unknown());
    out.rules.emplace(id, std::move(e));
  }
  return out;
}

}  // namespace unasp
