#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "unasp/program.hpp"

namespace unasp {

namespace detail {

inline void collect_vars(const Atom& a, std::vector<std::string>& out) {
  for (const auto& t : a.args)
    if (auto v = std::get_if<Variable>(&t))
      if (std::find(out.begin(), out.end(), v->name) == out.end()) out.push_back(v->name);
}

inline Atom bind(const Atom& a, const std::map<std::string, Term>& sub) {
  Atom out{a.predicate, {}};
  for (const auto& t : a.args) {
    if (auto v = std::get_if<Variable>(&t))
      out.args.push_back(sub.at(v->name));
    else
      out.args.push_back(t);
  }
  return out;
}

}  // namespace detail

// Naive grounding: every rule is instantiated with every substitution of
// its variables by program constants.
inline Program ground(const Program& p) {
  auto consts = p.constants();
  Program out;
  for (const auto& r : p.rules) {
    std::vector<std::string> vars;
    detail::collect_vars(r.head.atom, vars);
    for (const auto& b : r.body)
      if (auto l = std::get_if<BodyLiteral>(&b)) detail::collect_vars(l->literal.atom, vars);
    if (vars.empty()) {
      out.rules.push_back(r);
      continue;
    }
    if (consts.empty())
      throw Error(Errc::Grounding, "rule '" + r.label + "' has variables but the program has no constants");
    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
      std::map<std::string, Term> sub;
      for (std::size_t i = 0; i < vars.size(); ++i) sub.emplace(vars[i], consts[idx[i]]);
      Rule g = r;
      g.head.atom = detail::bind(r.head.atom, sub);
      for (auto& b : g.body)
        if (auto l = std::get_if<BodyLiteral>(&b)) l->literal.atom = detail::bind(l->literal.atom, sub);
      out.rules.push_back(std::move(g));
      std::size_t k = vars.size();
      while (k > 0 && ++idx[k - 1] == consts.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

}  // namespace unasp
