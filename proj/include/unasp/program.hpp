#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "unasp/interval.hpp"

namespace unasp {

struct Constant {
  std::string name;
  friend bool operator==(const Constant&, const Constant&) = default;
};

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
};

using Term = std::variant<Constant, Variable, Interval>;

inline std::string to_string(const Term& t) {
  if (auto c = std::get_if<Constant>(&t)) return c->name;
  if (auto v = std::get_if<Variable>(&t)) return v->name;
  return to_string(std::get<Interval>(t));
}

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool ground() const {
    for (const auto& t : args)
      if (std::holds_alternative<Variable>(t)) return false;
    return true;
  }

  std::string str() const {
    std::string s = predicate;
    if (!args.empty()) {
      s += '(';
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += ',';
        s += to_string(args[i]);
      }
      s += ')';
    }
    return s;
  }

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Literal {
  Atom atom;
  bool negative = false;

  std::string str() const { return (negative ? "-" : "") + atom.str(); }
  Literal complement() const { return {atom, !negative}; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct BodyLiteral {
  Literal literal;
  bool naf = false;
  friend bool operator==(const BodyLiteral&, const BodyLiteral&) = default;
};

using BodyItem = std::variant<BodyLiteral, Interval>;

inline std::string to_string(const BodyItem& b) {
  if (auto l = std::get_if<BodyLiteral>(&b)) return (l->naf ? "not " : "") + l->literal.str();
  return to_string(std::get<Interval>(b));
}

struct Rule {
  std::string label;
  bool synthetic_label = false;
  Literal head;
  Interval weight = Interval::exact(1.0);
  std::vector<BodyItem> body;

  bool fact() const {
    for (const auto& b : body)
      if (std::holds_alternative<BodyLiteral>(b)) return false;
    return true;
  }

  friend bool operator==(const Rule&, const Rule&) = default;
};

inline std::string to_string(const Rule& r) {
  std::string s;
  if (!r.synthetic_label) s += r.label + ": ";
  s += r.head.str() + " <- " + to_string(r.weight);
  bool unit_body = r.body.size() == 1 && std::holds_alternative<Interval>(r.body[0]) &&
                   std::get<Interval>(r.body[0]) == Interval::exact(1.0);
  if (!unit_body) {
    s += " : ";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      if (i) s += ", ";
      s += to_string(r.body[i]);
    }
  }
  return s + ".";
}

struct Program {
  std::vector<Rule> rules;

  // Every constant-like term occurring anywhere, ordered by printed form.
  std::vector<Term> constants() const {
    std::map<std::string, Term> out;
    auto add_atom = [&](const Atom& a) {
      for (const auto& t : a.args)
        if (!std::holds_alternative<Variable>(t)) out.emplace(to_string(t), t);
    };
    for (const auto& r : rules) {
      add_atom(r.head.atom);
      for (const auto& b : r.body)
        if (auto l = std::get_if<BodyLiteral>(&b)) add_atom(l->literal.atom);
    }
    std::vector<Term> v;
    for (auto& [k, t] : out) v.push_back(t);
    return v;
  }

  std::map<std::string, std::size_t> predicates() const {
    std::map<std::string, std::size_t> out;
    for (const auto& r : rules) {
      out.emplace(r.head.atom.predicate, r.head.atom.args.size());
      for (const auto& b : r.body)
        if (auto l = std::get_if<BodyLiteral>(&b))
          out.emplace(l->literal.atom.predicate, l->literal.atom.args.size());
    }
    return out;
  }

  // Herbrand base: every atom built from the program's predicates and
  // constants, ordered by printed form.
  std::vector<Atom> atom_base() const {
    auto consts = constants();
    std::map<std::string, Atom> out;
    for (const auto& [pred, arity] : predicates()) {
      if (arity > 0 && consts.empty()) continue;
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        Atom a{pred, {}};
        for (auto i : idx) a.args.push_back(consts[i]);
        out.emplace(a.str(), a);
        std::size_t k = arity;
        while (k > 0 && ++idx[k - 1] == consts.size()) idx[--k] = 0;
        if (k == 0) break;
      }
    }
    std::vector<Atom> v;
    for (auto& [k, a] : out) v.push_back(a);
    return v;
  }

  std::vector<Literal> lit_set() const {
    std::vector<Literal> v;
    for (auto& a : atom_base()) {
      v.push_back({a, false});
      v.push_back({a, true});
    }
    return v;
  }

  friend bool operator==(const Program&, const Program&) = default;
};

inline std::string to_string(const Program& p) {
  std::string s;
  for (const auto& r : p.rules) s += to_string(r) + "\n";
  return s;
}

}  // namespace unasp
