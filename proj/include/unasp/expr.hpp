#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "unasp/interval.hpp"

namespace unasp {

using AtomId = std::size_t;

class AtomTable {
 public:
  AtomId add(const std::string& name) {
    auto [it, fresh] = index_.emplace(name, names_.size());
    if (fresh) names_.push_back(name);
    return it->second;
  }
  std::optional<AtomId> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  const std::string& name(AtomId id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> index_;
};

enum class ExprKind { And, Or, Neg, Naf, Kagg, Lit, Const };

// Body expression of a transformed rule.
struct Expr {
  ExprKind kind = ExprKind::Const;
  Interval value;
  AtomId atom = 0;
  bool negative = false;
  std::vector<Expr> kids;

  static Expr constant(const Interval& v) {
    Expr e;
    e.value = v;
    return e;
  }
  static Expr lit(AtomId a, bool negative = false) {
    Expr e;
    e.kind = ExprKind::Lit;
    e.atom = a;
    e.negative = negative;
    return e;
  }
  static Expr nary(ExprKind k, std::vector<Expr> kids) {
    Expr e;
    e.kind = k;
    e.kids = std::move(kids);
    return e;
  }
  static Expr conj(std::vector<Expr> kids) { return nary(ExprKind::And, std::move(kids)); }
  static Expr disj(std::vector<Expr> kids) { return nary(ExprKind::Or, std::move(kids)); }
  static Expr neg(Expr x) { return nary(ExprKind::Neg, {std::move(x)}); }
  static Expr naf(Expr x) { return nary(ExprKind::Naf, {std::move(x)}); }
  static Expr kagg(Expr x, Expr y) { return nary(ExprKind::Kagg, {std::move(x), std::move(y)}); }

  bool is_const() const { return kind == ExprKind::Const; }

  friend bool operator==(const Expr&, const Expr&) = default;
};

template <class F>
void for_each_literal(const Expr& e, F&& f) {
  if (e.kind == ExprKind::Lit) {
    f(e.atom, e.negative);
    return;
  }
  for (const auto& k : e.kids) for_each_literal(k, f);
}

inline bool closed(const Expr& e) {
  bool open = false;
  for_each_literal(e, [&](AtomId, bool) { open = true; });
  return !open;
}

inline bool contains(const Expr& e, ExprKind k) {
  if (e.kind == k) return true;
  for (const auto& c : e.kids)
    if (contains(c, k)) return true;
  return false;
}

// Lookup: callable (AtomId, bool negative) -> std::optional<EpistemicValue>.
template <class Lookup>
EpistemicValue evaluate(const Expr& e, Lookup&& lookup) {
  switch (e.kind) {
    case ExprKind::Const: return e.value;
    case ExprKind::Lit: {
      std::optional<EpistemicValue> v = lookup(e.atom, e.negative);
      if (!v) throw Error(Errc::UnboundLiteral, "unbound literal #" + std::to_string(e.atom));
      return *v;
    }
    case ExprKind::Neg: return negate(evaluate(e.kids[0], lookup));
    case ExprKind::Naf: return naf(evaluate(e.kids[0], lookup));
    case ExprKind::And: {
      EpistemicValue acc = Interval::exact(1.0);
      for (const auto& k : e.kids) acc = tnorm(acc, evaluate(k, lookup));
      return acc;
    }
    case ExprKind::Or: {
      EpistemicValue acc = Interval::exact(0.0);
      for (const auto& k : e.kids) acc = tconorm(acc, evaluate(k, lookup));
      return acc;
    }
    case ExprKind::Kagg: return kagg(evaluate(e.kids[0], lookup), evaluate(e.kids[1], lookup));
  }
  return EpistemicValue::inconsistent();
}

inline EpistemicValue evaluate_closed(const Expr& e) {
  return evaluate(e, [](AtomId, bool) -> std::optional<EpistemicValue> { return std::nullopt; });
}

// Constant folding plus unit rules: [1,1] is dropped under And, [0,0] under
// Or; [0,0] annihilates And and [1,1] annihilates Or.
inline Expr simplify(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Const:
    case ExprKind::Lit: return e;
    case ExprKind::Neg: {
      Expr k = simplify(e.kids[0]);
      if (k.is_const()) return Expr::constant(negate(k.value));
      if (k.kind == ExprKind::Neg) return k.kids[0];
      return Expr::neg(std::move(k));
    }
    case ExprKind::Naf: {
      Expr k = simplify(e.kids[0]);
      if (k.is_const()) return Expr::constant(naf(k.value));
      return Expr::naf(std::move(k));
    }
    case ExprKind::Kagg: {
      Expr a = simplify(e.kids[0]);
      Expr b = simplify(e.kids[1]);
      if (a.is_const() && b.is_const()) {
        EpistemicValue v = kagg(a.value, b.value);
        if (v.consistent()) return Expr::constant(v.interval());
      }
      return Expr::kagg(std::move(a), std::move(b));
    }
    case ExprKind::And:
    case ExprKind::Or: {
      const bool conj = e.kind == ExprKind::And;
      const Interval unit = Interval::exact(conj ? 1.0 : 0.0);
      const Interval zero = Interval::exact(conj ? 0.0 : 1.0);
      std::vector<Expr> kids;
      Interval acc = unit;
      bool folded = false;
      auto absorb = [&](Expr k) {
        if (k.is_const()) {
          acc = conj ? tnorm(acc, k.value) : tconorm(acc, k.value);
          folded = true;
        } else {
          kids.push_back(std::move(k));
        }
      };
      for (const auto& c : e.kids) {
        Expr k = simplify(c);
        if (k.kind == e.kind) {
          for (auto& g : k.kids) absorb(std::move(g));
        } else {
          absorb(std::move(k));
        }
      }
      if (folded && acc == zero) return Expr::constant(zero);
      if (folded && !(acc == unit)) kids.push_back(Expr::constant(acc));
      if (kids.empty()) return Expr::constant(acc);
      if (kids.size() == 1) return std::move(kids[0]);
      return Expr::nary(e.kind, std::move(kids));
    }
  }
  return e;
}

// Replaces every literal whose value is known by a constant (naf applied
// where the literal sits under Naf). Lookup as in evaluate.
template <class Lookup>
Expr substitute(const Expr& e, Lookup&& lookup) {
  if (e.kind == ExprKind::Lit) {
    std::optional<EpistemicValue> v = lookup(e.atom, e.negative);
    if (v && v->consistent()) return Expr::constant(v->interval());
    return e;
  }
  if (e.kind == ExprKind::Const) return e;
  Expr out = e;
  for (auto& k : out.kids) k = substitute(k, lookup);
  return out;
}

inline std::string to_string(const Expr& e, const AtomTable& atoms) {
  auto group = [&](const char* sep) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.kids.size(); ++i) {
      if (i) s += sep;
      s += to_string(e.kids[i], atoms);
    }
    return s + ")";
  };
  switch (e.kind) {
    case ExprKind::Const: return to_string(e.value);
    case ExprKind::Lit: return (e.negative ? "-" : "") + atoms.name(e.atom);
    case ExprKind::Neg: return "-" + (e.kids[0].kind == ExprKind::Lit ? "(" + to_string(e.kids[0], atoms) + ")"
                                                                      : to_string(e.kids[0], atoms));
    case ExprKind::Naf: return "not " + to_string(e.kids[0], atoms);
    case ExprKind::And: return group(" & ");
    case ExprKind::Or: return group(" | ");
    case ExprKind::Kagg: return "kagg(" + to_string(e.kids[0], atoms) + ", " + to_string(e.kids[1], atoms) + ")";
  }
  return "?";
}

}  // namespace unasp
