#pragma once

#include <array>
#include <type_traits>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unasp/transform.hpp"

namespace unasp {

// Partial map from literals to intervals. Atoms are keyed by printed form.
class Interpretation {
 public:
  void set(const std::string& atom, bool negative, const Interval& v) { (negative ? neg_ : pos_)[atom] = v; }
  void set(const Literal& l, const Interval& v) { set(l.atom.str(), l.negative, v); }

  std::optional<Interval> get(const std::string& atom, bool negative) const {
    const auto& m = negative ? neg_ : pos_;
    auto it = m.find(atom);
    if (it == m.end()) return std::nullopt;
    return it->second;
  }

  // Value of a literal, falling back to the strictly consistent reading
  // v(-a) = negate(v(a)) when only the complement is assigned.
  std::optional<Interval> value(const std::string& atom, bool negative) const {
    if (auto v = get(atom, negative)) return v;
    if (auto v = get(atom, !negative)) return negate(*v);
    return std::nullopt;
  }
  std::optional<Interval> value(const Literal& l) const { return value(l.atom.str(), l.negative); }

  const std::map<std::string, Interval>& positive() const { return pos_; }
  const std::map<std::string, Interval>& negative() const { return neg_; }
  std::size_t size() const { return pos_.size() + neg_.size(); }

  // Adds -a = negate(a) for every assigned atom lacking its complement.
  Interpretation strict_closure() const {
    Interpretation out = *this;
    for (const auto& [a, v] : pos_)
      if (!neg_.count(a)) out.neg_[a] = negate(v);
    return out;
  }

  bool approx(const Interpretation& o, double tol = eps_cmp) const {
    auto same = [tol](const auto& x, const auto& y) {
      if (x.size() != y.size()) return false;
      for (auto i = x.begin(), j = y.begin(); i != x.end(); ++i, ++j)
        if (i->first != j->first || !i->second.approx(j->second, tol)) return false;
      return true;
    };
    return same(pos_, o.pos_) && same(neg_, o.neg_);
  }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  std::map<std::string, Interval> pos_, neg_;
};

inline std::string to_string(const Interpretation& i) {
  std::string s = "{";
  bool first = true;
  auto emit = [&](const std::string& k, const Interval& v) {
    if (!first) s += ", ";
    first = false;
    s += k + ":" + to_string(v);
  };
  for (const auto& [a, v] : i.positive()) emit(a, v);
  for (const auto& [a, v] : i.negative()) emit("-" + a, v);
  return s + "}";
}

enum class ConsistencyClass { StrictlyConsistent, Consistent, Inconsistent };

inline ConsistencyClass classify_consistency(const Interpretation& i) {
  bool strict = true;
  for (const auto& [a, x] : i.positive()) {
    auto y = i.get(a, true);
    if (!y) continue;
    bool same_width = std::abs(x.width() - y->width()) <= eps_cmp;
    bool mirror = same_width && std::abs(x.lower() + y->upper() - 1.0) <= eps_cmp;
    if (mirror) continue;
    strict = false;
    if (same_width) return ConsistencyClass::Inconsistent;
  }
  return strict ? ConsistencyClass::StrictlyConsistent : ConsistencyClass::Consistent;
}

// ---- evaluation over original rules ------------------------------------

inline EpistemicValue evaluate(const BodyItem& b, const Interpretation& i) {
  if (auto c = std::get_if<Interval>(&b)) return *c;
  const auto& l = std::get<BodyLiteral>(b);
  auto v = i.value(l.literal);
  if (!v) throw Error(Errc::UnboundLiteral, "unbound literal " + l.literal.str());
  return l.naf ? naf(*v) : *v;
}

inline EpistemicValue evaluate(const std::vector<BodyItem>& body, const Interpretation& i) {
  EpistemicValue acc = Interval::exact(1.0);
  for (const auto& b : body) acc = tnorm(acc, evaluate(b, i));
  return acc;
}

inline EpistemicValue evaluate(const Expr& e, const AtomTable& atoms, const Interpretation& i) {
  try {
    return evaluate(e, [&](AtomId a, bool negative) -> std::optional<EpistemicValue> {
      if (auto v = i.value(atoms.name(a), negative)) return *v;
      return std::nullopt;
    });
  } catch (const Error& err) {
    if (err.code() != Errc::UnboundLiteral) throw;
    std::string missing;
    for_each_literal(e, [&](AtomId a, bool negative) {
      if (missing.empty() && !i.value(atoms.name(a), negative))
        missing = (negative ? "-" : "") + atoms.name(a);
    });
    throw Error(Errc::UnboundLiteral, "unbound literal " + missing);
  }
}

inline Interval rule_value(const Rule& r, const Interpretation& i) {
  EpistemicValue b = tnorm(evaluate(r.body, i), EpistemicValue(r.weight));
  return b.interval();
}

inline bool satisfies(const Interpretation& i, const Rule& r) {
  auto head = i.value(r.head);
  if (!head) throw Error(Errc::UnboundLiteral, "unbound literal " + r.head.str());
  Interval b = rule_value(r, i);
  return head->approx(b) || compare(*head, b, OrderFamily::KnowledgePreorder) == Ordering::Greater ||
         compare(*head, b, OrderFamily::TruthPreorder) == Ordering::Greater;
}

// ---- supportedness -------------------------------------------------------

namespace detail {

// Evidence for a and -a gathered from rules (disjunction of body & weight).
struct Evidence {
  std::optional<Interval> pos, neg;
};

inline std::map<std::string, Evidence> gather(const Program& p, const Interpretation& i) {
  std::map<std::string, Evidence> ev;
  for (const auto& a : p.atom_base()) ev[a.str()];
  for (const auto& r : p.rules) {
    auto& e = ev[r.head.atom.str()];
    auto& slot = r.head.negative ? e.neg : e.pos;
    Interval v = rule_value(r, i);
    slot = slot ? tconorm(*slot, v) : v;
  }
  return ev;
}

}  // namespace detail

struct Verdict {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

inline Verdict fail_verdict(std::string why) { return {false, std::move(why)}; }

// Supportedness on an original program; atoms in no head are held to [0,1].
inline Verdict check_supported(const Interpretation& i, const Program& p, double tol = eps_cmp) {
  for (const auto& [atom, ev] : detail::gather(p, i)) {
    std::optional<Interval> expected;
    if (ev.pos && ev.neg) {
      expected = try_kmax(*ev.pos, negate(*ev.neg));
      if (!expected)
        return fail_verdict("max_k undefined for " + atom + ": " + to_string(*ev.pos) + " vs " +
                            to_string(negate(*ev.neg)));
    } else if (ev.pos) {
      expected = *ev.pos;
    } else if (ev.neg) {
      expected = negate(*ev.neg);
    } else {
      expected = Interval::unknown();
    }
    auto v = i.value(atom, false);
    if (!v) throw Error(Errc::UnboundLiteral, "unbound literal " + atom);
    if (!v->approx(*expected, tol))
      return fail_verdict(atom + " is " + to_string(*v) + " but its rules give " + to_string(*expected));
    if (auto nv = i.get(atom, true)) {
      bool mirror = nv->approx(negate(*expected), tol);
      bool direct = ev.neg && nv->approx(*ev.neg, tol);
      if (!mirror && !direct)
        return fail_verdict("-" + atom + " is " + to_string(*nv) + ", unsupported by its rules");
    }
  }
  return {};
}

inline bool is_supported_model(const Interpretation& i, const Program& p, double tol = eps_cmp) {
  return check_supported(i, p, tol).ok;
}

// Transformed programs: each atom must equal the value of its body.
inline Verdict check_supported(const Interpretation& i, const TransformedProgram& p, double tol = eps_cmp) {
  for (const auto& [a, body] : p.rules) {
    const std::string& name = p.name(a);
    auto v = i.value(name, false);
    if (!v) throw Error(Errc::UnboundLiteral, "unbound literal " + name);
    EpistemicValue b = evaluate(body, *p.atoms, i);
    if (!b.consistent()) return fail_verdict(name + ": body evaluates to inconsistent");
    if (!v->approx(b.interval(), tol))
      return fail_verdict(name + " is " + to_string(*v) + " but its body gives " + to_string(b.interval()));
    if (auto nv = i.get(name, true); nv && !nv->approx(negate(*v), tol))
      return fail_verdict("-" + name + " is not the mirror of " + name);
  }
  return {};
}

inline bool is_supported_model(const Interpretation& i, const TransformedProgram& p, double tol = eps_cmp) {
  return check_supported(i, p, tol).ok;
}

// ---- reduct ----------------------------------------------------------------

inline Program reduct(const Program& p, const Interpretation& i) {
  Program out = p;
  for (auto& r : out.rules)
    for (auto& b : r.body)
      if (auto l = std::get_if<BodyLiteral>(&b); l && l->naf) {
        auto v = i.value(l->literal);
        if (!v) throw Error(Errc::UnboundLiteral, "unbound literal " + l->literal.str());
        b = naf(*v);
      }
  return out;
}

namespace detail {
inline Expr reduct_expr(const Expr& e, const AtomTable& atoms, const Interpretation& i) {
  if (e.kind == ExprKind::Naf) {
    const Expr& l = e.kids[0];
    auto v = i.value(atoms.name(l.atom), l.negative);
    if (!v) throw Error(Errc::UnboundLiteral, "unbound literal " + atoms.name(l.atom));
    return Expr::constant(naf(*v));
  }
  Expr out = e;
  for (auto& k : out.kids) k = reduct_expr(k, atoms, i);
  return out;
}
}  // namespace detail

inline TransformedProgram reduct(const TransformedProgram& p, const Interpretation& i) {
  std::map<AtomId, Expr> rules;
  for (const auto& [a, e] : p.rules) rules.emplace(a, detail::reduct_expr(e, *p.atoms, i));
  return p.with_rules(std::move(rules));
}

// ---- answer sets ---------------------------------------------------------

inline const std::array<Interval, 15>& grid_intervals() {
  static const std::array<Interval, 15> g = [] {
    std::array<Interval, 15> out{};
    std::size_t k = 0;
    for (int lo = 0; lo <= 4; ++lo)
      for (int hi = lo; hi <= 4; ++hi) out[k++] = Interval(lo / 4.0, hi / 4.0);
    return out;
  }();
  return g;
}

// Every strictly consistent interpretation over the given atoms whose
// endpoints lie in {0, 0.25, 0.5, 0.75, 1}.
inline void for_each_grid_interpretation(const std::vector<std::string>& atoms,
                                         const std::function<void(const Interpretation&)>& f) {
  const auto& g = grid_intervals();
  std::vector<std::size_t> idx(atoms.size(), 0);
  while (true) {
    Interpretation i;
    for (std::size_t k = 0; k < atoms.size(); ++k) i.set(atoms[k], false, g[idx[k]]);
    f(i);
    std::size_t k = atoms.size();
    while (k > 0 && ++idx[k - 1] == g.size()) idx[--k] = 0;
    if (k == 0) break;
  }
}

struct VerifyOptions {
  double tol = eps_cmp;                    // support equality tolerance for the candidate
  std::vector<Interpretation> candidates;  // other interpretations to test k-minimality against
  std::size_t grid_atom_limit = 3;
};

// j <_kp i on every literal: no narrower anywhere, strictly wider somewhere.
inline bool strictly_below_kp(const Interpretation& j, const Interpretation& i) {
  bool strict = false;
  auto visit = [&](const std::map<std::string, Interval>& m, bool negative) {
    for (const auto& [a, vi] : m) {
      auto vj = j.value(a, negative);
      if (!vj) return false;
      if (vj->width() < vi.width() - eps_cmp) return false;
      if (vj->width() > vi.width() + eps_cmp) strict = true;
    }
    return true;
  };
  Interpretation ci = i.strict_closure();
  return visit(ci.positive(), false) && visit(ci.negative(), true) && strict;
}

namespace detail {

template <class P>
std::vector<std::string> atom_names(const P& p) {
  std::vector<std::string> v;
  if constexpr (std::is_same_v<P, Program>) {
    for (const auto& a : p.atom_base()) v.push_back(a.str());
  } else {
    for (const auto& [a, e] : p.rules) v.push_back(p.name(a));
  }
  return v;
}

template <class P>
Verdict check_answer_set(const Interpretation& i, const P& p, const VerifyOptions& opt) {
  P red = reduct(p, i);
  if (auto v = check_supported(i, red, opt.tol); !v) return fail_verdict("not a supported model of the reduct: " + v.reason);
  for (const auto& c : opt.candidates) {
    if (c.approx(i)) continue;
    if (strictly_below_kp(c, i) && is_supported_model(c, red))
      return fail_verdict("not k-minimal: " + to_string(c) + " is a less certain supported model");
  }
  auto names = atom_names(p);
  if (names.size() <= opt.grid_atom_limit) {
    std::optional<Interpretation> below;
    for_each_grid_interpretation(names, [&](const Interpretation& c) {
      if (!below && strictly_below_kp(c, i) && is_supported_model(c, red)) below = c;
    });
    if (below) return fail_verdict("not k-minimal: " + to_string(*below) + " is a less certain supported model");
  }
  return {};
}

}  // namespace detail

inline Verdict check_answer_set(const Interpretation& i, const Program& p, const VerifyOptions& opt = {}) {
  return detail::check_answer_set(i, p, opt);
}
inline Verdict check_answer_set(const Interpretation& i, const TransformedProgram& p, const VerifyOptions& opt = {}) {
  return detail::check_answer_set(i, p, opt);
}
inline bool is_answer_set(const Interpretation& i, const Program& p, const VerifyOptions& opt = {}) {
  return check_answer_set(i, p, opt).ok;
}
inline bool is_answer_set(const Interpretation& i, const TransformedProgram& p, const VerifyOptions& opt = {}) {
  return check_answer_set(i, p, opt).ok;
}

}  // namespace unasp
