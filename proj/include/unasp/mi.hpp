#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "unasp/transform.hpp"

namespace unasp {

struct MiState {
  std::vector<std::optional<EpistemicValue>> interp;  // indexed by AtomId, positive atoms only
  TransformedProgram residual;
  bool halted_inconsistent = false;
  std::optional<AtomId> conflict;
  std::size_t step = 0;
  std::vector<AtomId> last_assigned;

  static MiState start(const TransformedProgram& p) {
    MiState s;
    s.interp.assign(p.atoms->size(), std::nullopt);
    s.residual = p;
    return s;
  }

  std::optional<Interval> value(AtomId a) const {
    if (interp[a] && interp[a]->consistent()) return interp[a]->interval();
    return std::nullopt;
  }

  std::map<AtomId, Interval> assigned() const {
    std::map<AtomId, Interval> out;
    for (AtomId a = 0; a < interp.size(); ++a)
      if (auto v = value(a)) out.emplace(a, *v);
    return out;
  }
};

inline auto strict_lookup(const std::vector<std::optional<EpistemicValue>>& interp) {
  return [&interp](AtomId a, bool negative) -> std::optional<EpistemicValue> {
    if (!interp[a]) return std::nullopt;
    return negative ? negate(*interp[a]) : *interp[a];
  };
}

// One application of the immediate consequence operator: every rule whose
// body becomes constant after substituting the current values fires at once.
inline MiState gamma_step(const MiState& s) {
  MiState next;
  next.interp = s.interp;
  next.residual.atoms = s.residual.atoms;
  next.step = s.step + 1;
  std::vector<std::pair<AtomId, EpistemicValue>> fired;
  auto lookup = strict_lookup(s.interp);
  for (const auto& [a, body] : s.residual.rules) {
    Expr e = simplify(substitute(body, lookup));
    if (closed(e))
      fired.emplace_back(a, evaluate_closed(e));
    else
      next.residual.rules.emplace(a, std::move(e));
  }
  for (auto& [a, v] : fired) {
    next.interp[a] = v;
    next.last_assigned.push_back(a);
    if (!v.consistent() && !next.halted_inconsistent) {
      next.halted_inconsistent = true;
      next.conflict = a;
    }
  }
  return next;
}

using MiObserver = std::function<void(const MiState&)>;

inline MiState mi_fixpoint(const TransformedProgram& p, const MiObserver& observe = {}) {
  MiState s = MiState::start(p);
  while (true) {
    MiState n = gamma_step(s);
    bool changed = !n.last_assigned.empty() || !(n.residual.rules == s.residual.rules);
    if (!changed) return s;
    if (observe) observe(n);
    s = std::move(n);
    if (s.halted_inconsistent) return s;
  }
}

}  // namespace unasp
