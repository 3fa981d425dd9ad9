#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "coxcone/linalg.hpp"
#include "coxcone/types.hpp"

// Exact feasibility of homogeneous linear systems a·x {=,>=,>} 0 by
// Fourier-Motzkin elimination. Strict inequalities are first-class: a pair of
// bounds projects to a strict constraint when either side was strict. All
// systems in this library are homogeneous, which kills the usual 0 = c
// corner cases. feasible_point() replays the elimination to build a witness.

namespace coxcone {

enum class Rel { eq, ge, gt };

struct LinCon {
  QVec a;
  Rel rel;
};

struct LinSys {
  Index dim;
  std::vector<LinCon> cons;

  explicit LinSys(Index d) : dim(d) {}
  void add(const QVec& v, Rel r) { cons.push_back({v, r}); }
  void add_eq(const QVec& v) { add(v, Rel::eq); }
  void add_ge(const QVec& v) { add(v, Rel::ge); }
  void add_gt(const QVec& v) { add(v, Rel::gt); }
};

namespace detail {

// One elimination step, recorded so a witness can be reconstructed.
struct ElimStep {
  Index var;
  bool by_equality;
  QVec eq;                     // the equality used, when by_equality
  std::vector<LinCon> bounds;  // constraints mentioning var, otherwise
};

inline bool normalize_con(LinCon& c) {  // false: trivially true, drop it
  c.a = integerize(c.a);
  if (c.a.isZero(0)) {
    if (c.rel == Rel::gt) fail(ErrKind::internal, "kept an infeasible zero row");
    return false;
  }
  return true;
}

// Deduplicate proportional constraints, keeping the strongest relation.
// Returns false on a contradictory zero row (0 > 0).
inline bool compact(std::vector<LinCon>& cons) {
  std::vector<LinCon> kept;
  std::map<std::vector<std::string>, size_t> seen_eq, seen_ge;
  for (LinCon& c : cons) {
    c.a = integerize(c.a);
    if (c.a.isZero(0)) {
      if (c.rel == Rel::gt) return false;
      continue;
    }
    std::vector<std::string> key(c.a.size());
    for (Index i = 0; i < c.a.size(); ++i) key[i] = c.a(i).get_str();
    if (c.rel == Rel::eq) {
      if (seen_eq.emplace(std::move(key), kept.size()).second) kept.push_back(c);
      continue;
    }
    auto [it, fresh] = seen_ge.emplace(std::move(key), kept.size());
    if (fresh)
      kept.push_back(c);
    else if (c.rel == Rel::gt)
      kept[it->second].rel = Rel::gt;
  }
  cons = std::move(kept);
  return true;
}

}  // namespace detail

// Feasibility with elimination trace. The bool is the verdict; the trace is
// only meaningful when feasible.
inline std::pair<bool, std::vector<detail::ElimStep>> feasible_traced(const LinSys& sys) {
  using detail::ElimStep;
  const Index n = sys.dim;
  std::vector<LinCon> cons = sys.cons;
  for (LinCon& c : cons)
    require(c.a.size() == n, ErrKind::validation, "constraint dimension mismatch");
  std::vector<ElimStep> trace;
  if (!detail::compact(cons)) return {false, {}};

  // pass 1: substitute out equalities
  for (;;) {
    size_t pick = cons.size();
    Index var = -1;
    for (size_t k = 0; k < cons.size(); ++k) {
      if (cons[k].rel != Rel::eq) continue;
      for (Index v = 0; v < n; ++v)
        if (cons[k].a(v) != 0) {
          pick = k;
          var = v;
          break;
        }
      if (pick < cons.size()) break;
    }
    if (pick == cons.size()) break;
    QVec e = cons[pick].a;
    cons.erase(cons.begin() + static_cast<std::ptrdiff_t>(pick));
    for (LinCon& c : cons)
      if (c.a(var) != 0) c.a -= (c.a(var) / e(var)) * e;
    trace.push_back({var, true, e, {}});
    if (!detail::compact(cons)) return {false, {}};
  }

  // pass 2: Fourier-Motzkin on the inequalities
  for (;;) {
    // pick the live variable with the fewest pos*neg pairings
    Index best = -1;
    size_t best_score = 0;
    for (Index v = 0; v < n; ++v) {
      size_t pos = 0, neg = 0;
      for (const LinCon& c : cons) {
        if (c.a(v) > 0) ++pos;
        if (c.a(v) < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      size_t score = pos * neg;
      if (best < 0 || score < best_score) {
        best = v;
        best_score = score;
      }
    }
    if (best < 0) break;  // nothing mentions any variable: feasible

    std::vector<LinCon> with, rest;
    for (const LinCon& c : cons)
      (c.a(best) != 0 ? with : rest).push_back(c);
    for (const LinCon& p : with)
      for (const LinCon& q : with) {
        if (!(p.a(best) > 0 && q.a(best) < 0)) continue;
        LinCon combo;
        combo.a = (-q.a(best)) * p.a + p.a(best) * q.a;
        combo.rel = (p.rel == Rel::gt || q.rel == Rel::gt) ? Rel::gt : Rel::ge;
        rest.push_back(std::move(combo));
      }
    trace.push_back({best, false, {}, std::move(with)});
    cons = std::move(rest);
    if (!detail::compact(cons)) return {false, {}};
    require(cons.size() < 100000, ErrKind::bound, "elimination blow-up");
  }
  return {true, std::move(trace)};
}

inline bool feasible(const LinSys& sys) { return feasible_traced(sys).first; }

// A rational solution, reconstructed by walking the elimination backwards:
// eliminated-by-inequality variables get a value between their tightest
// bounds, eliminated-by-equality variables are back-substituted, untouched
// variables are zero.
inline std::optional<QVec> feasible_point(const LinSys& sys) {
  auto [ok, trace] = feasible_traced(sys);
  if (!ok) return std::nullopt;
  QVec x = QVec::Zero(sys.dim);
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    const auto& step = *it;
    if (step.by_equality) {
      // e·x = 0 with e(var) != 0 and x(var) not yet set
      Rat rest = step.eq.dot(x) - step.eq(step.var) * x(step.var);
      x(step.var) = -rest / step.eq(step.var);
      continue;
    }
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo = 0, hi = 0;
    for (const LinCon& c : step.bounds) {
      Rat rest = c.a.dot(x) - c.a(step.var) * x(step.var);
      Rat bound = -rest / c.a(step.var);
      if (c.a(step.var) > 0) {  // x(var) >= bound
        if (!has_lo || bound > lo || (bound == lo && c.rel == Rel::gt)) {
          lo = bound;
          lo_strict = c.rel == Rel::gt;
          has_lo = true;
        }
      } else {  // x(var) <= bound
        if (!has_hi || bound < hi || (bound == hi && c.rel == Rel::gt)) {
          hi = bound;
          hi_strict = c.rel == Rel::gt;
          has_hi = true;
        }
      }
    }
    if (has_lo && has_hi) {
      if (lo == hi) {
        require(!lo_strict && !hi_strict, ErrKind::internal, "witness gap empty");
        x(step.var) = lo;
      } else {
        x(step.var) = (lo + hi) / 2;
      }
    } else if (has_lo) {
      x(step.var) = lo_strict ? lo + 1 : lo;
    } else if (has_hi) {
      x(step.var) = hi_strict ? hi - 1 : hi;
    }
  }
  return x;
}

}  // namespace coxcone
