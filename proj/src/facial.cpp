#include "coxcone/facial.hpp"

#include <algorithm>
#include <map>

#include "coxcone/feasible.hpp"

namespace coxcone {

namespace {

// Is some relation vector nonnegative outside x and positive at i0?  When a
// witness is requested, it is a relation vector (length n), not the
// coordinate vector of the feasibility run.
bool positive_escape(const RootBase& rb, IndexSet x, int i0, QVec* witness) {
  LinSys sys(rb.L_h.cols());
  for (Index i = 0; i < rb.g.n; ++i)
    if (!contains(x, static_cast<int>(i))) sys.add_ge(rb.L_h.row(i).transpose());
  sys.add_gt(rb.L_h.row(i0).transpose());
  if (!witness) return feasible(sys);
  auto t = feasible_point(sys);
  if (!t) return false;
  *witness = rb.L_h * *t;
  return true;
}

void check_range(const RootBase& rb, IndexSet s) {
  require((s & ~full_set(static_cast<int>(rb.g.n))) == 0, ErrKind::validation,
          "subset mentions an index outside the base");
}

}  // namespace

bool FacialFamily::is_member(IndexSet j) const {
  return std::binary_search(all_facial.begin(), all_facial.end(), j, subset_less);
}

IndexSet FacialFamily::closure(IndexSet l) const {
  check_range(rb, l);
  IndexSet out = full_set(static_cast<int>(rb.g.n));
  for (IndexSet j : all_facial)
    if ((l & ~j) == 0) out &= j;
  return out;
}

bool is_facial(const RootBase& rb, IndexSet j) {
  check_range(rb, j);
  for (Index i0 = 0; i0 < rb.g.n; ++i0) {
    if (contains(j, static_cast<int>(i0))) continue;
    if (positive_escape(rb, j, static_cast<int>(i0), nullptr)) return false;
  }
  return true;
}

std::vector<SignVector> sign_vectors(const RootBase& rb) {
  const Index n = rb.g.n;
  const Index k = rb.L_h.cols();
  require(k <= 4, ErrKind::bound, "relation space dimension above the enumeration bound 4");
  std::vector<SignVector> out;
  if (k == 0) return out;

  // walk the coordinates, keeping the prefix constraints on the coefficient
  // space; infeasible prefixes cut the whole subtree
  std::vector<int> cur(static_cast<size_t>(n), 0);
  LinSys sys(k);
  auto walk = [&](auto&& self, Index depth) -> void {
    if (!feasible(sys)) return;
    if (depth == n) {
      if (std::any_of(cur.begin(), cur.end(), [](int s) { return s != 0; }))
        out.push_back({cur});
      return;
    }
    QVec row = rb.L_h.row(depth).transpose();
    for (int sg : {-1, 0, 1}) {
      if (sg == 0)
        sys.add_eq(row);
      else
        sys.add_gt(sg > 0 ? row : QVec(-row));
      cur[static_cast<size_t>(depth)] = sg;
      self(self, depth + 1);
      sys.cons.pop_back();
    }
    cur[static_cast<size_t>(depth)] = 0;
  };
  walk(walk, 0);
  std::sort(out.begin(), out.end());
  return out;
}

FacialFamily enumerate_facial(const RootBase& rb) {
  const int n = static_cast<int>(rb.g.n);
  require(n <= 20, ErrKind::bound, "enumeration limited to 20 indices");
  const IndexSet top = full_set(n);

  std::map<IndexSet, TypeLabel> types;
  auto comp_type = [&](IndexSet c) {
    auto it = types.find(c);
    if (it == types.end()) it = types.emplace(c, classify_connected(rb.g, c)).first;
    return it->second;
  };
  // the union of the nonfinite components, per subset
  std::vector<IndexSet> inf(static_cast<size_t>(top) + 1);
  for (IndexSet j = 0;; ++j) {
    IndexSet nf = 0;
    for (IndexSet c : components(rb.g, j))
      if (comp_type(c) != TypeLabel::Fin) nf |= c;
    inf[j] = nf;
    if (j == top) break;
  }

  FacialFamily fam;
  fam.rb = rb;
  std::vector<char> special_ok(static_cast<size_t>(top) + 1, 0);
  for (IndexSet j = 0;; ++j) {
    if (inf[j] == j && is_facial(rb, j)) {
      special_ok[j] = 1;
      fam.special_facial.push_back(j);
    }
    if (j == top) break;
  }
  // dropping the finite components does not change facility
  for (IndexSet j = 0;; ++j) {
    if (special_ok[inf[j]]) fam.all_facial.push_back(j);
    if (j == top) break;
  }
  require(special_ok[0] && special_ok[inf[top]], ErrKind::internal,
          "the empty set and the full index set must be facial");
  std::sort(fam.all_facial.begin(), fam.all_facial.end(), subset_less);
  std::sort(fam.special_facial.begin(), fam.special_facial.end(), subset_less);
  return fam;
}

IndexSet facial_closure(const RootBase& rb, IndexSet l) {
  check_range(rb, l);
  // Grow by positive supports of witnesses: a relation vector nonnegative
  // outside the current set is nonnegative outside any facial superset as
  // well, so its positive support belongs to every one of them.  Once no
  // witness is left, the grown set itself passes the facial test.
  IndexSet x = l;
  for (bool grew = true; grew;) {
    grew = false;
    for (Index i0 = 0; i0 < rb.g.n && !grew; ++i0) {
      if (contains(x, static_cast<int>(i0))) continue;
      QVec r;
      if (!positive_escape(rb, x, static_cast<int>(i0), &r)) continue;
      for (Index i = 0; i < rb.g.n; ++i)
        if (r(i) > 0) x |= IndexSet(1) << i;
      require(contains(x, static_cast<int>(i0)), ErrKind::internal, "witness misses its index");
      grew = true;
    }
  }
  return x;
}

std::pair<IndexSet, IndexSet> facial_meet_join(const RootBase& rb, IndexSet j1, IndexSet j2) {
  require(is_facial(rb, j1) && is_facial(rb, j2), ErrKind::validation,
          "meet and join are defined on facial sets only");
  IndexSet meet = j1 & j2;
  require(is_facial(rb, meet), ErrKind::internal, "intersection of facial sets must be facial");
  return {meet, facial_closure(rb, j1 | j2)};
}

IndexSet aff_perp_face(const RootBase& rb, IndexSet theta) {
  check_range(rb, theta);
  Classification ct = classify(rb.g, theta);
  require(ct.fin == 0, ErrKind::validation, "argument has a component of finite type");
  IndexSet out = ct.aff | perp(rb.g, theta);
  Classification ci = classify(rb.g, full_set(static_cast<int>(rb.g.n)));
  require(((ci.fin | ci.aff) & ~out) == 0, ErrKind::internal,
          "result must contain the finite and affine components of the index set");
  require(is_facial(rb, out), ErrKind::internal, "result must be facial");
  return out;
}

}  // namespace coxcone
