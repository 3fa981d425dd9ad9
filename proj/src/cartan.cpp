#include "coxcone/cartan.hpp"

#include "coxcone/feasible.hpp"

namespace coxcone {

namespace {

std::string at(Index i, Index j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

GCM validate(const QMat& a) {
  require(a.rows() == a.cols(), ErrKind::validation, "matrix is not square");
  GCM g;
  g.n = a.rows();
  require(g.n <= 20, ErrKind::bound, "rank larger than 20 not supported");
  g.a = a;
  g.m = Matrix<int>::Zero(g.n, g.n);
  g.adj.assign(static_cast<size_t>(g.n), 0);
  for (Index i = 0; i < g.n; ++i) {
    require(a(i, i) == 2, ErrKind::validation, "not a GCM at " + at(i, i) + ": diagonal entry must be 2");
    g.m(i, i) = 1;
  }
  for (Index i = 0; i < g.n; ++i)
    for (Index j = i + 1; j < g.n; ++j) {
      const Rat &p = a(i, j), &q = a(j, i);
      if (p == 0 || q == 0) {
        require(p == 0 && q == 0, ErrKind::validation,
                "not a GCM at " + at(i, j) + ": entries must be both zero or both negative");
        g.m(i, j) = g.m(j, i) = 2;
        continue;
      }
      require(p < 0 && q < 0, ErrKind::validation,
              "not a GCM at " + at(i, j) + ": entries must be both zero or both negative");
      Rat prod = p * q;
      int label;
      if (prod >= 4)
        label = cox_m_infinity;
      else if (prod == 1)
        label = 3;
      else if (prod == 2)
        label = 4;
      else if (prod == 3)
        label = 6;
      else
        fail(ErrKind::validation,
             "not a GCM at " + at(i, j) + ": product " + rat_str(prod) +
                 " in (0,4) has no rational squared cosine, bond order unsupported");
      g.m(i, j) = g.m(j, i) = label;
      g.adj[static_cast<size_t>(i)] |= IndexSet(1) << j;
      g.adj[static_cast<size_t>(j)] |= IndexSet(1) << i;
    }
  return g;
}

std::vector<IndexSet> components(const GCM& g, IndexSet j) {
  std::vector<IndexSet> out;
  IndexSet left = j;
  while (left) {
    IndexSet comp = left & (~left + 1);  // lowest remaining vertex
    for (;;) {
      IndexSet grown = comp;
      for (int i : set_elements(comp)) grown |= g.adj[static_cast<size_t>(i)] & j;
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

TypeLabel classify_connected(const GCM& g, IndexSet j) {
  std::vector<int> el = set_elements(j);
  const Index k = static_cast<Index>(el.size());
  require(k > 0, ErrKind::validation, "empty set has no type");
  enum class Dir { pos, zero, neg };
  auto probe = [&](Dir d) {  // does some u > 0 drive A u to the given sign?
    LinSys sys(k);
    for (Index r = 0; r < k; ++r) {
      QVec row(k);
      for (Index c = 0; c < k; ++c) row(c) = g.a(el[static_cast<size_t>(r)], el[static_cast<size_t>(c)]);
      if (d == Dir::neg) row = -row;
      sys.add(row, d == Dir::zero ? Rel::eq : Rel::gt);
    }
    for (Index c = 0; c < k; ++c) {
      QVec u = QVec::Zero(k);
      u(c) = 1;
      sys.add_gt(u);
    }
    return feasible(sys);
  };
  bool fin = probe(Dir::pos);
  bool aff = probe(Dir::zero);
  bool ind = probe(Dir::neg);
  require(fin + aff + ind == 1, ErrKind::internal, "type trichotomy violated");
  return fin ? TypeLabel::Fin : aff ? TypeLabel::Aff : TypeLabel::Ind;
}

Classification classify(const GCM& g, IndexSet j) {
  Classification out;
  out.comps = components(g, j);
  for (IndexSet c : out.comps) {
    TypeLabel t = classify_connected(g, c);
    out.labels.push_back(t);
    (t == TypeLabel::Fin ? out.fin : t == TypeLabel::Aff ? out.aff : out.ind) |= c;
  }
  out.nonfin = out.aff | out.ind;
  return out;
}

IndexSet perp(const GCM& g, IndexSet j) {
  IndexSet out = 0;
  for (Index i = 0; i < g.n; ++i) {
    if (contains(j, static_cast<int>(i))) continue;  // a_ii = 2 disqualifies members
    if ((g.adj[static_cast<size_t>(i)] & j) == 0) out |= IndexSet(1) << i;
  }
  return out;
}

bool is_special(const GCM& g, IndexSet j) { return classify(g, j).fin == 0; }

bool separated(const GCM& g, IndexSet j, IndexSet k) {
  if (j & k) return false;
  for (int i : set_elements(j))
    if (g.adj[static_cast<size_t>(i)] & k) return false;
  return true;
}

HypClass hyperbolic_class(const GCM& g, IndexSet j) {
  require(components(g, j).size() == 1, ErrKind::validation, "set is not connected");
  require(classify_connected(g, j) == TypeLabel::Ind, ErrKind::validation,
          "set is not of indefinite type");
  auto tame = [&](IndexSet rest) {
    for (IndexSet c : components(g, rest))
      if (classify_connected(g, c) == TypeLabel::Ind) return false;
    return true;
  };
  std::vector<int> el = set_elements(j);
  bool h0 = true;
  for (int i : el)
    if (!tame(j & ~(IndexSet(1) << i))) {
      h0 = false;
      break;
    }
  if (h0) return HypClass::hyp0;
  for (size_t p = 0; p < el.size(); ++p)
    for (size_t q = p + 1; q < el.size(); ++q)
      if (!tame(j & ~(IndexSet(1) << el[p]) & ~(IndexSet(1) << el[q]))) return HypClass::neither;
  return HypClass::hyp1;
}

}  // namespace coxcone
