#include "coxcone/polycone.hpp"

#include <algorithm>
#include <set>

namespace coxcone {

namespace {

QMat shaped(const QMat& m, Index cols) {
  if (m.rows() == 0) return QMat(0, cols);
  require(m.cols() == cols, ErrKind::validation, "row dimension mismatch");
  return m;
}

unsigned long long combo_count(Index m, Index k) {
  if (k < 0 || k > m) return 0;
  unsigned long long c = 1;
  for (Index i = 0; i < k; ++i) c = c * static_cast<unsigned long long>(m - i) / (i + 1);
  return c;
}

QMat cols_to_mat(Index dim, const std::vector<QVec>& cols) {
  QMat m(dim, static_cast<Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Index>(j)) = cols[j];
  return m;
}

void sort_dedup(std::vector<QVec>& v) {
  std::sort(v.begin(), v.end(), vec_less);
  v.erase(std::unique(v.begin(), v.end(),
                      [](const QVec& a, const QVec& b) { return vec_compare(a, b) == 0; }),
          v.end());
}

}  // namespace

DdResult dd_rays(const QMat& ineq_in, const QMat& eq_in, Index dim) {
  QMat ineq = shaped(ineq_in, dim), eq = shaped(eq_in, dim);
  QMat bsub = kernel_basis(eq);  // dim x s
  QMat a2 = ineq * bsub;         // m x s
  QMat l2 = kernel_basis(a2);    // s x k2
  std::vector<Index> unit = completing_unit_columns(l2, bsub.cols());
  const Index d = static_cast<Index>(unit.size());
  QMat c2 = QMat::Zero(bsub.cols(), d);
  for (Index j = 0; j < d; ++j) c2(unit[static_cast<size_t>(j)], j) = 1;
  QMat M = a2 * c2;  // m x d, trivial kernel by construction

  std::vector<QVec> rays;
  QMat lin = span_basis(bsub * l2);
  if (d > 0) {
    require(kernel_basis(M).cols() == 0, ErrKind::internal, "pointed part not pointed");
    const Index m = M.rows(), k = d - 1;
    require(combo_count(m, k) <= 5000000ull, ErrKind::bound,
            "extreme-ray enumeration too large");
    std::vector<Index> sel(static_cast<size_t>(k));
    for (Index i = 0; i < k; ++i) sel[static_cast<size_t>(i)] = i;
    for (;;) {
      QMat ms(k, d);
      for (Index i = 0; i < k; ++i) ms.row(i) = M.row(sel[static_cast<size_t>(i)]);
      QMat ker = kernel_basis(ms);
      if (ker.cols() == 1) {
        QVec z = ker.col(0);
        QVec mz = M * z;
        bool all_ge = true, all_le = true;
        for (Index i = 0; i < m; ++i) {
          if (mz(i) < 0) all_ge = false;
          if (mz(i) > 0) all_le = false;
        }
        if (all_ge || all_le) {
          if (!all_ge) z = -z;
          // extreme iff the active rows pin z down to a line
          std::vector<Index> act;
          for (Index i = 0; i < m; ++i)
            if (mz(i) == 0) act.push_back(i);
          QMat ma(static_cast<Index>(act.size()), d);
          for (size_t i = 0; i < act.size(); ++i) ma.row(static_cast<Index>(i)) = M.row(act[i]);
          if (rank_of(ma) == d - 1) {
            QVec x = bsub * (c2 * z);
            rays.push_back(integerize(reduce_mod_span(x, lin)));
          }
        }
      }
      // next k-subset of [0, m)
      Index i = k - 1;
      while (i >= 0 && sel[static_cast<size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++sel[static_cast<size_t>(i)];
      for (Index j = i + 1; j < k; ++j) sel[static_cast<size_t>(j)] = sel[static_cast<size_t>(j - 1)] + 1;
    }
    sort_dedup(rays);
  }
  return {cols_to_mat(dim, rays), lin};
}

namespace {

PolyCone finalize(Index dim, const DdResult& primal, const DdResult& dual) {
  PolyCone c;
  c.ambient_dim = dim;
  c.generators = primal.rays;
  c.lineality = primal.lineality;
  c.facet_count = dual.rays.cols();
  QMat rows(c.facet_count + 2 * dual.lineality.cols(), dim);
  for (Index j = 0; j < dual.rays.cols(); ++j) rows.row(j) = dual.rays.col(j).transpose();
  for (Index j = 0; j < dual.lineality.cols(); ++j) {
    QVec e = integerize_line(dual.lineality.col(j));
    rows.row(c.facet_count + 2 * j) = e.transpose();
    rows.row(c.facet_count + 2 * j + 1) = -e.transpose();
  }
  c.inequalities = std::move(rows);
  for (Index g = 0; g < c.generators.cols(); ++g)
    for (Index r = 0; r < c.inequalities.rows(); ++r)
      require(c.inequalities.row(r).dot(c.generators.col(g).transpose()) >= 0,
              ErrKind::internal, "generator violates inequality");
  for (Index l = 0; l < c.lineality.cols(); ++l)
    for (Index r = 0; r < c.inequalities.rows(); ++r)
      require(c.inequalities.row(r).dot(c.lineality.col(l).transpose()) == 0,
              ErrKind::internal, "lineality not tight");
  return c;
}

}  // namespace

PolyCone cone_from_generators(Index dim, const QMat& gens, const QMat& lin) {
  QMat g = gens.cols() ? gens : QMat(dim, 0);
  QMat l = lin.cols() ? lin : QMat(dim, 0);
  require(g.rows() == dim || g.cols() == 0, ErrKind::validation, "generator dimension mismatch");
  require(l.rows() == dim || l.cols() == 0, ErrKind::validation, "lineality dimension mismatch");
  DdResult dual = dd_rays(g.transpose(), l.transpose(), dim);
  DdResult primal = dd_rays(dual.rays.transpose(), dual.lineality.transpose(), dim);
  return finalize(dim, primal, dual);
}

PolyCone cone_from_inequalities(Index dim, const QMat& ge_rows, const QMat& eq_rows) {
  DdResult primal = dd_rays(ge_rows, eq_rows, dim);
  DdResult dual = dd_rays(primal.rays.transpose(), primal.lineality.transpose(), dim);
  return finalize(dim, primal, dual);
}

PolyCone cone_intersection(const PolyCone& a, const PolyCone& b) {
  require(a.ambient_dim == b.ambient_dim, ErrKind::validation, "ambient dimension mismatch");
  QMat rows(a.inequalities.rows() + b.inequalities.rows(), a.ambient_dim);
  rows.topRows(a.inequalities.rows()) = a.inequalities;
  rows.bottomRows(b.inequalities.rows()) = b.inequalities;
  return cone_from_inequalities(a.ambient_dim, rows, QMat(0, a.ambient_dim));
}

PolyCone cone_sum(const PolyCone& a, const PolyCone& b) {
  require(a.ambient_dim == b.ambient_dim, ErrKind::validation, "ambient dimension mismatch");
  QMat g(a.ambient_dim, a.generators.cols() + b.generators.cols());
  g.leftCols(a.generators.cols()) = a.generators;
  g.rightCols(b.generators.cols()) = b.generators;
  QMat l(a.ambient_dim, a.lineality.cols() + b.lineality.cols());
  l.leftCols(a.lineality.cols()) = a.lineality;
  l.rightCols(b.lineality.cols()) = b.lineality;
  return cone_from_generators(a.ambient_dim, g, l);
}

PolyCone cone_dual(const PolyCone& c) {
  return cone_from_inequalities(c.ambient_dim, c.generators.transpose(),
                                c.lineality.transpose());
}

Index cone_dim(const PolyCone& c) { return rank_of(cone_hull_basis(c)); }

QMat cone_hull_basis(const PolyCone& c) {
  QMat m(c.ambient_dim, c.generators.cols() + c.lineality.cols());
  m.leftCols(c.generators.cols()) = c.generators;
  m.rightCols(c.lineality.cols()) = c.lineality;
  return span_basis(m);
}

bool cone_contains(const PolyCone& c, const QVec& x) {
  require(x.size() == c.ambient_dim, ErrKind::validation, "point dimension mismatch");
  for (Index r = 0; r < c.inequalities.rows(); ++r)
    if (c.inequalities.row(r).dot(x.transpose()) < 0) return false;
  return true;
}

bool cone_ri_contains(const PolyCone& c, const QVec& x) {
  require(x.size() == c.ambient_dim, ErrKind::validation, "point dimension mismatch");
  // x = gens c + lin t with all c strictly positive, homogenized by s > 0
  const Index g = c.generators.cols(), l = c.lineality.cols();
  LinSys sys(g + l + 1);
  for (Index i = 0; i < c.ambient_dim; ++i) {
    QVec row(g + l + 1);
    for (Index j = 0; j < g; ++j) row(j) = c.generators(i, j);
    for (Index j = 0; j < l; ++j) row(g + j) = c.lineality(i, j);
    row(g + l) = -x(i);
    sys.add_eq(row);
  }
  for (Index j = 0; j < g; ++j) {
    QVec row = QVec::Zero(g + l + 1);
    row(j) = 1;
    sys.add_gt(row);
  }
  QVec srow = QVec::Zero(g + l + 1);
  srow(g + l) = 1;
  sys.add_gt(srow);
  return feasible(sys);
}

bool cone_subset(const PolyCone& a, const PolyCone& b) {
  for (Index j = 0; j < a.generators.cols(); ++j)
    if (!cone_contains(b, a.generators.col(j))) return false;
  for (Index j = 0; j < a.lineality.cols(); ++j) {
    if (!cone_contains(b, a.lineality.col(j))) return false;
    if (!cone_contains(b, QVec(-a.lineality.col(j)))) return false;
  }
  return true;
}

QVec cone_ri_point(const PolyCone& c) {
  QVec x = QVec::Zero(c.ambient_dim);
  for (Index j = 0; j < c.generators.cols(); ++j) x += c.generators.col(j);
  return x;
}

int FaceLattice::find(std::uint64_t f) const {
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i] == f) return static_cast<int>(i);
  return -1;
}

int FaceLattice::top() const { return static_cast<int>(faces.size()) - 1; }

int FaceLattice::bottom() const { return 0; }

bool FaceLattice::leq(int i, int j) const {
  return (faces[static_cast<size_t>(i)] & ~faces[static_cast<size_t>(j)]) == 0;
}

int FaceLattice::meet(int i, int j) const {
  int k = find(faces[static_cast<size_t>(i)] & faces[static_cast<size_t>(j)]);
  require(k >= 0, ErrKind::internal, "meet missing from face lattice");
  return k;
}

int FaceLattice::join(int i, int j) const {
  std::uint64_t u = faces[static_cast<size_t>(i)] | faces[static_cast<size_t>(j)];
  std::uint64_t acc = faces.back();
  for (std::uint64_t f : faces)
    if ((u & ~f) == 0) acc &= f;
  int k = find(acc);
  require(k >= 0, ErrKind::internal, "join missing from face lattice");
  return k;
}

PolyCone FaceLattice::face_cone(int i) const {
  std::uint64_t f = faces[static_cast<size_t>(i)];
  std::vector<QVec> gens;
  for (Index j = 0; j < cone.generators.cols(); ++j)
    if ((f >> j) & 1) gens.push_back(cone.generators.col(j));
  return cone_from_generators(cone.ambient_dim, cols_to_mat(cone.ambient_dim, gens),
                              cone.lineality);
}

QVec FaceLattice::face_ri_point(int i) const {
  std::uint64_t f = faces[static_cast<size_t>(i)];
  QVec x = QVec::Zero(cone.ambient_dim);
  for (Index j = 0; j < cone.generators.cols(); ++j)
    if ((f >> j) & 1) x += cone.generators.col(j);
  return x;
}

FaceLattice cone_face_lattice(const PolyCone& c) {
  const Index g = c.generators.cols();
  require(g <= 64, ErrKind::bound, "more than 64 extreme rays");
  const std::uint64_t full = g == 64 ? ~0ull : ((1ull << g) - 1);
  std::vector<std::uint64_t> facet_sets;
  for (Index r = 0; r < c.facet_count; ++r) {
    std::uint64_t z = 0;
    for (Index j = 0; j < g; ++j)
      if (c.inequalities.row(r).dot(c.generators.col(j).transpose()) == 0) z |= 1ull << j;
    facet_sets.push_back(z);
  }
  std::set<std::uint64_t> faces = {full};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(faces.begin(), faces.end());
    for (std::uint64_t f : cur)
      for (std::uint64_t z : facet_sets)
        if (faces.insert(f & z).second) grew = true;
  }
  FaceLattice lat;
  lat.cone = c;
  lat.faces.assign(faces.begin(), faces.end());
  std::vector<int> dims;
  for (std::uint64_t f : lat.faces) {
    std::vector<QVec> gens;
    for (Index j = 0; j < g; ++j)
      if ((f >> j) & 1) gens.push_back(c.generators.col(j));
    QMat m(c.ambient_dim, static_cast<Index>(gens.size()) + c.lineality.cols());
    m.leftCols(static_cast<Index>(gens.size())) = cols_to_mat(c.ambient_dim, gens);
    m.rightCols(c.lineality.cols()) = c.lineality;
    dims.push_back(static_cast<int>(rank_of(m)));
  }
  std::vector<size_t> order(lat.faces.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (dims[a] != dims[b]) return dims[a] < dims[b];
    return lat.faces[a] < lat.faces[b];
  });
  std::vector<std::uint64_t> sf;
  std::vector<int> sd;
  for (size_t i : order) {
    sf.push_back(lat.faces[i]);
    sd.push_back(dims[i]);
  }
  lat.faces = std::move(sf);
  lat.dims = std::move(sd);
  return lat;
}

namespace {

// face index lookup by cone equality, for maps across different lattices
int locate_face(const FaceLattice& lat, const PolyCone& f, std::vector<PolyCone>& cache) {
  if (cache.empty())
    for (size_t i = 0; i < lat.faces.size(); ++i)
      cache.push_back(lat.face_cone(static_cast<int>(i)));
  for (size_t i = 0; i < cache.size(); ++i)
    if (cache[i] == f) return static_cast<int>(i);
  return -1;
}

}  // namespace

TransportResult transport_faces(const QMat& phi, const PolyCone& K, TransportDir dir) {
  TransportResult out;
  out.source = cone_face_lattice(K);
  std::vector<PolyCone> cache;
  if (dir == TransportDir::forward) {
    require(phi.cols() == K.ambient_dim, ErrKind::validation, "map dimension mismatch");
    QMat ker = kernel_basis(phi);
    for (Index j = 0; j < ker.cols(); ++j)
      require(in_span(K.lineality, ker.col(j)), ErrKind::validation,
              "kernel of the map not contained in the lineality");
    PolyCone img = cone_from_generators(phi.rows(), phi * K.generators, phi * K.lineality);
    out.target = cone_face_lattice(img);
    for (size_t i = 0; i < out.source.faces.size(); ++i) {
      PolyCone fc = out.source.face_cone(static_cast<int>(i));
      PolyCone mapped =
          cone_from_generators(phi.rows(), phi * fc.generators, phi * fc.lineality);
      int t = locate_face(out.target, mapped, cache);
      require(t >= 0, ErrKind::internal, "image face missing");
      out.face_map.push_back(t);
    }
  } else {
    require(phi.rows() == K.ambient_dim, ErrKind::validation, "map dimension mismatch");
    for (Index j = 0; j < K.generators.cols(); ++j)
      require(in_span(phi, K.generators.col(j)), ErrKind::validation,
              "cone not contained in the image of the map");
    for (Index j = 0; j < K.lineality.cols(); ++j)
      require(in_span(phi, K.lineality.col(j)), ErrKind::validation,
              "cone not contained in the image of the map");
    PolyCone pre =
        cone_from_inequalities(phi.cols(), K.inequalities * phi, QMat(0, phi.cols()));
    out.target = cone_face_lattice(pre);
    for (size_t i = 0; i < out.source.faces.size(); ++i) {
      PolyCone fc = out.source.face_cone(static_cast<int>(i));
      PolyCone mapped =
          cone_from_inequalities(phi.cols(), fc.inequalities * phi, QMat(0, phi.cols()));
      int t = locate_face(out.target, mapped, cache);
      require(t >= 0, ErrKind::internal, "preimage face missing");
      out.face_map.push_back(t);
    }
  }
  // the transported family must exhaust the target lattice
  std::vector<bool> hit(out.target.faces.size(), false);
  for (int t : out.face_map) {
    require(!hit[static_cast<size_t>(t)], ErrKind::internal, "face map not injective");
    hit[static_cast<size_t>(t)] = true;
  }
  require(out.face_map.size() == out.target.faces.size(), ErrKind::internal,
          "face map not onto");
  return out;
}

FaceCorrespondence faces_mod_subspace(const PolyCone& K, const QMat& U, ModMode mode) {
  require(U.cols() == 0 || U.rows() == K.ambient_dim, ErrKind::validation,
          "subspace dimension mismatch");
  require(rank_of(U) == U.cols(), ErrKind::validation, "subspace basis is dependent");
  PolyCone ucone = cone_from_generators(K.ambient_dim, QMat(K.ambient_dim, 0), U);
  FaceCorrespondence out;
  out.fa_K = cone_face_lattice(K);
  std::vector<PolyCone> kcache, ocache;
  if (mode == ModMode::sum) {
    out.fa_other = cone_face_lattice(cone_sum(K, ucone));
    for (size_t gi = 0; gi < out.fa_other.faces.size(); ++gi) {
      PolyCone g = out.fa_other.face_cone(static_cast<int>(gi));
      int f = locate_face(out.fa_K, cone_intersection(g, K), kcache);
      require(f >= 0, ErrKind::internal, "G∩K is not a face of K");
      out.map_other_to_K.push_back(f);
    }
    for (size_t fi = 0; fi < out.fa_K.faces.size(); ++fi) {
      PolyCone f = out.fa_K.face_cone(static_cast<int>(fi));
      // F is hit iff U ∩ (K−F) ⊆ F−F
      QMat gens(K.ambient_dim, K.generators.cols() + f.generators.cols());
      gens.leftCols(K.generators.cols()) = K.generators;
      gens.rightCols(f.generators.cols()) = -f.generators;
      PolyCone kmf = cone_from_generators(K.ambient_dim, gens, K.lineality);
      PolyCone t = cone_intersection(kmf, ucone);
      QMat hull = cone_hull_basis(f);
      bool inside = span_contained(t.generators, hull) && span_contained(t.lineality, hull);
      out.K_in_image.push_back(inside);
      out.K_partner.push_back(inside ? locate_face(out.fa_other, cone_sum(f, ucone), ocache)
                                     : -1);
      if (inside)
        require(out.K_partner.back() >= 0, ErrKind::internal, "F+U is not a face of K+U");
    }
  } else {
    out.fa_other = cone_face_lattice(cone_intersection(K, ucone));
    for (size_t fi = 0; fi < out.fa_K.faces.size(); ++fi) {
      PolyCone f = out.fa_K.face_cone(static_cast<int>(fi));
      int h = locate_face(out.fa_other, cone_intersection(f, ucone), ocache);
      require(h >= 0, ErrKind::internal, "F∩U is not a face of K∩U");
      out.map_K_to_other.push_back(h);
    }
    for (size_t hi = 0; hi < out.fa_other.faces.size(); ++hi) {
      // smallest face of K containing H: intersect the facets active at a
      // relative-interior point of H
      QVec x = out.fa_other.face_ri_point(static_cast<int>(hi));
      std::uint64_t acc = out.fa_K.faces.back();
      for (Index r = 0; r < K.facet_count; ++r) {
        if (K.inequalities.row(r).dot(x.transpose()) != 0) continue;
        std::uint64_t z = 0;
        for (Index j = 0; j < K.generators.cols(); ++j)
          if (K.inequalities.row(r).dot(K.generators.col(j).transpose()) == 0)
            z |= 1ull << j;
        acc &= z;
      }
      int f = out.fa_K.find(acc);
      require(f >= 0, ErrKind::internal, "active-set face missing");
      out.section_other_to_K.push_back(f);
    }
  }
  return out;
}

bool positively_independent(const std::vector<QVec>& vecs) {
  const Index m = static_cast<Index>(vecs.size());
  const Index dim = m ? vecs[0].size() : 0;
  LinSys sys(m);
  for (Index r = 0; r < dim; ++r) {
    QVec row(m);
    for (Index j = 0; j < m; ++j) {
      require(vecs[static_cast<size_t>(j)].size() == dim, ErrKind::validation,
              "vector dimension mismatch");
      row(j) = vecs[static_cast<size_t>(j)](r);
    }
    sys.add_eq(row);
  }
  for (Index j = 0; j < m; ++j) {
    QVec row = QVec::Zero(m);
    row(j) = 1;
    sys.add_ge(row);
  }
  sys.add_gt(QVec::Ones(m));
  return !feasible(sys);
}

bool is_chamber_base(const std::vector<QVec>& vecs) {
  if (!positively_independent(vecs)) return false;
  const Index m = static_cast<Index>(vecs.size());
  const Index dim = m ? vecs[0].size() : 0;
  for (Index i = 0; i < m; ++i) {
    // is v_i a nonnegative combination of the others? (t > 0 homogenizes)
    LinSys sys(m);  // c_j for j != i plus t in slot i
    for (Index r = 0; r < dim; ++r) {
      QVec row(m);
      for (Index j = 0; j < m; ++j) row(j) = vecs[static_cast<size_t>(j)](r);
      row(i) = -vecs[static_cast<size_t>(i)](r);
      sys.add_eq(row);
    }
    for (Index j = 0; j < m; ++j) {
      QVec row = QVec::Zero(m);
      row(j) = 1;
      if (j == i)
        sys.add_gt(row);
      else
        sys.add_ge(row);
    }
    if (feasible(sys)) return false;
  }
  return true;
}

bool feasible_system(Index dim, const std::vector<QVec>& eqs,
                     const std::vector<QVec>& nonstrict, const std::vector<QVec>& strict) {
  LinSys sys(dim);
  auto push = [&](const std::vector<QVec>& vs, Rel r) {
    for (const QVec& v : vs) {
      require(v.size() == dim, ErrKind::validation, "constraint dimension mismatch");
      sys.add(v, r);
    }
  };
  push(eqs, Rel::eq);
  push(nonstrict, Rel::ge);
  push(strict, Rel::gt);
  return feasible(sys);
}

}  // namespace coxcone
