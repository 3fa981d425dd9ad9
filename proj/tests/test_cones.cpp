#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "coxcone/polycone.hpp"

using namespace coxcone;

namespace {

QMat mat(Index rows, Index cols, std::initializer_list<int> vals) {
  QMat m(rows, cols);
  auto it = vals.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

QVec vec(std::initializer_list<int> vals) {
  QVec v(static_cast<Index>(vals.size()));
  Index i = 0;
  for (int x : vals) v(i++) = x;
  return v;
}

QMat none(Index dim) { return QMat(0, dim); }
QMat nocols(Index dim) { return QMat(dim, 0); }

// independent feasibility route for homogeneous systems: relax the strict
// rows, take the extreme rays of the relaxed cone, and demand a ray with
// positive value for every strict row (summing such rays then satisfies all
// of them at once)
bool dd_feasible(Index dim, const QMat& eqs, const QMat& ges, const QMat& gts) {
  QMat rows(ges.rows() + gts.rows(), dim);
  if (ges.rows()) rows.topRows(ges.rows()) = ges;
  if (gts.rows()) rows.bottomRows(gts.rows()) = gts;
  DdResult dd = dd_rays(rows, eqs, dim);
  for (Index k = 0; k < gts.rows(); ++k) {
    bool hit = false;
    for (Index j = 0; j < dd.rays.cols() && !hit; ++j)
      if (gts.row(k).dot(dd.rays.col(j).transpose()) > 0) hit = true;
    if (!hit) return false;
  }
  return true;
}

std::vector<QVec> to_cols(const QMat& m) {
  std::vector<QVec> out;
  for (Index j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

bool proportional_pos(const QVec& a, const QVec& b) {
  // a = c b for some c > 0
  Index p = -1;
  for (Index i = 0; i < b.size(); ++i)
    if (b(i) != 0) {
      p = i;
      break;
    }
  if (p < 0) return a.isZero(0);
  if (a(p) == 0 || (a(p) > 0) != (b(p) > 0)) return false;
  Rat c = a(p) / b(p);
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != c * b(i)) return false;
  return true;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(rat_parse("3/4") == Rat(3, 4));
  CHECK(rat_parse("-6/4") == Rat(-3, 2));
  CHECK(rat_parse("5") == Rat(5));
  CHECK(rat_str(Rat(-3, 2)) == "-3/2");
  CHECK(rat_str(Rat(7)) == "7");
  CHECK_THROWS_AS(rat_parse("1/0"), Error);
  CHECK_THROWS_AS(rat_parse("x"), Error);
  CHECK_THROWS_AS(rat_parse(""), Error);
}

TEST_CASE("rref, rank, kernel, solve") {
  QMat m = mat(2, 2, {1, 2, 2, 4});
  auto r = rref(m);
  CHECK(r.pivots == std::vector<Index>{0});
  CHECK(r.mat(0, 0) == 1);
  CHECK(r.mat(0, 1) == 2);
  CHECK(r.mat(1, 0) == 0);
  CHECK(r.mat(1, 1) == 0);
  CHECK(rank_of(m) == 1);

  QMat k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).isZero(0));
  CHECK(k(1, 0) == 1);  // free coordinate normalized to 1

  QMat a = mat(2, 2, {1, 1, 0, 1});
  auto x = solve_particular(a, vec({3, 2}));
  REQUIRE(x.has_value());
  CHECK(a * *x == vec({3, 2}));
  CHECK_FALSE(solve_particular(mat(2, 1, {1, 0}), vec({0, 1})).has_value());
}

TEST_CASE("span helpers") {
  QMat cols = mat(2, 3, {2, 1, 0, 4, 2, 1});
  QMat s = span_basis(cols);
  CHECK(s.cols() == 2);
  CHECK(span_equal(s, mat(2, 2, {1, 0, 0, 1})));

  CHECK(in_span(mat(3, 1, {1, 2, 0}), vec({2, 4, 0})));
  CHECK_FALSE(in_span(mat(3, 1, {1, 2, 0}), vec({0, 0, 1})));
  CHECK(span_contained(mat(3, 1, {1, 0, 0}), mat(3, 2, {1, 0, 0, 1, 0, 0})));

  QMat inter = span_intersection(mat(3, 2, {1, 0, 0, 1, 0, 0}), mat(3, 1, {1, 1, 0}));
  CHECK(inter.cols() == 1);
  CHECK((proportional_pos(inter.col(0), vec({1, 1, 0})) ||
         proportional_pos(QVec(-inter.col(0)), vec({1, 1, 0}))));

  QMat ann = annihilator_basis(mat(3, 1, {1, 0, 0}));
  CHECK(ann.cols() == 2);
  CHECK((mat(3, 1, {1, 0, 0}).transpose() * ann).isZero(0));

  CHECK(completing_unit_columns(mat(2, 1, {0, 1}), 2) == std::vector<Index>{0});
  CHECK(reduce_mod_span(vec({3, 4}), mat(2, 1, {1, 0})) == vec({0, 4}));
  CHECK(integerize(QVec(vec({1, 0})) / 2 + QVec(vec({0, 1})) / 3) == vec({3, 2}));
  CHECK(integerize(vec({-2, -4})) == vec({-1, -2}));
  CHECK(integerize_line(vec({-2, -4})) == vec({1, 2}));
}

TEST_CASE("feasibility by elimination") {
  LinSys a(1);
  a.add_gt(vec({1}));
  auto pa = feasible_point(a);
  REQUIRE(pa.has_value());
  CHECK((*pa)(0) > 0);

  LinSys b(1);
  b.add_ge(vec({1}));
  b.add_ge(vec({-1}));
  CHECK(feasible(b));
  b.add_gt(vec({1}));
  CHECK_FALSE(feasible(b));

  LinSys c(2);
  c.add_eq(vec({1, 1}));
  c.add_ge(vec({1, 0}));
  c.add_gt(vec({0, 1}));
  CHECK_FALSE(feasible(c));

  LinSys d(2);
  d.add_eq(vec({1, -1}));
  d.add_ge(vec({1, 0}));
  d.add_gt(vec({1, 1}));
  auto pd = feasible_point(d);
  REQUIRE(pd.has_value());
  CHECK((*pd)(0) == (*pd)(1));
  CHECK((*pd)(0) + (*pd)(1) > 0);
}

TEST_CASE("feasibility matches the double-description route") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> ent(-2, 2), nd(1, 3), mc(1, 5), relpick(0, 3);
  for (int iter = 0; iter < 200; ++iter) {
    Index dim = nd(rng);
    Index m = mc(rng);
    std::vector<QVec> eqs, ges, gts;
    LinSys sys(dim);
    for (Index r = 0; r < m; ++r) {
      QVec row(dim);
      for (Index j = 0; j < dim; ++j) row(j) = ent(rng);
      int rel = relpick(rng);
      if (rel == 0) {
        eqs.push_back(row);
        sys.add_eq(row);
      } else if (rel <= 2) {
        ges.push_back(row);
        sys.add_ge(row);
      } else {
        gts.push_back(row);
        sys.add_gt(row);
      }
    }
    auto rows_of = [&](const std::vector<QVec>& vs) {
      QMat out(static_cast<Index>(vs.size()), dim);
      for (size_t i = 0; i < vs.size(); ++i) out.row(static_cast<Index>(i)) = vs[i].transpose();
      return out;
    };
    bool fm = feasible(sys);
    bool dd = dd_feasible(dim, rows_of(eqs), rows_of(ges), rows_of(gts));
    CHECK(fm == dd);
    if (fm) {
      auto p = feasible_point(sys);
      REQUIRE(p.has_value());
      for (const QVec& e : eqs) CHECK(e.dot(*p) == 0);
      for (const QVec& g : ges) CHECK(g.dot(*p) >= 0);
      for (const QVec& g : gts) CHECK(g.dot(*p) > 0);
    }
  }
}

TEST_CASE("octant cone and its Boolean face lattice") {
  PolyCone oct = cone_from_inequalities(3, mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}), none(3));
  CHECK(oct.generators.cols() == 3);
  CHECK(oct.lineality.cols() == 0);
  CHECK(oct.facet_count == 3);
  CHECK(cone_dim(oct) == 3);

  PolyCone viag = cone_from_generators(3, mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}), nocols(3));
  CHECK(oct == viag);
  CHECK(cone_dual(oct) == oct);

  FaceLattice lat = cone_face_lattice(oct);
  REQUIRE(lat.faces.size() == 8);
  CHECK(lat.dims.front() == 0);
  CHECK(lat.dims.back() == 3);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      CHECK(lat.faces[static_cast<size_t>(lat.meet(i, j))] ==
            (lat.faces[static_cast<size_t>(i)] & lat.faces[static_cast<size_t>(j)]));
      CHECK(lat.faces[static_cast<size_t>(lat.join(i, j))] ==
            (lat.faces[static_cast<size_t>(i)] | lat.faces[static_cast<size_t>(j)]));
    }
}

TEST_CASE("degenerate cones") {
  PolyCone zero = cone_from_generators(3, nocols(3), nocols(3));
  CHECK(zero.generators.cols() == 0);
  CHECK(zero.lineality.cols() == 0);
  CHECK(cone_dim(zero) == 0);
  CHECK(cone_contains(zero, vec({0, 0, 0})));
  CHECK_FALSE(cone_contains(zero, vec({1, 0, 0})));
  CHECK(cone_ri_contains(zero, vec({0, 0, 0})));
  FaceLattice zl = cone_face_lattice(zero);
  CHECK(zl.faces.size() == 1);
  CHECK(zl.top() == zl.bottom());

  PolyCone full = cone_from_generators(2, nocols(2), mat(2, 2, {1, 0, 0, 1}));
  CHECK(full.generators.cols() == 0);
  CHECK(full.lineality.cols() == 2);
  CHECK(full.inequalities.rows() == 0);
  CHECK(cone_dim(full) == 2);

  PolyCone half = cone_from_inequalities(2, mat(1, 2, {0, 1}), none(2));
  CHECK(half.generators.cols() == 1);
  CHECK(half.generators.col(0) == vec({0, 1}));
  CHECK(half.lineality.cols() == 1);
  CHECK(half.facet_count == 1);
  CHECK(cone_dual(half) == cone_from_generators(2, mat(2, 1, {0, 1}), nocols(2)));
  FaceLattice hl = cone_face_lattice(half);
  CHECK(hl.faces.size() == 2);
  CHECK(hl.dims == std::vector<int>{1, 2});
}

TEST_CASE("six-cycle relation cone has exactly the predicted faces") {
  // relations among the six generators: kernel spanned by these two rows
  QMat rel = mat(2, 6, {1, 2, 1, -1, -2, -1, 1, 0, -1, -1, 0, 1});
  QMat h = kernel_basis(rel).transpose();  // 4 x 6, columns are the generators
  REQUIRE(h.rows() == 4);
  REQUIRE(h.cols() == 6);
  REQUIRE(rank_of(h) == 4);
  REQUIRE(span_equal(kernel_basis(h), rel.transpose()));

  PolyCone k = cone_from_generators(4, h, nocols(4));
  REQUIRE(k.lineality.cols() == 0);
  REQUIRE(k.generators.cols() == 6);

  // match canonical generator columns back to input indices
  std::vector<int> perm(6, -1);
  for (Index j = 0; j < 6; ++j) {
    for (Index i = 0; i < 6; ++i)
      if (proportional_pos(k.generators.col(j), h.col(i))) perm[static_cast<size_t>(j)] = static_cast<int>(i);
    REQUIRE(perm[static_cast<size_t>(j)] >= 0);
  }

  FaceLattice lat = cone_face_lattice(k);
  std::set<std::set<int>> got;
  for (std::uint64_t f : lat.faces) {
    std::set<int> s;
    for (Index j = 0; j < 6; ++j)
      if ((f >> j) & 1) s.insert(perm[static_cast<size_t>(j)] + 1);
    got.insert(s);
  }
  std::set<std::set<int>> want = {
      {},
      {1}, {2}, {3}, {4}, {5}, {6},
      {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 6},
      {1, 3, 5}, {2, 4, 6},
      {1, 2, 4, 5}, {2, 3, 5, 6}, {1, 3, 4, 6},
      {1, 2, 3, 4, 5, 6}};
  CHECK(got.size() == 22);
  CHECK(got == want);

  // smallest face containing generators 1 and 2 picks up 4 and 5 as well
  auto face_of = [&](std::set<int> s) {
    std::uint64_t f = 0;
    for (Index j = 0; j < 6; ++j)
      if (s.count(perm[static_cast<size_t>(j)] + 1)) f |= 1ull << j;
    return lat.find(f);
  };
  int j12 = lat.join(face_of({1}), face_of({2}));
  CHECK(lat.faces[static_cast<size_t>(j12)] ==
        lat.faces[static_cast<size_t>(face_of({1, 2, 4, 5}))]);
}

TEST_CASE("random cones: canonical forms agree across construction routes") {
  std::mt19937 rng(77003);
  std::uniform_int_distribution<int> ent(-3, 3), dpick(2, 4), gpick(1, 5), coin(0, 1);
  for (int iter = 0; iter < 60; ++iter) {
    Index dim = dpick(rng);
    Index ng = gpick(rng);
    QMat gens(dim, ng);
    for (Index i = 0; i < dim; ++i)
      for (Index j = 0; j < ng; ++j) gens(i, j) = ent(rng);
    QMat lin(dim, coin(rng));
    for (Index i = 0; i < dim; ++i)
      for (Index j = 0; j < lin.cols(); ++j) lin(i, j) = ent(rng);
    PolyCone k = cone_from_generators(dim, gens, lin);

    CHECK(cone_from_generators(dim, k.generators, k.lineality) == k);
    CHECK(cone_from_inequalities(dim, k.inequalities, none(dim)) == k);
    CHECK(cone_dual(cone_dual(k)) == k);
    for (Index j = 0; j < ng; ++j) CHECK(cone_contains(k, gens.col(j)));
    CHECK(cone_contains(k, cone_ri_point(k)));
    CHECK(cone_ri_contains(k, cone_ri_point(k)));

    FaceLattice lat = cone_face_lattice(k);
    int nf = static_cast<int>(lat.faces.size());
    for (int i = 0; i < nf; ++i) {
      PolyCone fi = lat.face_cone(i);
      CHECK(cone_subset(fi, k));
      CHECK(cone_ri_contains(fi, lat.face_ri_point(i)));
      for (int j = 0; j < nf; ++j) {
        PolyCone fj = lat.face_cone(j);
        CHECK(lat.leq(i, j) == cone_subset(fi, fj));
        CHECK(lat.face_cone(lat.meet(i, j)) == cone_intersection(fi, fj));
        if (lat.leq(i, j)) CHECK(lat.dims[static_cast<size_t>(i)] <= lat.dims[static_cast<size_t>(j)]);
      }
    }
  }
}

TEST_CASE("transport along a map, forward and backward") {
  QMat quad = mat(2, 2, {1, 0, 0, 1});
  PolyCone k2 = cone_from_generators(2, quad, nocols(2));

  // invertible shear: lattices correspond one to one
  TransportResult tr = transport_faces(mat(2, 2, {1, 1, 0, 1}), k2, TransportDir::forward);
  REQUIRE(tr.source.faces.size() == 4);
  REQUIRE(tr.target.faces.size() == 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      CHECK(tr.source.leq(static_cast<int>(i), static_cast<int>(j)) ==
            tr.target.leq(tr.face_map[i], tr.face_map[j]));

  // collapse the lineality of a half plane onto a ray
  PolyCone half = cone_from_inequalities(2, mat(1, 2, {0, 1}), none(2));
  TransportResult pr = transport_faces(mat(1, 2, {0, 1}), half, TransportDir::forward);
  CHECK(pr.source.faces.size() == 2);
  CHECK(pr.target.faces.size() == 2);
  CHECK(pr.target.cone.ambient_dim == 1);

  // kernel sticking out of the lineality is rejected
  CHECK_THROWS_AS(transport_faces(mat(1, 2, {1, 0}), k2, TransportDir::forward), Error);

  // pull the quadrant inside a coordinate plane back to the plane
  QMat embed = mat(3, 2, {1, 0, 0, 1, 0, 0});
  PolyCone k3 = cone_from_generators(3, embed * quad, nocols(3));
  TransportResult bk = transport_faces(embed, k3, TransportDir::backward);
  REQUIRE(bk.source.faces.size() == 4);
  REQUIRE(bk.target.faces.size() == 4);
  CHECK(bk.target.cone == k2);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      CHECK(bk.source.leq(static_cast<int>(i), static_cast<int>(j)) ==
            bk.target.leq(bk.face_map[i], bk.face_map[j]));

  // a cone outside the image of the map is rejected
  PolyCone bad = cone_from_generators(3, mat(3, 2, {1, 0, 0, 0, 0, 1}), nocols(3));
  CHECK_THROWS_AS(transport_faces(embed, bad, TransportDir::backward), Error);
}

TEST_CASE("faces modulo a summand subspace") {
  PolyCone k = cone_from_generators(2, mat(2, 2, {1, 0, 0, 1}), nocols(2));
  FaceCorrespondence fc = faces_mod_subspace(k, mat(2, 1, {1, 0}), ModMode::sum);
  REQUIRE(fc.fa_K.faces.size() == 4);
  REQUIRE(fc.fa_other.faces.size() == 2);

  int hits = 0;
  for (size_t fi = 0; fi < 4; ++fi) {
    if (!fc.K_in_image[fi]) {
      CHECK(fc.K_partner[fi] == -1);
      continue;
    }
    ++hits;
    // partner and restriction invert each other
    CHECK(fc.map_other_to_K[static_cast<size_t>(fc.K_partner[fi])] == static_cast<int>(fi));
  }
  CHECK(hits == 2);
  // the ray spanning U and the full quadrant are the two faces hit
  for (size_t fi = 0; fi < 4; ++fi) {
    PolyCone f = fc.fa_K.face_cone(static_cast<int>(fi));
    bool expect = f == cone_from_generators(2, mat(2, 1, {1, 0}), nocols(2)) ||
                  f == k;
    CHECK(fc.K_in_image[fi] == expect);
  }
}

TEST_CASE("faces modulo an intersecting subspace") {
  PolyCone k = cone_from_generators(2, mat(2, 2, {1, 0, 0, 1}), nocols(2));

  for (QMat u : {mat(2, 1, {1, 1}), mat(2, 1, {1, 0})}) {
    FaceCorrespondence fc = faces_mod_subspace(k, u, ModMode::intersect);
    REQUIRE(fc.fa_other.faces.size() == 2);
    // p is onto and p∘i = id
    std::set<int> seen(fc.map_K_to_other.begin(), fc.map_K_to_other.end());
    CHECK(seen.size() == fc.fa_other.faces.size());
    for (size_t h = 0; h < fc.fa_other.faces.size(); ++h)
      CHECK(fc.map_K_to_other[static_cast<size_t>(fc.section_other_to_K[h])] ==
            static_cast<int>(h));
  }
}

TEST_CASE("random subspace correspondences") {
  std::mt19937 rng(91);
  std::uniform_int_distribution<int> ent(-2, 2), gpick(2, 5);
  int done = 0;
  while (done < 25) {
    QMat gens(3, gpick(rng));
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < gens.cols(); ++j) gens(i, j) = ent(rng);
    QVec u(3);
    for (Index i = 0; i < 3; ++i) u(i) = ent(rng);
    if (u.isZero(0)) continue;
    ++done;
    PolyCone k = cone_from_generators(3, gens, nocols(3));
    QMat umat(3, 1);
    umat.col(0) = u;

    FaceCorrespondence sum = faces_mod_subspace(k, umat, ModMode::sum);
    std::set<int> img(sum.map_other_to_K.begin(), sum.map_other_to_K.end());
    CHECK(img.size() == sum.fa_other.faces.size());  // injective on Fa(K+U)
    for (size_t fi = 0; fi < sum.fa_K.faces.size(); ++fi) {
      CHECK(sum.K_in_image[fi] == (img.count(static_cast<int>(fi)) > 0));
      if (sum.K_in_image[fi])
        CHECK(sum.map_other_to_K[static_cast<size_t>(sum.K_partner[fi])] ==
              static_cast<int>(fi));
    }

    FaceCorrespondence cap = faces_mod_subspace(k, umat, ModMode::intersect);
    for (size_t h = 0; h < cap.fa_other.faces.size(); ++h)
      CHECK(cap.map_K_to_other[static_cast<size_t>(cap.section_other_to_K[h])] ==
            static_cast<int>(h));
    // p preserves order
    for (size_t a = 0; a < cap.fa_K.faces.size(); ++a)
      for (size_t b = 0; b < cap.fa_K.faces.size(); ++b)
        if (cap.fa_K.leq(static_cast<int>(a), static_cast<int>(b)))
          CHECK(cap.fa_other.leq(cap.map_K_to_other[a], cap.map_K_to_other[b]));
    // the section hits exactly the faces whose relative interior meets U
    for (size_t fi = 0; fi < cap.fa_K.faces.size(); ++fi) {
      PolyCone f = cap.fa_K.face_cone(static_cast<int>(fi));
      const Index g = f.generators.cols(), l = f.lineality.cols();
      LinSys sys(g + l + 1);
      for (Index i = 0; i < 3; ++i) {
        QVec row(g + l + 1);
        for (Index j = 0; j < g; ++j) row(j) = f.generators(i, j);
        for (Index j = 0; j < l; ++j) row(g + j) = f.lineality(i, j);
        row(g + l) = -u(i);
        sys.add_eq(row);
      }
      for (Index j = 0; j < g; ++j) {
        QVec row = QVec::Zero(g + l + 1);
        row(j) = 1;
        sys.add_gt(row);
      }
      bool meets = feasible(sys);
      bool in_section = false;
      for (int s : cap.section_other_to_K)
        if (s == static_cast<int>(fi)) in_section = true;
      CHECK(meets == in_section);
    }
  }
}

TEST_CASE("positive independence and chamber bases") {
  CHECK(positively_independent({}));
  CHECK(positively_independent({vec({1, 0})}));
  CHECK_FALSE(positively_independent({vec({0, 0})}));
  CHECK(positively_independent({vec({1, 0}), vec({1, 0})}));
  CHECK_FALSE(positively_independent({vec({1, 0}), vec({-1, 0})}));
  CHECK_FALSE(positively_independent({vec({1, 0}), vec({-1, 1}), vec({0, -1})}));

  CHECK(is_chamber_base({vec({1, 0})}));
  CHECK(is_chamber_base({vec({1, 0}), vec({0, 1})}));
  CHECK(is_chamber_base({vec({1, 0}), vec({-1, 1})}));
  CHECK_FALSE(is_chamber_base({vec({1, 0}), vec({1, 0})}));
  CHECK_FALSE(is_chamber_base({vec({1, 0}), vec({0, 1}), vec({1, 1})}));
  CHECK_FALSE(is_chamber_base({vec({1, 0}), vec({0, 1}), vec({-1, -1})}));
  CHECK_FALSE(is_chamber_base({vec({0, 0})}));

  // random cross-check against the cone characterizations
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> ent(-2, 2), mpick(1, 4);
  for (int iter = 0; iter < 80; ++iter) {
    Index m = mpick(rng);
    std::vector<QVec> vs;
    QMat gens(3, m);
    for (Index j = 0; j < m; ++j) {
      QVec v(3);
      for (Index i = 0; i < 3; ++i) v(i) = ent(rng);
      vs.push_back(v);
      gens.col(j) = v;
    }
    PolyCone k = cone_from_generators(3, gens, nocols(3));
    bool allnz = true;
    for (const QVec& v : vs)
      if (v.isZero(0)) allnz = false;
    CHECK(positively_independent(vs) == (allnz && k.lineality.cols() == 0));

    bool cb = allnz && positively_independent(vs);
    if (cb)
      for (size_t i = 0; i < vs.size() && cb; ++i) {
        QMat others(3, m - 1);
        Index c = 0;
        for (size_t j = 0; j < vs.size(); ++j)
          if (j != i) others.col(c++) = vs[j];
        if (cone_contains(cone_from_generators(3, others, nocols(3)), vs[i])) cb = false;
      }
    CHECK(is_chamber_base(vs) == cb);
  }
}

TEST_CASE("feasible_system entry point") {
  CHECK(feasible_system(2, {vec({1, -1})}, {vec({1, 0})}, {vec({1, 1})}));
  CHECK_FALSE(feasible_system(2, {vec({1, 1})}, {vec({1, 0})}, {vec({0, 1})}));
  CHECK_THROWS_AS(feasible_system(2, {vec({1, 0, 0})}, {}, {}), Error);
}
