#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxcone/cartan.hpp"
#include "coxcone/linalg.hpp"

using namespace coxcone;

namespace {

QMat mat(Index n, std::initializer_list<int> vals) {
  QMat m(n, n);
  auto it = vals.begin();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

// the six-cycle with every bond unbounded
QMat six_cycle() {
  QMat a = QMat::Zero(6, 6);
  for (Index i = 0; i < 6; ++i) {
    a(i, i) = 2;
    a(i, (i + 1) % 6) = -2;
    a((i + 1) % 6, i) = -2;
  }
  return a;
}

IndexSet setv(std::initializer_list<int> one_based) {
  IndexSet s = 0;
  for (int i : one_based) s |= IndexSet(1) << (i - 1);
  return s;
}

}  // namespace

TEST_CASE("validation and Coxeter labels") {
  GCM a2 = validate(mat(2, {2, -1, -1, 2}));
  CHECK(a2.m(0, 1) == 3);
  GCM b2 = validate(mat(2, {2, -1, -2, 2}));
  CHECK(b2.m(0, 1) == 4);
  GCM g2 = validate(mat(2, {2, -1, -3, 2}));
  CHECK(g2.m(0, 1) == 6);
  GCM aff = validate(mat(2, {2, -2, -2, 2}));
  CHECK(aff.m(0, 1) == cox_m_infinity);
  GCM orth = validate(mat(2, {2, 0, 0, 2}));
  CHECK(orth.m(0, 1) == 2);

  // rational entries are fine as long as the product stays in {0,1,2,3} or >= 4
  QMat r(2, 2);
  r << 2, Rat(-1, 2), -2, 2;
  CHECK(validate(r).m(0, 1) == 3);
  QMat r2(2, 2);
  r2 << 2, Rat(-9, 2), -1, 2;
  CHECK(validate(r2).m(0, 1) == cox_m_infinity);

  GCM six = validate(six_cycle());
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 6; ++j) {
      if (i == j) continue;
      bool adj = (i + 1) % 6 == j || (j + 1) % 6 == i;
      CHECK(six.m(i, j) == (adj ? cox_m_infinity : 2));
    }

  CHECK_THROWS_AS(validate(mat(2, {1, -1, -1, 2})), Error);
  CHECK_THROWS_AS(validate(mat(2, {2, -1, 0, 2})), Error);
  CHECK_THROWS_AS(validate(mat(2, {2, 1, 1, 2})), Error);
  CHECK_THROWS_AS(validate(QMat(2, 3)), Error);
  // product 1/2 would need an irrational squared cosine
  QMat bad(2, 2);
  bad << 2, Rat(-1, 2), -1, 2;
  CHECK_THROWS_AS(validate(bad), Error);
}

TEST_CASE("components on the six-cycle") {
  GCM g = validate(six_cycle());
  CHECK(components(g, 0).empty());
  auto c = components(g, setv({1, 2, 4, 5}));
  REQUIRE(c.size() == 2);
  CHECK(((c[0] == setv({1, 2}) && c[1] == setv({4, 5})) ||
         (c[0] == setv({4, 5}) && c[1] == setv({1, 2}))));
  auto whole = components(g, full_set(6));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0] == full_set(6));
}

TEST_CASE("classification on the six-cycle follows component size") {
  GCM g = validate(six_cycle());
  for (IndexSet j = 0; j < 64; ++j) {
    Classification cl = classify(g, j);
    CHECK((cl.fin | cl.aff | cl.ind) == j);
    CHECK((cl.fin & cl.aff) == 0);
    CHECK((cl.fin & cl.ind) == 0);
    CHECK((cl.aff & cl.ind) == 0);
    CHECK(cl.nonfin == (cl.aff | cl.ind));
    for (size_t k = 0; k < cl.comps.size(); ++k) {
      int sz = set_size(cl.comps[k]);
      TypeLabel want = sz == 1 ? TypeLabel::Fin : sz == 2 ? TypeLabel::Aff : TypeLabel::Ind;
      CHECK(cl.labels[k] == want);
    }
  }
}

TEST_CASE("two by two classification") {
  CHECK(classify_connected(validate(mat(2, {2, -1, -1, 2})), 3) == TypeLabel::Fin);
  CHECK(classify_connected(validate(mat(2, {2, -2, -2, 2})), 3) == TypeLabel::Aff);
  CHECK(classify_connected(validate(mat(2, {2, -3, -2, 2})), 3) == TypeLabel::Ind);
  CHECK_THROWS_AS(classify_connected(validate(mat(2, {2, 0, 0, 2})), 0), Error);
}

TEST_CASE("affine components have corank one with a positive kernel vector") {
  GCM g = validate(six_cycle());
  for (IndexSet j = 1; j < 64; ++j) {
    Classification cl = classify(g, j);
    for (size_t k = 0; k < cl.comps.size(); ++k) {
      if (cl.labels[k] != TypeLabel::Aff) continue;
      std::vector<int> el = set_elements(cl.comps[k]);
      Index m = static_cast<Index>(el.size());
      QMat sub(m, m);
      for (Index r = 0; r < m; ++r)
        for (Index c = 0; c < m; ++c) sub(r, c) = g.a(el[static_cast<size_t>(r)], el[static_cast<size_t>(c)]);
      QMat ker = kernel_basis(sub);
      REQUIRE(ker.cols() == 1);
      QVec v = ker.col(0);
      if (v(0) < 0) v = -v;
      for (Index r = 0; r < m; ++r) CHECK(v(r) > 0);
    }
  }
}

TEST_CASE("perp, special, separated") {
  GCM g = validate(six_cycle());
  CHECK(perp(g, 0) == full_set(6));
  CHECK(perp(g, setv({1, 2})) == setv({4, 5}));
  CHECK(perp(g, full_set(6)) == 0);

  CHECK(is_special(g, 0));
  CHECK(is_special(g, setv({1, 2, 4, 5})));
  CHECK(is_special(g, full_set(6)));
  CHECK_FALSE(is_special(g, setv({1})));
  CHECK_FALSE(is_special(g, setv({1, 2, 4})));

  CHECK(separated(g, setv({1, 2}), setv({4, 5})));
  CHECK_FALSE(separated(g, setv({1, 2}), setv({3})));
  CHECK_FALSE(separated(g, setv({1, 2}), setv({2, 3})));
  CHECK(separated(g, 0, full_set(6)));
}

TEST_CASE("special sets of the six-cycle are exactly the all-nonfinite ones") {
  GCM g = validate(six_cycle());
  int count = 0;
  for (IndexSet j = 0; j < 64; ++j)
    if (is_special(g, j)) ++count;
  CHECK(count == 29);
}

TEST_CASE("monotonicity of aff-union-perp over nested special sets") {
  GCM g = validate(six_cycle());
  for (IndexSet j = 0; j < 64; ++j) {
    if (!is_special(g, j)) continue;
    IndexSet big = classify(g, j).aff | perp(g, j);
    for (IndexSet j1 = 0; j1 < 64; ++j1) {
      if ((j & j1) != j || !is_special(g, j1)) continue;
      IndexSet small = classify(g, j1).aff | perp(g, j1);
      CHECK((small & ~big) == 0);
    }
  }
}

TEST_CASE("hyperbolic classification") {
  GCM g = validate(six_cycle());
  CHECK(hyperbolic_class(g, setv({1, 2, 3})) == HypClass::hyp0);
  CHECK(hyperbolic_class(g, setv({1, 2, 3, 4})) == HypClass::hyp1);
  CHECK(hyperbolic_class(g, full_set(6)) == HypClass::neither);
  CHECK(hyperbolic_class(validate(mat(2, {2, -3, -2, 2})), 3) == HypClass::hyp0);
  CHECK_THROWS_AS(hyperbolic_class(g, setv({1, 2})), Error);        // affine
  CHECK_THROWS_AS(hyperbolic_class(g, setv({1, 2, 4, 5})), Error);  // disconnected
}

TEST_CASE("random GCMs: trichotomy and partition invariants hold") {
  std::mt19937 rng(424269);
  std::uniform_int_distribution<int> npick(2, 5), epick(0, 4);
  for (int iter = 0; iter < 40; ++iter) {
    Index n = npick(rng);
    QMat a = QMat::Zero(n, n);
    for (Index i = 0; i < n; ++i) a(i, i) = 2;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) {
        int e = epick(rng);  // 0: no bond, else -e and -1
        if (e == 0) continue;
        a(i, j) = -e;
        a(j, i) = -1;
      }
    GCM g = validate(a);
    IndexSet all = full_set(static_cast<int>(n));
    for (IndexSet j = 1; j <= all; ++j) {
      Classification cl = classify(g, j);  // internally asserts the trichotomy
      CHECK((cl.fin | cl.nonfin) == j);
      CHECK((cl.fin & cl.nonfin) == 0);
      // members of perp are separated from j
      IndexSet p = perp(g, j);
      CHECK(separated(g, j, p));
    }
  }
}
