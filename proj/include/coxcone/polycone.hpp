#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coxcone/feasible.hpp"
#include "coxcone/linalg.hpp"

// Rational polyhedral cones with both descriptions kept canonical, so that
// equal cones have byte-identical representations no matter how they were
// built. Small sizes throughout: generator counts stay under 64 and face
// lattices are materialized as generator bitsets.

namespace coxcone {

inline bool mat_equal(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

struct PolyCone {
  Index ambient_dim = 0;
  QMat generators;    // columns: extreme rays reduced mod lineality, coprime
                      // integer entries, sorted; empty for subspaces
  QMat lineality;     // columns: canonical basis of the lineality space
  QMat inequalities;  // rows: facet normals first, then +-pairs spanning the
                      // hull equalities; every generator satisfies every row
  Index facet_count = 0;

  bool operator==(const PolyCone& o) const {
    return ambient_dim == o.ambient_dim && facet_count == o.facet_count &&
           mat_equal(generators, o.generators) && mat_equal(lineality, o.lineality) &&
           mat_equal(inequalities, o.inequalities);
  }
};

struct DdResult {
  QMat rays;       // columns, canonical (reduced mod lineality, sorted)
  QMat lineality;  // columns, canonical
};

// Extreme structure of { x : ineq_rows x >= 0, eq_rows x = 0 } by restricting
// to the equality subspace, splitting off the lineality and enumerating the
// extreme rays of the pointed part.
DdResult dd_rays(const QMat& ineq_rows, const QMat& eq_rows, Index dim);

PolyCone cone_from_generators(Index dim, const QMat& gens, const QMat& lin);
PolyCone cone_from_inequalities(Index dim, const QMat& ge_rows, const QMat& eq_rows);

PolyCone cone_intersection(const PolyCone& a, const PolyCone& b);
PolyCone cone_sum(const PolyCone& a, const PolyCone& b);
// { a : a·x >= 0 on the cone }, computed in the same coordinates
PolyCone cone_dual(const PolyCone& c);

Index cone_dim(const PolyCone& c);
QMat cone_hull_basis(const PolyCone& c);
bool cone_contains(const PolyCone& c, const QVec& x);
bool cone_ri_contains(const PolyCone& c, const QVec& x);
bool cone_subset(const PolyCone& a, const PolyCone& b);
// a sample point with every generator weighted 1 (relative interior)
QVec cone_ri_point(const PolyCone& c);

struct FaceLattice {
  PolyCone cone;
  std::vector<std::uint64_t> faces;  // generator bitsets incl. the full set,
                                     // sorted by (dim, bitset)
  std::vector<int> dims;

  int find(std::uint64_t f) const;
  int top() const;
  int bottom() const;
  bool leq(int i, int j) const;
  int meet(int i, int j) const;
  int join(int i, int j) const;
  PolyCone face_cone(int i) const;
  QVec face_ri_point(int i) const;
};

FaceLattice cone_face_lattice(const PolyCone& c);

enum class TransportDir { forward, backward };

struct TransportResult {
  FaceLattice source;  // Fa(K)
  FaceLattice target;  // Fa(phi K) or Fa(phi^{-1} K)
  std::vector<int> face_map;  // source index -> target index, bijective
};

// forward: needs ker(phi) inside the lineality of K; maps F to phi F.
// backward: needs K inside im(phi); maps F to phi^{-1} F.
TransportResult transport_faces(const QMat& phi, const PolyCone& K, TransportDir dir);

enum class ModMode { sum, intersect };

struct FaceCorrespondence {
  FaceLattice fa_K;
  FaceLattice fa_other;  // Fa(K+U) for sum, Fa(K∩U) for intersect
  // sum mode: G ∈ Fa(K+U) corresponds to G∩K ∈ Fa(K); a face F of K is hit
  // iff U∩(K−F) ⊆ F−F, and then its partner is F+U.
  std::vector<int> map_other_to_K;
  std::vector<bool> K_in_image;
  std::vector<int> K_partner;  // -1 when not in the image
  // intersect mode: p(F) = F∩U is onto Fa(K∩U); i(H) = smallest face of K
  // containing H; p∘i = id.
  std::vector<int> map_K_to_other;
  std::vector<int> section_other_to_K;
};

FaceCorrespondence faces_mod_subspace(const PolyCone& K, const QMat& U, ModMode mode);

// no nonzero nonnegative combination vanishes
bool positively_independent(const std::vector<QVec>& vecs);
// positively independent and no member inside the cone of the others
bool is_chamber_base(const std::vector<QVec>& vecs);

// feasibility of a·x = 0, b·x >= 0, c·x > 0 over the rationals
bool feasible_system(Index dim, const std::vector<QVec>& eqs,
                     const std::vector<QVec>& nonstrict, const std::vector<QVec>& strict);

}  // namespace coxcone
